#pragma once

// The MCM decision procedure and what is built on it.
//
// A stabilizer weight is MCM iff every member of its family, shifted by rho,
// is singular or has l(w) in {0, d - 1}: cohomology may only sit at the two
// ends of 0..d-1 on G/P (d = dim O_min). Beyond the scan range every member
// is regular with l(w) in {0, d - 1}, so a finite scan decides.

#include "mcm/bwb.hpp"
#include "mcm/criteria.hpp"
#include "mcm/families.hpp"
#include "mcm/rootsys.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcm {

struct TraceEntry {
  long param = 0;
  RationalVector weight;
  CohomologyProfile profile;
};

struct Violation {
  long param = 0;
  CohomologyProfile profile;
};

struct McmVerdict {
  bool is_mcm = true;
  long d = 0;
  ParamInterval range;
  /// Every admissible param of the range, in increasing order (empty when
  /// the trace was not requested).
  std::vector<TraceEntry> trace;
  std::optional<Violation> first_violation;
};

/// Holds the root datum of one type so that repeated queries do not rebuild
/// it. Immutable after construction; safe to share between threads.
class McmOracle {
 public:
  explicit McmOracle(const SimpleType& kind);

  const SimpleType& kind() const { return rs_.kind; }
  const RootSystem& roots() const { return rs_; }
  const LeviData& levi() const { return levi_; }
  long d() const { return d_; }

  /// Throws InvalidArgument if w is not a dominant weight of the stabilizer,
  /// InternalError if the monotone regime beyond the scan range fails.
  McmVerdict decide(const StabilizerWeight& w, bool keep_trace = true) const;

  /// For exceptional types: the coroot-expansion reduction. With
  /// Lambda = lambda + (j/2) theta + rho, k = <Lambda, alpha_m^vee> runs over
  /// all integers and <Lambda, beta^vee> = c_m(beta) k + s(beta) with
  /// s(beta) = sum_{i in I} c_i(beta)(y_i + 1). The weight is MCM iff every
  /// integer strictly between min_beta(-s/c_m) and 0 occurs among the -s/c_m.
  bool exceptional_quick_check(const std::vector<long>& coeffs) const;

 private:
  RootSystem rs_;
  LeviData levi_;
  long d_ = 0;
  std::size_t m_ = 0;  // the simple root outside the Levi (exceptional types)
};

McmVerdict mcm_oracle(const SimpleType& kind, const StabilizerWeight& w);

/// Raised when enumeration cannot certify its table (boundary shell still
/// occupied at the ceiling).
class IncompleteEnumeration : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Classical boxes and the closed-form cross-check.

/// Dominant stabilizer weights whose raw coordinates all satisfy |x| <= box.
/// A-type weights are canonicalized (lambda_{n-1} = 0) and deduplicated; spin
/// selects the half-integral Levi coordinates for B and D. Sorted.
std::vector<StabilizerWeight> classical_box(const SimpleType& kind, const Rational& box,
                                            bool spin = false);

struct Disagreement {
  StabilizerWeight weight;
  bool closed_form = false;
  bool oracle = false;
};

struct CrosscheckReport {
  SimpleType kind;
  Rational box;
  bool spin = false;
  std::size_t tested = 0;
  std::vector<Disagreement> disagreements;
};

/// Compares the closed form with the oracle on every weight of the box.
/// jobs = 0 means one worker per hardware thread.
CrosscheckReport crosscheck(const SimpleType& kind, const Rational& box, bool spin = false,
                            unsigned jobs = 1);
std::vector<CrosscheckReport> crosscheck(Family family, int rank_lo, int rank_hi,
                                         const Rational& box, bool spin = false,
                                         unsigned jobs = 1);

// ---------------------------------------------------------------------------
// Tables.

struct McmTable {
  SimpleType kind;
  long coeff_bound = 0;
  std::string levi_type;
  /// Classical tables only list the weights of a box.
  bool box_relative = false;
  /// Exceptional tables: the bound reaches every coefficient allowed by the
  /// necessary condition sum_{i in I} c_i(theta^vee)(y_i + 1) <= 2(d - 1), so
  /// the table is provably complete.
  bool exhaustive = false;
  std::vector<std::vector<long>> weights;

  std::size_t count() const { return weights.size(); }
  friend bool operator==(const McmTable&, const McmTable&) = default;
};

struct EnumerateOptions {
  long coeff_bound = 16;
  /// The bound is doubled while the boundary shell is occupied, up to here.
  long ceiling = 64;
  unsigned jobs = 1;
};

/// Every dominant varpi-coefficient tuple with entries <= coeff_bound whose
/// sheaf is MCM, sorted. Candidates are screened with the coroot-expansion
/// check and each accepted tuple is confirmed by the full oracle.
McmTable enumerate_mcm(const SimpleType& kind, const EnumerateOptions& options = {});

/// Box-relative table of the MCM weights of a classical type (integral
/// lattice), columns as in table_columns.
McmTable enumerate_classical(const SimpleType& kind, long box, unsigned jobs = 1);

/// Largest value each coefficient can take in the region cut out by the
/// necessary condition (exceptional types).
std::vector<long> exceptional_region_bounds(const McmOracle& oracle);

/// Column labels: a_i / b_i / c_i over varpi_i for exceptional types,
/// lambda..., lambda_0... for classical ones.
std::vector<std::string> table_columns(const SimpleType& kind);

enum class TableFormat { Json, Csv, Text };
TableFormat parse_table_format(std::string_view name);
const char* format_extension(TableFormat f);

std::string emit_table(const McmTable& table, TableFormat format);
/// Inverse of emit_table for json and csv.
McmTable parse_table(const std::string& document, TableFormat format);

/// Writes E6/E7/E8/F4/G2 in all three formats into dir; returns the paths.
std::vector<std::string> write_tables(const std::string& dir, const EnumerateOptions& options);

/// jobs = 0 becomes the number of hardware threads (at least 1).
unsigned resolve_jobs(unsigned jobs);

/// True iff the profile is allowed in an MCM family (singular, H^0, H^{d-1}).
bool profile_allowed(const CohomologyProfile& p, long d);

}  // namespace mcm
