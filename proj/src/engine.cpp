#include "mcm/engine.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace mcm {

bool profile_allowed(const CohomologyProfile& p, long d) {
  if (p.is_singular()) return true;
  const auto q = static_cast<long>(p.degree);
  return q == 0 || q == d - 1;
}

McmOracle::McmOracle(const SimpleType& kind)
    : rs_(build_root_system(kind)), levi_(levi_subsystem(rs_)), d_(min_orbit_dim(rs_, levi_)) {
  if (is_exceptional(kind)) {
    if (levi_.non_levi_simple_indices.size() != 1)
      throw InternalError("expected a single non-Levi simple root in " + to_string(kind));
    m_ = levi_.non_levi_simple_indices[0];
  }
}

McmVerdict McmOracle::decide(const StabilizerWeight& w, bool keep_trace) const {
  const WeightFamily family = weight_family(rs_, levi_, w);
  McmVerdict v;
  v.d = d_;
  v.range = scan_range(rs_, levi_, family);

  auto fail = [&](long j, const CohomologyProfile& p, const char* what) {
    throw InternalError(std::string(what) + " for " + to_string(rs_.kind) + " weight " +
                        to_string(w) + " at " + family.parameter_name + " = " +
                        std::to_string(j) + ": " + to_string(p));
  };

  // Beyond the range the profile must be H^0 or H^{d-1}.
  for (long j : {family.admissible_at_or_below(v.range.lo - 1),
                 family.admissible_at_or_above(v.range.hi + 1)}) {
    const auto p = cohomology_profile(rs_, family.member(j));
    if (p.is_singular() || !profile_allowed(p, d_)) fail(j, p, "scan range too small");
  }

  const long first = family.admissible_at_or_above(v.range.lo);
  const long last = family.admissible_at_or_below(v.range.hi);
  for (long j = first; j <= last; j += 2) {
    RationalVector member = family.member(j);
    const auto p = cohomology_profile(rs_, member);
    if (!profile_allowed(p, d_) && !v.first_violation) {
      v.is_mcm = false;
      v.first_violation = Violation{j, p};
    }
    if (keep_trace) v.trace.push_back({j, std::move(member), p});
  }

  // The extreme members are already in the monotone regime, oriented by the
  // sign of <direction, theta^vee>: the positive end carries H^0.
  const bool increasing = sgn(dot(family.direction, rs_.theta_covector)) > 0;
  const auto p_first = cohomology_profile(rs_, family.member(first));
  const auto p_last = cohomology_profile(rs_, family.member(last));
  const std::size_t top = static_cast<std::size_t>(d_ - 1);
  if (!p_first.concentrated_in(increasing ? top : 0)) fail(first, p_first, "bad orientation");
  if (!p_last.concentrated_in(increasing ? 0 : top)) fail(last, p_last, "bad orientation");
  return v;
}

bool McmOracle::exceptional_quick_check(const std::vector<long>& coeffs) const {
  // y_i + 1 = <Lambda, alpha_i^vee> for Levi simple roots, independent of j.
  std::vector<long> shifted(rs_.rank(), 0);
  for (std::size_t k = 0; k < levi_.rank(); ++k)
    shifted[levi_.simple_indices[k]] = coeffs[k] + 1;
  // Collect k_beta = -s_beta / c_m for complement roots (c_m > 0 there).
  std::vector<char> hit;
  long lowest = 0;
  std::vector<std::pair<long, long>> fractions;  // (-s, c_m)
  for (std::size_t b : levi_.complement_indices) {
    const auto& c = rs_.coroot_matrix[b];
    long s = 0;
    for (std::size_t i = 0; i < rs_.rank(); ++i)
      if (i != m_) s += c[i] * shifted[i];
    fractions.emplace_back(-s, c[m_]);
  }
  // Every integer k with min(-s/c_m) < k < 0 must be a zero of some pairing.
  for (const auto& [num, den] : fractions) {
    // floor(num / den) for den > 0.
    long fl = num >= 0 ? num / den : -((-num + den - 1) / den);
    lowest = std::min(lowest, fl);
  }
  hit.assign(static_cast<std::size_t>(-lowest) + 1, 0);
  for (const auto& [num, den] : fractions)
    if (num % den == 0 && num < 0) hit[static_cast<std::size_t>(-num / den)] = 1;
  // The integers strictly above the lowest zero are exactly those > lowest
  // (lowest is the floor of that zero).
  for (long k = -1; k > lowest; --k)
    if (!hit[static_cast<std::size_t>(-k)]) return false;
  return true;
}

McmVerdict mcm_oracle(const SimpleType& kind, const StabilizerWeight& w) {
  return McmOracle(kind).decide(w);
}

// ===========================================================================
// Parallel evaluation.

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// out[i] = fn(i) on `jobs` workers pulling indices from a shared counter. The
// result order is the index order, whatever the scheduling. The first
// exception thrown by any worker is rethrown here.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, Fn fn) {
  std::vector<T> out(n);
  const unsigned workers = static_cast<unsigned>(
      std::min<std::size_t>(resolve_jobs(jobs), std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  std::mutex mu;
  std::exception_ptr error;
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n) return;
      try {
        out[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        next.store(n);
        return;
      }
    }
  };
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  return out;
}

// All nonincreasing sequences of length len drawn from values (given in
// ascending order), in lexicographic order.
void nonincreasing_sequences(const std::vector<Rational>& values, std::size_t len,
                             std::vector<std::vector<Rational>>& out) {
  std::vector<std::size_t> idx(len, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t cap) {
    if (pos == len) {
      std::vector<Rational> seq(len);
      for (std::size_t k = 0; k < len; ++k) seq[k] = values[idx[k]];
      out.push_back(std::move(seq));
      return;
    }
    for (std::size_t v = 0; v <= cap; ++v) {
      idx[pos] = v;
      rec(pos + 1, v);
    }
  };
  if (values.empty()) {
    if (len == 0) out.emplace_back();
    return;
  }
  rec(0, values.size() - 1);
}

std::vector<Rational> lattice_values(const Rational& box, bool half) {
  std::vector<Rational> values;
  if (half) {
    const long top = to_long(floor(Rational(2) * box));
    for (long k = -top; k <= top; ++k)
      if (k % 2 != 0) values.push_back(make_rational(k, 2));
  } else {
    const long top = to_long(floor(box));
    for (long k = -top; k <= top; ++k) values.push_back(Rational(k));
  }
  return values;
}

std::vector<long> to_longs(const std::vector<Rational>& xs) {
  std::vector<long> out;
  for (const auto& x : xs) out.push_back(to_long(x));
  return out;
}

}  // namespace

// ===========================================================================
// Classical boxes and the cross-check.

std::vector<StabilizerWeight> classical_box(const SimpleType& kind, const Rational& box,
                                            bool spin) {
  if (!is_classical(kind))
    throw InvalidArgument("a box of weights needs a classical type, got " + to_string(kind));
  if (sgn(box) < 0) throw InvalidArgument("box must be >= 0, got " + to_string(box));
  if (spin && kind.family != Family::B && kind.family != Family::D)
    throw InvalidArgument("the Spin sublattice exists only for types B and D");
  const int n = kind.rank;
  const long top = to_long(floor(box));
  std::vector<StabilizerWeight> out;

  switch (kind.family) {
    case Family::A: {
      std::vector<std::vector<Rational>> seqs;
      nonincreasing_sequences(lattice_values(box, false), static_cast<std::size_t>(n - 1), seqs);
      std::set<std::pair<long, std::vector<long>>> seen;
      for (long lambda = -top; lambda <= top; ++lambda)
        for (const auto& seq : seqs) {
          WeightA w = canonicalize(WeightA{lambda, to_longs(seq)});
          seen.emplace(w.lambda, w.lambdas);
        }
      for (const auto& [lambda, ls] : seen) out.push_back(WeightA{lambda, ls});
      break;
    }
    case Family::C: {
      std::vector<Rational> values;
      for (long k = 0; k <= top; ++k) values.push_back(Rational(k));
      std::vector<std::vector<Rational>> seqs;
      nonincreasing_sequences(values, static_cast<std::size_t>(n - 1), seqs);
      for (int lambda0 : {0, 1})
        for (const auto& seq : seqs) out.push_back(WeightC{lambda0, to_longs(seq)});
      break;
    }
    case Family::B:
    case Family::D: {
      std::vector<std::vector<Rational>> seqs;
      nonincreasing_sequences(lattice_values(box, spin), static_cast<std::size_t>(n - 2), seqs);
      // Nonincreasing runs over [-box, box]; the dominance gate then trims
      // the tail (|lambda_{n-2}| for D, a nonnegative last entry for B).
      for (long lambda = 0; lambda <= top; ++lambda)
        for (const auto& seq : seqs) {
          StabilizerWeight w = WeightOrthogonal{lambda, seq, spin};
          if (levi_dominant_check(kind, w)) out.push_back(std::move(w));
        }
      break;
    }
    default:
      break;
  }
  return out;
}

CrosscheckReport crosscheck(const SimpleType& kind, const Rational& box, bool spin,
                            unsigned jobs) {
  if (!mcm_closed_form(kind, zero_weight(kind)).has_value())
    throw InvalidArgument("no closed-form criterion for " + to_string(kind));
  const McmOracle oracle(kind);
  const auto weights = classical_box(kind, box, spin);
  struct Outcome {
    bool closed = false;
    bool oracle = false;
  };
  const auto outcomes = parallel_map<Outcome>(weights.size(), jobs, [&](std::size_t i) {
    return Outcome{*mcm_closed_form(kind, weights[i]), oracle.decide(weights[i], false).is_mcm};
  });
  CrosscheckReport report{kind, box, spin, weights.size(), {}};
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (outcomes[i].closed != outcomes[i].oracle)
      report.disagreements.push_back({weights[i], outcomes[i].closed, outcomes[i].oracle});
  return report;
}

std::vector<CrosscheckReport> crosscheck(Family family, int rank_lo, int rank_hi,
                                         const Rational& box, bool spin, unsigned jobs) {
  if (rank_lo > rank_hi)
    throw InvalidArgument("empty rank range " + std::to_string(rank_lo) + ".." +
                          std::to_string(rank_hi));
  std::vector<CrosscheckReport> reports;
  for (int n = rank_lo; n <= rank_hi; ++n)
    reports.push_back(crosscheck(make_simple_type(family, n), box, spin, jobs));
  return reports;
}

// ===========================================================================
// Exceptional enumeration.
//
// Write y_i for the Levi coefficients, c_i = c_i(theta^vee) and
// S = sum_{i in I} c_i (y_i + 1). The d - 1 complement coroots have zeros
// z = -s / c_m, and z_theta = -S / 2. MCM needs every integer strictly
// between floor(min z) and 0 to be a zero; the coroot attaining the minimum
// is not among them, so at most d - 2 integers can be covered, forcing
// min z >= -(d - 1). In particular S <= 2(d - 1): a finite region.

std::vector<long> exceptional_region_bounds(const McmOracle& oracle) {
  const auto& levi = oracle.levi();
  const auto& thv = oracle.roots().coroot_matrix[oracle.roots().theta_index];
  const long budget = 2 * oracle.d() - 1;  // S < budget
  long base = 0;
  for (std::size_t k : levi.simple_indices) base += thv[k];
  std::vector<long> bounds;
  for (std::size_t k : levi.simple_indices) {
    const long slack = budget - base - 1;
    bounds.push_back(slack < 0 ? -1 : slack / thv[k]);
  }
  return bounds;
}

namespace {

struct ExceptionalSearch {
  const McmOracle& oracle;
  std::vector<long> c;       // c_i(theta^vee) over the Levi simple roots
  std::vector<long> suffix;  // sum of c over positions >= i
  long budget = 0;
  long bound = 0;

  ExceptionalSearch(const McmOracle& o, long coeff_bound) : oracle(o), bound(coeff_bound) {
    const auto& thv = o.roots().coroot_matrix[o.roots().theta_index];
    for (std::size_t k : o.levi().simple_indices) c.push_back(thv[k]);
    suffix.assign(c.size() + 1, 0);
    for (std::size_t i = c.size(); i-- > 0;) suffix[i] = suffix[i + 1] + c[i];
    budget = 2 * o.d() - 1;
  }

  // Largest admissible y_i given the partial sum s of earlier positions.
  long cap(std::size_t i, long s) const {
    const long slack = budget - s - suffix[i] - 1;
    return slack < 0 ? -1 : std::min(bound, slack / c[i]);
  }

  void run(std::size_t i, long s, std::vector<long>& y, std::vector<std::vector<long>>& out) const {
    if (i == y.size()) {
      if (!oracle.exceptional_quick_check(y)) return;
      if (!oracle.decide(WeightExceptional{y}, false).is_mcm)
        throw InternalError("coroot-expansion check and oracle disagree on " +
                            to_string(StabilizerWeight{WeightExceptional{y}}));
      out.push_back(y);
      return;
    }
    for (long v = 0, top = cap(i, s); v <= top; ++v) {
      y[i] = v;
      run(i + 1, s + c[i] * (v + 1), y, out);
    }
    y[i] = 0;
  }

  std::vector<std::vector<long>> solve(unsigned jobs) const {
    const std::size_t r = c.size();
    // Split on the first two coordinates (fewer when the rank is smaller).
    const std::size_t split = std::min<std::size_t>(2, r);
    std::vector<std::vector<long>> prefixes{{}};
    for (std::size_t i = 0; i < split; ++i) {
      std::vector<std::vector<long>> next;
      for (const auto& p : prefixes) {
        long s = 0;
        for (std::size_t k = 0; k < p.size(); ++k) s += c[k] * (p[k] + 1);
        for (long v = 0, top = cap(i, s); v <= top; ++v) {
          next.push_back(p);
          next.back().push_back(v);
        }
      }
      prefixes = std::move(next);
    }
    auto parts = parallel_map<std::vector<std::vector<long>>>(
        prefixes.size(), jobs, [&](std::size_t t) {
          std::vector<long> y(r, 0);
          long s = 0;
          for (std::size_t k = 0; k < split; ++k) {
            y[k] = prefixes[t][k];
            s += c[k] * (y[k] + 1);
          }
          std::vector<std::vector<long>> out;
          run(split, s, y, out);
          return out;
        });
    std::vector<std::vector<long>> all;
    for (auto& part : parts)
      for (auto& w : part) all.push_back(std::move(w));
    std::sort(all.begin(), all.end());
    return all;
  }
};

std::string levi_type_name(const LeviData& levi) { return to_string(levi.classified_type); }

}  // namespace

McmTable enumerate_mcm(const SimpleType& kind, const EnumerateOptions& options) {
  if (!is_exceptional(kind))
    throw InvalidArgument(
        "enumeration without a box needs an exceptional type; classical MCM sets contain "
        "infinite families, so " +
        to_string(kind) + " needs an explicit box");
  if (options.coeff_bound < 0)
    throw InvalidArgument("coeff_bound must be >= 0, got " + std::to_string(options.coeff_bound));
  const McmOracle oracle(kind);
  const auto region = exceptional_region_bounds(oracle);
  const long ceiling = std::max(options.ceiling, options.coeff_bound);

  McmTable table;
  table.kind = kind;
  table.levi_type = levi_type_name(oracle.levi());
  for (long bound = options.coeff_bound;;) {
    table.coeff_bound = bound;
    table.weights = ExceptionalSearch(oracle, bound).solve(options.jobs);
    table.exhaustive = std::all_of(region.begin(), region.end(), [&](long b) { return b <= bound; });
    if (table.exhaustive) return table;
    auto shell = std::find_if(table.weights.begin(), table.weights.end(), [&](const auto& w) {
      return std::find(w.begin(), w.end(), bound) != w.end();
    });
    if (shell == table.weights.end()) return table;
    if (bound >= ceiling)
      throw IncompleteEnumeration(
          "boundary shell still occupied at the ceiling " + std::to_string(ceiling) + " by " +
          to_string(StabilizerWeight{WeightExceptional{*shell}}));
    bound = std::min(ceiling, std::max<long>(1, 2 * bound));
  }
}

McmTable enumerate_classical(const SimpleType& kind, long box, unsigned jobs) {
  if (!is_classical(kind))
    throw InvalidArgument(to_string(kind) + " is not classical; enumerate it without a box");
  const McmOracle oracle(kind);
  const auto weights = classical_box(kind, Rational(box), false);
  const auto verdicts = parallel_map<char>(weights.size(), jobs, [&](std::size_t i) {
    return static_cast<char>(oracle.decide(weights[i], false).is_mcm);
  });
  McmTable table;
  table.kind = kind;
  table.coeff_bound = box;
  table.levi_type = levi_type_name(oracle.levi());
  table.box_relative = true;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (!verdicts[i]) continue;
    std::vector<long> row;
    std::visit(
        [&](const auto& w) {
          using W = std::decay_t<decltype(w)>;
          if constexpr (std::is_same_v<W, WeightA>) {
            row.push_back(w.lambda);
            row.insert(row.end(), w.lambdas.begin(), w.lambdas.end());
          } else if constexpr (std::is_same_v<W, WeightC>) {
            row.push_back(w.lambda0);
            row.insert(row.end(), w.lambdas.begin(), w.lambdas.end());
          } else if constexpr (std::is_same_v<W, WeightOrthogonal>) {
            row.push_back(w.lambda);
            for (const auto& x : w.lambdas) row.push_back(to_long(x));
          }
        },
        weights[i]);
    table.weights.push_back(std::move(row));
  }
  std::sort(table.weights.begin(), table.weights.end());
  return table;
}

// ===========================================================================
// Serialization.

std::vector<std::string> table_columns(const SimpleType& kind) {
  std::vector<std::string> cols;
  auto numbered = [&](const std::string& stem, int first, int last) {
    for (int i = first; i <= last; ++i) cols.push_back(stem + "_" + std::to_string(i));
  };
  const int n = kind.rank;
  switch (kind.family) {
    case Family::A:
      cols.push_back("lambda");
      numbered("lambda", 1, n - 1);
      break;
    case Family::C:
      numbered("lambda", 0, n - 1);
      break;
    case Family::B:
    case Family::D:
      cols.push_back("lambda");
      numbered("lambda", 1, n - 2);
      break;
    case Family::E:
      numbered(n == 6 ? "a" : n == 7 ? "b" : "c", 1, n - 1);
      break;
    case Family::F:
      numbered("a", 1, 3);
      break;
    case Family::G:
      cols.push_back("a");
      break;
  }
  return cols;
}

TableFormat parse_table_format(std::string_view name) {
  if (name == "json") return TableFormat::Json;
  if (name == "csv") return TableFormat::Csv;
  if (name == "text") return TableFormat::Text;
  throw InvalidArgument("unsupported format '" + std::string(name) + "' (json, csv or text)");
}

const char* format_extension(TableFormat f) {
  switch (f) {
    case TableFormat::Json: return "json";
    case TableFormat::Csv: return "csv";
    case TableFormat::Text: return "txt";
  }
  return "";
}

namespace {

constexpr int kSchemaVersion = 1;

std::string join(const std::vector<long>& xs, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(xs[i]);
  }
  return s;
}

std::string join(const std::vector<std::string>& xs, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += sep;
    s += xs[i];
  }
  return s;
}

std::string emit_json(const McmTable& t) {
  using nlohmann::ordered_json;
  ordered_json head;
  head["schema_version"] = kSchemaVersion;
  head["type"] = std::string(1, family_letter(t.kind.family));
  head["rank"] = t.kind.rank;
  head["coeff_bound"] = t.coeff_bound;
  head["levi_type"] = t.levi_type;
  head["box_relative"] = t.box_relative;
  head["exhaustive"] = t.exhaustive;
  head["columns"] = table_columns(t.kind);
  head["count"] = t.count();
  // One weight per line keeps the file diffable.
  std::string out = "{\n";
  for (const auto& [key, value] : head.items())
    out += "  " + ordered_json(key).dump() + ": " + value.dump() + ",\n";
  out += "  \"weights\": [";
  for (std::size_t i = 0; i < t.weights.size(); ++i)
    out += std::string(i ? ",\n    " : "\n    ") + "[" + join(t.weights[i]) + "]";
  out += t.weights.empty() ? "]\n}\n" : "\n  ]\n}\n";
  return out;
}

std::string emit_csv(const McmTable& t) {
  std::string out = "# schema_version=" + std::to_string(kSchemaVersion) +
                    " type=" + std::string(1, family_letter(t.kind.family)) +
                    " rank=" + std::to_string(t.kind.rank) +
                    " coeff_bound=" + std::to_string(t.coeff_bound) +
                    " levi_type=" + t.levi_type +
                    " box_relative=" + (t.box_relative ? "1" : "0") +
                    " exhaustive=" + (t.exhaustive ? "1" : "0") +
                    " count=" + std::to_string(t.count()) + "\n";
  out += join(table_columns(t.kind)) + "\n";
  for (const auto& w : t.weights) out += join(w) + "\n";
  return out;
}

// "0,...,5" for runs of five or more, explicit lists otherwise.
std::string compress_values(const std::vector<long>& vs) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < vs.size();) {
    std::size_t j = i;
    while (j + 1 < vs.size() && vs[j + 1] == vs[j] + 1) ++j;
    if (j - i + 1 >= 5) {
      parts.push_back(std::to_string(vs[i]) + ",...," + std::to_string(vs[j]));
    } else {
      for (std::size_t k = i; k <= j; ++k) parts.push_back(std::to_string(vs[k]));
    }
    i = j + 1;
  }
  return join(parts);
}

std::string emit_text(const McmTable& t) {
  const auto cols = table_columns(t.kind);
  std::string out = "# " + to_string(t.kind) + " MCM weights (" + join(cols) + "), Levi " +
                    t.levi_type + "\n";
  out += "# coeff_bound=" + std::to_string(t.coeff_bound) +
         (t.box_relative ? " (box-relative)" : "") + (t.exhaustive ? " (exhaustive)" : "") +
         " count=" + std::to_string(t.count()) + "\n";

  // Columns that vanish on every weight are stated once and dropped.
  std::vector<std::size_t> live;
  std::vector<std::string> dead;
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const bool zero = !t.weights.empty() && std::all_of(t.weights.begin(), t.weights.end(),
                                                        [&](const auto& w) { return w[k] == 0; });
    if (zero && cols.size() > 1) dead.push_back(cols[k]);
    else live.push_back(k);
  }
  if (!dead.empty()) out += join(dead, " = ") + " = 0\n";
  if (t.weights.empty()) return out;

  if (live.size() == 1) {
    for (const auto& w : t.weights) out += cols[live[0]] + " = " + std::to_string(w[live[0]]) + "\n";
    return out;
  }
  // Group by all live columns but the last.
  std::vector<std::string> key_cols;
  for (std::size_t i = 0; i + 1 < live.size(); ++i) key_cols.push_back(cols[live[i]]);
  const std::size_t last = live.back();
  out += "(" + join(key_cols) + ") | allowed " + cols[last] + "\n";
  std::map<std::vector<long>, std::vector<long>> groups;
  for (const auto& w : t.weights) {
    std::vector<long> key;
    for (std::size_t i = 0; i + 1 < live.size(); ++i) key.push_back(w[live[i]]);
    groups[key].push_back(w[last]);
  }
  for (auto& [key, vals] : groups) {
    std::sort(vals.begin(), vals.end());
    out += "(" + join(key) + ") | " + compress_values(vals) + "\n";
  }
  return out;
}

SimpleType table_kind(const std::string& letter, int rank) {
  if (letter.size() != 1) throw InvalidArgument("bad type '" + letter + "' in table");
  return make_simple_type(parse_family(letter), rank);
}

void check_shape(const McmTable& t, std::size_t declared_count) {
  const std::size_t width = table_columns(t.kind).size();
  for (const auto& w : t.weights)
    if (w.size() != width)
      throw InvalidArgument("table row has " + std::to_string(w.size()) + " entries, expected " +
                            std::to_string(width));
  if (declared_count != t.count())
    throw InvalidArgument("table declares count " + std::to_string(declared_count) + " but has " +
                          std::to_string(t.count()) + " rows");
}

McmTable parse_json(const std::string& doc) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(doc);
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw InvalidArgument("unsupported schema_version " + j.at("schema_version").dump());
    McmTable t;
    t.kind = table_kind(j.at("type").get<std::string>(), j.at("rank").get<int>());
    t.coeff_bound = j.at("coeff_bound").get<long>();
    t.levi_type = j.at("levi_type").get<std::string>();
    t.box_relative = j.at("box_relative").get<bool>();
    t.exhaustive = j.at("exhaustive").get<bool>();
    t.weights = j.at("weights").get<std::vector<std::vector<long>>>();
    check_shape(t, j.at("count").get<std::size_t>());
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("malformed table JSON: ") + e.what());
  }
}

McmTable parse_csv(const std::string& doc) {
  std::istringstream in(doc);
  std::string line;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0)
    throw InvalidArgument("table CSV must start with a '# schema_version=...' line");
  std::map<std::string, std::string> meta;
  {
    std::istringstream fields(line.substr(2));
    std::string field;
    while (fields >> field) {
      const auto eq = field.find('=');
      if (eq == std::string::npos) throw InvalidArgument("bad CSV header field '" + field + "'");
      meta[field.substr(0, eq)] = field.substr(eq + 1);
    }
  }
  auto get = [&](const char* key) {
    auto it = meta.find(key);
    if (it == meta.end()) throw InvalidArgument(std::string("CSV header lacks ") + key);
    return it->second;
  };
  auto number = [](const std::string& s) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != s.size() || s.empty()) throw InvalidArgument("bad integer '" + s + "' in CSV");
    return v;
  };
  if (number(get("schema_version")) != kSchemaVersion)
    throw InvalidArgument("unsupported schema_version " + get("schema_version"));
  McmTable t;
  t.kind = table_kind(get("type"), static_cast<int>(number(get("rank"))));
  t.coeff_bound = number(get("coeff_bound"));
  t.levi_type = get("levi_type");
  t.box_relative = number(get("box_relative")) != 0;
  t.exhaustive = number(get("exhaustive")) != 0;
  if (!std::getline(in, line) || line != join(table_columns(t.kind)))
    throw InvalidArgument("CSV column header does not match " + to_string(t.kind));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<long> row;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) row.push_back(number(cell));
    t.weights.push_back(std::move(row));
  }
  check_shape(t, static_cast<std::size_t>(number(get("count"))));
  return t;
}

}  // namespace

std::string emit_table(const McmTable& table, TableFormat format) {
  switch (format) {
    case TableFormat::Json: return emit_json(table);
    case TableFormat::Csv: return emit_csv(table);
    case TableFormat::Text: return emit_text(table);
  }
  throw InvalidArgument("unsupported format");
}

McmTable parse_table(const std::string& document, TableFormat format) {
  switch (format) {
    case TableFormat::Json: return parse_json(document);
    case TableFormat::Csv: return parse_csv(document);
    case TableFormat::Text: break;
  }
  throw InvalidArgument("the text layout is for reading only; parse json or csv instead");
}

std::vector<std::string> write_tables(const std::string& dir, const EnumerateOptions& options) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir))
    throw InvalidArgument("cannot create output directory '" + dir + "'");
  const std::vector<SimpleType> kinds{
      {Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}};
  std::vector<std::string> paths;
  for (const auto& kind : kinds) {
    const McmTable table = enumerate_mcm(kind, options);
    for (auto format : {TableFormat::Json, TableFormat::Csv, TableFormat::Text}) {
      const fs::path path = fs::path(dir) / (to_string(kind) + "." + format_extension(format));
      std::ofstream out(path, std::ios::binary);
      out << emit_table(table, format);
      out.close();
      if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
      paths.push_back(path.string());
    }
  }
  return paths;
}

}  // namespace mcm
