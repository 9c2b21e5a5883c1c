// Runs the seven acceptance criteria and prints one PASS/FAIL line for each.
// Exit status is 0 iff all pass.

#include "golden_tables.hpp"
#include "mcm/cli.hpp"
#include "mcm/engine.hpp"
#include "weyl_brute_force.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace mcm;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

using Criterion = std::function<Outcome()>;

std::vector<SimpleType> all_types_up_to_rank_8() {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= 8; ++n)
      if (is_admissible(f, n)) out.push_back({f, n});
  return out;
}

const std::vector<SimpleType> kExceptional{
    {Family::E, 6}, {Family::E, 7}, {Family::E, 8}, {Family::F, 4}, {Family::G, 2}};

// 1. Exceptional tables equal the reference ones, twice over, and enumerating
// the whole admissible region adds nothing.
Outcome exceptional_tables() {
  Outcome o;
  const std::vector<std::vector<std::vector<long>>> golden{
      golden::e6(), golden::e7(), golden::e8(), golden::f4(), golden::g2()};
  std::string counts;
  for (std::size_t k = 0; k < kExceptional.size(); ++k) {
    const auto& kind = kExceptional[k];
    EnumerateOptions opts;
    opts.jobs = 0;
    const auto first = enumerate_mcm(kind, opts);
    const auto again = enumerate_mcm(kind, opts);
    o.require(first.weights == golden[k], to_string(kind) + " differs from the reference table");
    o.require(emit_table(first, TableFormat::Json) == emit_table(again, TableFormat::Json),
              to_string(kind) + " is not deterministic");

    const auto region = exceptional_region_bounds(McmOracle(kind));
    opts.coeff_bound = *std::max_element(region.begin(), region.end());
    const auto full = enumerate_mcm(kind, opts);
    o.require(full.exhaustive && full.weights == first.weights,
              to_string(kind) + ": the full region holds more MCM weights");
    counts += (counts.empty() ? "" : " ") + to_string(kind) + "=" + std::to_string(first.count());
  }
  if (o.pass) o.detail = counts + " (complete: whole admissible region enumerated)";
  return o;
}

// 2. O(mD) on the A_n minimal orbit closure is MCM iff -n <= m <= n.
Outcome divisor_range() {
  Outcome o;
  for (int n = 2; n <= 8; ++n) {
    const McmOracle oracle({Family::A, n});
    for (long m = -n - 4; m <= n + 4; ++m) {
      const bool expected = -n <= m && m <= n;
      const WeightA w{m, std::vector<long>(static_cast<std::size_t>(n - 1), 0)};
      const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      o.require(mcm_divisor_A(n, m) == expected, "closed form wrong at " + where);
      o.require(oracle.decide(w, false).is_mcm == expected, "oracle wrong at " + where);
    }
  }
  if (o.pass) o.detail = "n=2..8, m in [-n-4, n+4]";
  return o;
}

// 3. Closed forms and the oracle agree on the classical boxes.
Outcome oracle_vs_closed_form() {
  Outcome o;
  struct Box {
    Family family;
    int lo, hi;
    long box;
    bool spin;
  };
  const std::vector<Box> boxes{{Family::A, 2, 5, 4, false}, {Family::C, 2, 5, 4, false},
                               {Family::B, 3, 5, 3, false}, {Family::B, 3, 5, 3, true},
                               {Family::D, 3, 5, 3, false}, {Family::D, 3, 5, 3, true}};
  std::size_t tested = 0, negative_tail = 0;
  for (const auto& b : boxes) {
    for (const auto& r : crosscheck(b.family, b.lo, b.hi, Rational(b.box), b.spin, 0)) {
      tested += r.tested;
      if (!r.disagreements.empty())
        o.require(false, to_string(r.kind) + (b.spin ? " spin" : "") + " disagrees at " +
                             to_string(r.disagreements.front().weight));
    }
    if (b.family == Family::D)
      for (int n = b.lo; n <= b.hi; ++n)
        for (const auto& w : classical_box({Family::D, n}, Rational(b.box), b.spin))
          if (sgn(std::get<WeightOrthogonal>(w).lambdas.back()) < 0) ++negative_tail;
  }
  o.require(negative_tail > 0, "no D weight with negative lambda_{n-2} was tested");
  if (o.pass)
    o.detail = std::to_string(tested) + " weights, 0 disagreements (" +
               std::to_string(negative_tail) + " D weights with lambda_{n-2} < 0)";
  return o;
}

// 4. Line bundles on T*P^n: middle cohomology vanishes iff m >= -n.
Outcome cotangent_vanishing() {
  Outcome o;
  for (int n = 2; n <= 6; ++n)
    for (long m = -12; m <= 12; ++m) {
      const std::string where = "n=" + std::to_string(n) + " m=" + std::to_string(m);
      const auto v = cotangent_line_bundle_vanishing(n, m);
      o.require(v.h_mid_all_zero == (m >= -n), "vanishing wrong at " + where);
      o.require(v.h_top_zero_when_mid_zero, "top cohomology survives at " + where);
      const bool both = v.h_mid_all_zero && cotangent_line_bundle_vanishing(n, -m).h_mid_all_zero;
      o.require(both == mcm_divisor_A(n, m), "+-m conjunction wrong at " + where);
    }
  if (o.pass) o.detail = "n=2..6, m in [-12, 12]";
  return o;
}

// 5. Root-system invariants.
Outcome structural_invariants() {
  Outcome o;
  for (const auto& t : all_types_up_to_rank_8()) {
    const std::string name = to_string(t);
    const RootSystem rs = build_root_system(t);
    const LeviData levi = levi_subsystem(rs);
    for (const auto& cv : rs.simple_coroots)
      o.require(dot(rs.rho, cv) == 1, name + ": <rho, alpha^vee> != 1");
    for (const auto& a : rs.positive_roots) {
      const Rational p = abs(pair(a, rs.theta_covector));
      o.require(p <= 2, name + ": |<alpha, theta^vee>| > 2");
      o.require((p == 2) == (a == rs.theta), name + ": |<alpha, theta^vee>| = 2 off theta");
    }
    const long d = min_orbit_dim(rs, levi);
    o.require(d - 1 == static_cast<long>(rs.num_positive_roots() - levi.positive_roots_levi.size()),
              name + ": d - 1 != |Phi+| - |Phi_L+|");
    const int n = t.rank;
    long expected_d = 0;
    std::vector<SimpleType> expected_levi;
    auto with_a1 = [](std::vector<SimpleType> c) {
      c.insert(c.begin(), SimpleType{Family::A, 1});
      std::sort(c.begin(), c.end());
      return c;
    };
    switch (t.family) {
      case Family::A: expected_d = 2 * n; expected_levi = normalized_components(Family::A, n - 2); break;
      case Family::C: expected_d = 2 * n; expected_levi = normalized_components(Family::C, n - 1); break;
      case Family::B: expected_d = 4 * n - 4; expected_levi = with_a1(normalized_components(Family::B, n - 2)); break;
      case Family::D: expected_d = 4 * n - 6; expected_levi = with_a1(normalized_components(Family::D, n - 2)); break;
      case Family::E:
        expected_d = n == 6 ? 22 : n == 7 ? 34 : 58;
        expected_levi = {n == 6 ? SimpleType{Family::A, 5}
                                : n == 7 ? SimpleType{Family::D, 6} : SimpleType{Family::E, 7}};
        break;
      case Family::F: expected_d = 16; expected_levi = {{Family::C, 3}}; break;
      case Family::G: expected_d = 6; expected_levi = {{Family::A, 1}}; break;
    }
    o.require(d == expected_d, name + ": d = " + std::to_string(d));
    o.require(to_string(levi.classified_type) == to_string(expected_levi),
              name + ": Levi " + to_string(levi.classified_type));
    if (is_exceptional(t)) {
      const auto thv = theta_covector_simple_expansion(rs);
      o.require(levi.non_levi_simple_indices.size() == 1 &&
                    thv[levi.non_levi_simple_indices[0]] == 2,
                name + ": affine-adjacent theta^vee coefficient != 2");
    }
  }
  // A-type shift invariance.
  std::mt19937 gen(17);
  std::uniform_int_distribution<long> coord(-3, 3), shift(-4, 4);
  for (int n = 2; n <= 5; ++n) {
    const McmOracle oracle({Family::A, n});
    for (int trial = 0; trial < 40; ++trial) {
      WeightA w{coord(gen), std::vector<long>(static_cast<std::size_t>(n - 1))};
      for (auto& x : w.lambdas) x = coord(gen);
      std::sort(w.lambdas.rbegin(), w.lambdas.rend());
      const long t = shift(gen);
      WeightA s{w.lambda + 2 * t, w.lambdas};
      for (auto& x : s.lambdas) x += t;
      const auto a = oracle.decide(w), b = oracle.decide(s);
      bool same = a.is_mcm == b.is_mcm && a.trace.size() == b.trace.size();
      for (std::size_t i = 0; same && i < a.trace.size(); ++i)
        same = a.trace[i].profile == b.trace[i].profile;
      o.require(same && mcm_closed_A(n, w) == mcm_closed_A(n, s),
                "A" + std::to_string(n) + " shift invariance fails at " +
                    to_string(StabilizerWeight{w}));
    }
  }
  if (o.pass) o.detail = std::to_string(all_types_up_to_rank_8().size()) + " types, rank <= 8";
  return o;
}

// 6. Weyl length against explicit orbit enumeration.
Outcome bwb_brute_force() {
  Outcome o;
  std::mt19937 gen(29);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 7);
  std::size_t total = 0;
  for (const auto& t : brute::small_types()) {
    const RootSystem rs = build_root_system(t);
    for (int tested = 0; tested < 500;) {
      RationalVector Lambda = zero_vector(rs.ambient_dim);
      for (const auto& a : rs.simple_roots) Lambda += make_rational(num(gen), den(gen)) * a;
      if (is_singular(rs, Lambda)) continue;
      ++tested;
      ++total;
      const auto walk = brute::walk(rs, Lambda);
      o.require(walk.orbit_size == brute::weyl_order(t), to_string(t) + ": orbit size");
      o.require(weyl_length_to_dominant(rs, Lambda) == walk.length,
                to_string(t) + ": length differs at " + to_string(Lambda));
    }
  }
  if (o.pass)
    o.detail = std::to_string(total) + " regular weights over " +
               std::to_string(brute::small_types().size()) + " types";
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 7. `mcm tables` is byte-identical across runs and job counts.
Outcome tables_determinism() {
  Outcome o;
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / "mcm_acceptance_tables";
  fs::remove_all(root);
  const std::vector<std::pair<std::string, std::string>> runs{
      {"run1_jobs1", "1"}, {"run2_jobs1", "1"}, {"run3_jobs8", "8"}};
  for (const auto& [dir, jobs] : runs) {
    const std::string path = (root / dir).string();
    const char* argv[] = {"mcm", "tables", "--out", path.c_str(), "--jobs", jobs.c_str()};
    std::ostringstream out, err;
    const int code = run_cli(6, argv, out, err);
    o.require(code == 0, "mcm tables failed: " + err.str());
  }
  std::size_t files = 0;
  if (o.pass)
    for (const auto& entry : fs::directory_iterator(root / runs[0].first)) {
      const auto name = entry.path().filename();
      const auto ref = slurp(entry.path());
      for (std::size_t k = 1; k < runs.size(); ++k)
        o.require(slurp(root / runs[k].first / name) == ref, name.string() + " differs");
      ++files;
    }
  o.require(files == 15, "expected 15 table files, found " + std::to_string(files));
  fs::remove_all(root);
  if (o.pass) o.detail = "15 files identical over 2 runs at --jobs 1 and 1 at --jobs 8";
  return o;
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    double budget_s;
    Criterion run;
  };
  const std::vector<Entry> criteria{
      {1, "exceptional golden tables", 120, exceptional_tables},
      {2, "A_n divisor range", 5, divisor_range},
      {3, "oracle = closed form", 600, oracle_vs_closed_form},
      {4, "cotangent line bundles", 1, cotangent_vanishing},
      {5, "structural invariants", 10, structural_invariants},
      {6, "BWB brute force", 30, bwb_brute_force},
      {7, "table determinism", 600, tables_determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && secs > c.budget_s) {
      o.pass = false;
      o.detail += " (over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget)";
    }
    if (!o.pass) ++failed;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << "criterion " << c.id << " (" << c.title << "): " << (o.pass ? "PASS" : "FAIL") << "  "
         << o.detail << "  [" << secs << " s]";
    std::cout << line.str() << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
