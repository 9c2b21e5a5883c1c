#include <doctest.h>

#include "golden_tables.hpp"
#include "mcm/engine.hpp"

#include <json.hpp>

#include <random>

using namespace mcm;

namespace {

const SimpleType E6{Family::E, 6}, E7{Family::E, 7}, E8{Family::E, 8}, F4{Family::F, 4},
    G2{Family::G, 2};

EnumerateOptions bound(long b, long ceiling = 64, unsigned jobs = 1) {
  EnumerateOptions o;
  o.coeff_bound = b;
  o.ceiling = ceiling;
  o.jobs = jobs;
  return o;
}

std::vector<SimpleType> all_types_up_to_rank_8() {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= 8; ++n)
      if (is_admissible(f, n)) out.push_back({f, n});
  return out;
}

}  // namespace

TEST_CASE("oracle verdicts") {
  CHECK(mcm_oracle({Family::A, 2}, WeightA{2, {0}}).is_mcm);
  const auto v = mcm_oracle({Family::A, 2}, WeightA{3, {0}});
  CHECK_FALSE(v.is_mcm);
  REQUIRE(v.first_violation.has_value());
  const auto& p = v.first_violation->profile;
  REQUIRE_FALSE(p.is_singular());
  CHECK(p.degree > 0);
  CHECK(static_cast<long>(p.degree) < 3);

  CHECK_FALSE(mcm_oracle(G2, WeightExceptional{{3}}).is_mcm);
  CHECK(mcm_oracle(G2, WeightExceptional{{2}}).is_mcm);
  CHECK_THROWS_AS(mcm_oracle({Family::D, 4}, WeightOrthogonal{1, {1, -2}, false}),
                  InvalidArgument);
}

TEST_CASE("the structure sheaf is MCM in every type up to rank 8") {
  for (const auto& kind : all_types_up_to_rank_8()) {
    CAPTURE(to_string(kind));
    CHECK(mcm_oracle(kind, zero_weight(kind)).is_mcm);
  }
}

TEST_CASE("traces are complete and end in the monotone regime") {
  for (const auto& [kind, w] : std::vector<std::pair<SimpleType, StabilizerWeight>>{
           {{Family::A, 3}, WeightA{1, {1, 0}}},
           {{Family::C, 3}, WeightC{1, {2, 1}}},
           {{Family::B, 4}, WeightOrthogonal{1, {make_rational(3, 2), make_rational(1, 2)}, true}},
           {E6, WeightExceptional{{3, 1, 0, 0, 3}}},
           {G2, WeightExceptional{{5}}}}) {
    CAPTURE(to_string(kind));
    const McmOracle oracle(kind);
    const auto v = oracle.decide(w);
    REQUIRE(v.trace.size() >= 2);
    for (std::size_t i = 1; i < v.trace.size(); ++i)
      CHECK(v.trace[i].param == v.trace[i - 1].param + 2);
    CHECK(v.trace.front().param <= v.range.lo + 1);
    CHECK(v.trace.back().param >= v.range.hi - 1);
    const auto& lo = v.trace.front().profile;
    const auto& hi = v.trace.back().profile;
    const auto top = static_cast<std::size_t>(v.d - 1);
    CHECK(((lo.concentrated_in(0) && hi.concentrated_in(top)) ||
           (lo.concentrated_in(top) && hi.concentrated_in(0))));
    // The verdict is the absence of middle degrees along the trace.
    bool ok = true;
    for (const auto& e : v.trace) ok = ok && profile_allowed(e.profile, v.d);
    CHECK(ok == v.is_mcm);
  }
}

TEST_CASE("complement of the Levi") {
  // The enumeration region counts zeros of the d - 1 complement coroots.
  for (const auto& kind : {E6, E7, E8, F4, G2}) {
    CAPTURE(to_string(kind));
    const McmOracle oracle(kind);
    const auto& rs = oracle.roots();
    const std::size_t m = oracle.levi().non_levi_simple_indices.at(0);
    CHECK(rs.coroot_matrix[rs.theta_index][m] == 2);
    CHECK(oracle.levi().complement_indices.size() == static_cast<std::size_t>(oracle.d() - 1));
    for (std::size_t b : oracle.levi().complement_indices) CHECK(rs.coroot_matrix[b][m] >= 1);
  }
}

TEST_CASE("coroot-expansion check agrees with the oracle") {
  std::mt19937 gen(5);
  for (const auto& kind : {E6, E7, E8, F4, G2}) {
    CAPTURE(to_string(kind));
    const McmOracle oracle(kind);
    const auto region = exceptional_region_bounds(oracle);
    std::uniform_int_distribution<int> pick(0, 3);
    int tested = 0;
    for (int trial = 0; trial < 60; ++trial) {
      // Mostly small coordinates, where MCM weights live.
      std::vector<long> y(oracle.levi().rank());
      for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = pick(gen) == 0 ? std::uniform_int_distribution<long>(0, 6)(gen) : 0;
      CAPTURE(to_string(StabilizerWeight{WeightExceptional{y}}));
      CHECK(oracle.exceptional_quick_check(y) == oracle.decide(WeightExceptional{y}, false).is_mcm);
      ++tested;
    }
    // Just outside the region along each axis the weight is not MCM.
    for (std::size_t i = 0; i < region.size(); ++i) {
      std::vector<long> y(region.size(), 0);
      y[i] = region[i] + 1;
      CAPTURE(i);
      CHECK_FALSE(oracle.decide(WeightExceptional{y}, false).is_mcm);
      CHECK_FALSE(oracle.exceptional_quick_check(y));
    }
    CHECK(tested == 60);
  }
}

TEST_CASE("exceptional tables match the reference classification") {
  CHECK(enumerate_mcm(E6).weights == golden::e6());
  CHECK(enumerate_mcm(E7).weights == golden::e7());
  CHECK(enumerate_mcm(E8).weights == golden::e8());
  CHECK(enumerate_mcm(F4).weights == golden::f4());
  CHECK(enumerate_mcm(G2).weights == golden::g2());

  const auto e6 = enumerate_mcm(E6);
  CHECK(e6.count() == 97);
  CHECK(e6.levi_type == "A5");
  const std::vector<long> row{7, 0, 0, 0};
  std::vector<long> a5;
  for (const auto& w : e6.weights) {
    CHECK(w[2] == 0);
    if (w[0] == 7 && w[1] == 0 && w[3] == 0) a5.push_back(w[4]);
  }
  CHECK(a5 == std::vector<long>{2});

  const auto e8 = enumerate_mcm(E8);
  CHECK(std::count(e8.weights.begin(), e8.weights.end(), std::vector<long>{5, 0, 1, 0, 0, 0, 0}) == 1);
  CHECK(std::count(e8.weights.begin(), e8.weights.end(), std::vector<long>{5, 1, 1, 0, 0, 0, 0}) == 0);
}

TEST_CASE("enumerating the whole region proves the tables complete") {
  for (const auto& kind : {E6, E7, F4, G2}) {
    CAPTURE(to_string(kind));
    const auto region = exceptional_region_bounds(McmOracle(kind));
    const long full = *std::max_element(region.begin(), region.end());
    const auto t = enumerate_mcm(kind, bound(full));
    CHECK(t.exhaustive);
    CHECK(t.weights == enumerate_mcm(kind).weights);
  }
  CHECK(enumerate_mcm(G2).exhaustive);
  CHECK_FALSE(enumerate_mcm(E6).exhaustive);
}

TEST_CASE("boundary shell") {
  // Starting low, the bound doubles until the shell empties.
  const auto t = enumerate_mcm(E6, bound(1));
  CHECK(t.count() == 97);
  CHECK(t.coeff_bound == 8);
  CHECK_THROWS_WITH_AS(enumerate_mcm(E6, bound(1, 1)), doctest::Contains("shell"),
                       IncompleteEnumeration);
  CHECK_THROWS_AS(enumerate_mcm({Family::A, 3}), InvalidArgument);
  CHECK_THROWS_AS(enumerate_mcm(E6, bound(-1)), InvalidArgument);
}

TEST_CASE("parallel enumeration is deterministic") {
  const auto serial = emit_table(enumerate_mcm(E7, bound(16, 64, 1)), TableFormat::Json);
  CHECK(emit_table(enumerate_mcm(E7, bound(16, 64, 4)), TableFormat::Json) == serial);
  CHECK(emit_table(enumerate_mcm(E7, bound(16, 64, 1)), TableFormat::Json) == serial);
}

TEST_CASE("table formats") {
  const auto g2 = enumerate_mcm(G2);
  const auto text = emit_table(g2, TableFormat::Text);
  CHECK(text.find("a = 0\na = 1\na = 2\n") != std::string::npos);

  const auto f4 = enumerate_mcm(F4);
  const auto csv = emit_table(f4, TableFormat::Csv);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);  // comment, header, 10 rows
  CHECK(csv.rfind("# schema_version=1 ", 0) == 0);

  McmTable empty;
  empty.kind = E6;
  empty.coeff_bound = 0;
  empty.levi_type = "A5";
  const auto json = emit_table(empty, TableFormat::Json);
  const auto parsed = nlohmann::json::parse(json);
  CHECK(parsed["count"] == 0);
  CHECK(parsed["weights"].empty());
  CHECK(parsed["schema_version"] == 1);

  for (const auto& t : {g2, f4, enumerate_mcm(E6), empty,
                        enumerate_classical({Family::C, 3}, 2)}) {
    for (auto f : {TableFormat::Json, TableFormat::Csv}) {
      const auto doc = emit_table(t, f);
      const auto back = parse_table(doc, f);
      CHECK(back == t);
      CHECK(emit_table(back, f) == doc);
    }
  }
  CHECK_THROWS_AS(parse_table_format("xml"), InvalidArgument);
  CHECK_THROWS_AS(parse_table(text, TableFormat::Text), InvalidArgument);
  CHECK_THROWS_AS(parse_table("{}", TableFormat::Json), InvalidArgument);
  CHECK_THROWS_AS(parse_table("a,b\n", TableFormat::Csv), InvalidArgument);
}

TEST_CASE("classical boxes") {
  CHECK(classical_box({Family::A, 2}, 0).size() == 1);
  // C2 box 1: lambda_0 in {0, 1}, lambda_1 in {0, 1}.
  CHECK(classical_box({Family::C, 2}, 1).size() == 4);
  // D4 spin box 1/2: lambda = 0, (1/2, +-1/2).
  CHECK(classical_box({Family::D, 4}, make_rational(1, 2), true).size() == 2);
  CHECK_THROWS_AS(classical_box({Family::C, 3}, 1, true), InvalidArgument);
  CHECK_THROWS_AS(classical_box(E6, 1), InvalidArgument);

  const auto c = enumerate_classical({Family::C, 2}, 1);
  CHECK(c.box_relative);
  CHECK(c.weights == std::vector<std::vector<long>>{{0, 0}, {0, 1}, {1, 0}});
}

TEST_CASE("cross-check on small boxes") {
  const auto a = crosscheck(Family::A, 2, 2, 0);
  REQUIRE(a.size() == 1);
  CHECK(a[0].tested == 1);
  CHECK(a[0].disagreements.empty());
  for (const auto& r : crosscheck(Family::C, 2, 3, 2, false, 2)) CHECK(r.disagreements.empty());
  CHECK(crosscheck({Family::D, 4}, make_rational(5, 2), true).disagreements.empty());
  CHECK(crosscheck({Family::B, 3}, 2, true).disagreements.empty());
  CHECK_THROWS_AS(crosscheck({Family::A, 1}, 1), InvalidArgument);
  CHECK_THROWS_AS(crosscheck(Family::C, 3, 2, 1), InvalidArgument);
}
