#include "mcm/cli.hpp"

#include "mcm/engine.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace mcm {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

long parse_long(const std::string& s, const char* what) {
  const Rational q = parse_rational(s);
  if (!is_integer(q))
    throw InvalidArgument(std::string(what) + " must be an integer, got '" + s + "'");
  return to_long(q);
}

std::vector<std::string> levi_part(const SimpleType& kind, const std::string& text,
                                   std::size_t want) {
  if (text.empty()) return std::vector<std::string>(want, "0");
  auto parts = split(text, ',');
  if (parts.size() != want)
    throw InvalidArgument(to_string(kind) + " takes " + std::to_string(want) +
                          " Levi coordinates after ';', got " + std::to_string(parts.size()));
  return parts;
}

std::string json_vector(std::span<const Rational> v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + "]";
}

nlohmann::ordered_json rationals(std::span<const Rational> v) {
  auto j = nlohmann::ordered_json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

// theta = e7 + e8 style rendering of an ambient vector.
std::string in_e_basis(std::span<const Rational> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    const bool neg = sgn(v[i]) < 0;
    const Rational mag = abs(v[i]);
    s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
    if (mag != 1) s += to_string(mag) + " ";
    s += "e" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

std::string in_simple_basis(const std::vector<long>& c, const char* name) {
  std::string s;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (c[i] != 1) s += std::to_string(c[i]) + " ";
    s += std::string(name) + std::to_string(i + 1);
  }
  return s;
}

const char* verdict_word(bool mcm) { return mcm ? "MCM" : "not MCM"; }

struct Common {
  std::string type;
  int rank = 0;
  std::string format = "text";
  unsigned jobs = 0;
};

void add_type(CLI::App* cmd, Common& c) {
  cmd->add_option("-t,--type", c.type, "Family letter A-G, or e.g. E6")->required();
  cmd->add_option("-r,--rank", c.rank, "Rank (implied for F, G and e.g. E6)");
}

// ---------------------------------------------------------------------------

int cmd_check(const Common& c, const std::string& weight_text, bool spin, bool trace,
              std::ostream& out) {
  const SimpleType kind = parse_type(c.type, c.rank);
  const StabilizerWeight w = parse_weight(kind, weight_text, spin);
  const McmOracle oracle(kind);
  const McmVerdict v = oracle.decide(w, trace);
  const auto closed = mcm_closed_form(kind, w);
  const bool disagree = closed && *closed != v.is_mcm;

  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["type"] = to_string(kind);
    j["weight"] = to_string(w);
    j["d"] = v.d;
    j["scan_range"] = {v.range.lo, v.range.hi};
    j["is_mcm"] = v.is_mcm;
    j["closed_form"] = closed ? nlohmann::ordered_json(*closed) : nlohmann::ordered_json();
    j["agrees"] = !disagree;
    if (v.first_violation)
      j["first_violation"] = {{"param", v.first_violation->param},
                              {"profile", to_string(v.first_violation->profile)}};
    if (trace) {
      auto t = nlohmann::ordered_json::array();
      for (const auto& e : v.trace)
        t.push_back({{"param", e.param}, {"weight", rationals(e.weight)},
                     {"profile", to_string(e.profile)}});
      j["trace"] = t;
    }
    out << j.dump(2) << "\n";
  } else if (c.format == "text") {
    out << "type: " << to_string(kind) << "\n"
        << "weight: " << to_string(w) << "\n"
        << "d: " << v.d << "\n"
        << "scan range: j in [" << v.range.lo << ", " << v.range.hi << "]\n"
        << "oracle: " << verdict_word(v.is_mcm) << "\n";
    if (v.first_violation)
      out << "first violation: j = " << v.first_violation->param << ", "
          << to_string(v.first_violation->profile) << "\n";
    if (closed)
      out << "closed form: " << verdict_word(*closed) << (disagree ? " (DISAGREES)" : " (agrees)")
          << "\n";
    else
      out << "closed form: none for " << to_string(kind) << "\n";
    if (trace)
      for (const auto& e : v.trace)
        out << "  j = " << e.param << "  " << json_vector(e.weight) << "  "
            << to_string(e.profile) << "\n";
  } else {
    throw InvalidArgument("check supports --format text or json, got '" + c.format + "'");
  }
  if (disagree) return kExitInternal;
  return v.is_mcm ? kExitMcm : kExitNotMcm;
}

int cmd_enumerate(const Common& c, std::optional<long> box, long bound, long ceiling,
                  bool exhaustive, const std::string& out_path, std::ostream& out,
                  std::ostream& err) {
  const SimpleType kind = parse_type(c.type, c.rank);
  const TableFormat format = parse_table_format(c.format);
  McmTable table;
  if (is_classical(kind)) {
    if (!box)
      throw InvalidArgument("classical MCM sets contain infinite families, so enumerating " +
                            to_string(kind) + " needs --box B (a box-relative table)");
    table = enumerate_classical(kind, *box, c.jobs);
  } else {
    if (box) throw InvalidArgument("--box applies to classical types only; use --bound");
    EnumerateOptions options;
    options.coeff_bound = bound;
    options.ceiling = ceiling;
    options.jobs = c.jobs;
    if (exhaustive) {
      const auto region = exceptional_region_bounds(McmOracle(kind));
      options.coeff_bound = std::max(bound, *std::max_element(region.begin(), region.end()));
      options.ceiling = std::max(options.ceiling, options.coeff_bound);
    }
    table = enumerate_mcm(kind, options);
  }
  const std::string doc = emit_table(table, format);
  const std::string summary = "count=" + std::to_string(table.count());
  if (out_path.empty()) {
    out << doc;
    err << summary << "\n";
  } else {
    std::ofstream file(out_path, std::ios::binary);
    file << doc;
    file.close();
    if (!file) throw InvalidArgument("cannot write '" + out_path + "'");
    out << summary << "\n";
  }
  return kExitMcm;
}

std::pair<int, int> parse_ranks(const std::string& text) {
  const auto dots = text.find("..");
  auto num = [](const std::string& s) {
    return static_cast<int>(parse_long(trim(s), "rank"));
  };
  if (dots == std::string::npos) {
    const int r = num(text);
    return {r, r};
  }
  return {num(text.substr(0, dots)), num(text.substr(dots + 2))};
}

int cmd_crosscheck(const Common& c, const std::string& ranks, const std::string& box_text,
                   bool spin, std::ostream& out) {
  const Family family = parse_family(c.type);
  if (family == Family::E || family == Family::F || family == Family::G)
    throw InvalidArgument("crosscheck needs a classical type (A, B, C or D)");
  const auto [lo, hi] = parse_ranks(ranks);
  const Rational box = parse_rational(box_text);
  const auto reports = crosscheck(family, lo, hi, box, spin, c.jobs);
  std::size_t bad = 0;
  for (const auto& r : reports) {
    out << to_string(r.kind) << " box=" << to_string(r.box) << (r.spin ? " spin" : "")
        << ": tested=" << r.tested << " disagreements=" << r.disagreements.size() << "\n";
    for (const auto& d : r.disagreements)
      out << "  " << to_string(d.weight) << ": closed form " << verdict_word(d.closed_form)
          << ", oracle " << verdict_word(d.oracle) << "\n";
    bad += r.disagreements.size();
  }
  return bad == 0 ? kExitMcm : kExitInternal;
}

int cmd_rootinfo(const Common& c, std::ostream& out) {
  const SimpleType kind = parse_type(c.type, c.rank);
  const RootSystem rs = build_root_system(kind);
  const LeviData levi = levi_subsystem(rs);
  const auto thv = theta_covector_simple_expansion(rs);
  const long d = min_orbit_dim(rs, levi);
  std::vector<long> levi_simple;
  for (std::size_t k : levi.simple_indices) levi_simple.push_back(static_cast<long>(k) + 1);

  if (c.format == "json") {
    nlohmann::ordered_json j;
    j["type"] = to_string(kind);
    j["ambient_dim"] = rs.ambient_dim;
    auto simple = nlohmann::ordered_json::array();
    for (const auto& a : rs.simple_roots) simple.push_back(rationals(a));
    j["simple_roots"] = simple;
    j["theta"] = rationals(rs.theta);
    j["theta_coroot_expansion"] = thv;
    j["rho"] = rationals(rs.rho);
    j["positive_roots"] = rs.num_positive_roots();
    j["levi_type"] = to_string(levi.classified_type);
    j["levi_simple_roots"] = levi_simple;
    auto varpi = nlohmann::ordered_json::array();
    for (const auto& v : levi.fundamental_weights) varpi.push_back(rationals(v));
    j["levi_fundamental_weights"] = varpi;
    j["d"] = d;
    out << j.dump(2) << "\n";
    return kExitMcm;
  }
  if (c.format != "text")
    throw InvalidArgument("rootinfo supports --format text or json, got '" + c.format + "'");
  out << "type: " << to_string(kind) << "\n";
  for (std::size_t i = 0; i < rs.rank(); ++i)
    out << "alpha_" << i + 1 << " = " << json_vector(rs.simple_roots[i]) << "\n";
  out << "theta = " << in_e_basis(rs.theta) << " = " << json_vector(rs.theta) << "\n"
      << "theta^vee = " << in_simple_basis(thv, "alpha^vee_") << "\n"
      << "rho = " << json_vector(rs.rho) << "\n"
      << "positive roots: " << rs.num_positive_roots() << "\n"
      << "Levi: " << to_string(levi.classified_type) << ", simple roots";
  for (long k : levi_simple) out << " alpha_" << k;
  out << "\n";
  for (std::size_t i = 0; i < levi.fundamental_weights.size(); ++i)
    out << "varpi_" << i + 1 << " = " << json_vector(levi.fundamental_weights[i]) << "\n";
  out << "d = " << d << "\n";
  return kExitMcm;
}

int cmd_tables(const Common& c, const std::string& dir, long bound, long ceiling,
               std::ostream& out) {
  EnumerateOptions options;
  options.coeff_bound = bound;
  options.ceiling = ceiling;
  options.jobs = c.jobs;
  for (const auto& path : write_tables(dir, options)) out << path << "\n";
  return kExitMcm;
}

constexpr const char* kGrammar = R"(Weights (--weight):
  A_n     "lambda;lambda_1,...,lambda_{n-1}"   e.g. "1;1,0" (A3), "2" = "2;0" (A2)
  C_n     "lambda_0;lambda_1,...,lambda_{n-1}" lambda_0 in {0,1}, e.g. "1;2,1" (C3)
  B_n,D_n "lambda;lambda_1,...,lambda_{n-2}"   e.g. "1;1,0" (D4), "0;3/2,1/2" (Spin B4)
  E,F,G   "a_1,...,a_r" over the Levi fundamental weights, e.g. "3" (G2)
An omitted Levi part is all zeros. Half-integers select the Spin sublattice.

Exit status: 0 MCM / success, 1 not MCM, 2 input error, 3 internal disagreement.)";

}  // namespace

SimpleType parse_type(std::string_view type, int rank) {
  const std::string t = trim(type);
  if (t.empty()) throw InvalidArgument("empty type");
  const Family family = parse_family(t.substr(0, 1));
  int r = rank;
  if (t.size() > 1) {
    const int inline_rank = static_cast<int>(parse_long(t.substr(1), "rank"));
    if (rank != 0 && rank != inline_rank)
      throw InvalidArgument("type " + t + " conflicts with --rank " + std::to_string(rank));
    r = inline_rank;
  }
  if (r == 0) {
    if (family == Family::F) r = 4;
    else if (family == Family::G) r = 2;
    else throw InvalidArgument(std::string("type ") + family_letter(family) + " needs --rank");
  }
  return make_simple_type(family, r);
}

StabilizerWeight parse_weight(const SimpleType& kind, std::string_view text, bool spin) {
  const std::string s = trim(text);
  if (s.empty()) throw InvalidArgument("empty weight");
  const auto n = static_cast<std::size_t>(kind.rank);
  if (is_exceptional(kind)) {
    if (s.find(';') != std::string::npos)
      throw InvalidArgument("exceptional weights are comma-separated varpi coefficients, no ';'");
    if (spin) throw InvalidArgument("--spin applies to types B and D only");
    std::vector<long> coeffs;
    for (const auto& part : split(s, ',')) coeffs.push_back(parse_long(part, "coefficient"));
    StabilizerWeight w = WeightExceptional{std::move(coeffs)};
    validate_weight(kind, w);
    return w;
  }
  const auto semi = s.find(';');
  const std::string head = trim(s.substr(0, semi));
  const std::string tail = semi == std::string::npos ? "" : trim(s.substr(semi + 1));
  if (tail.find(';') != std::string::npos) throw InvalidArgument("more than one ';' in weight");

  StabilizerWeight w;
  switch (kind.family) {
    case Family::A: {
      if (spin) throw InvalidArgument("--spin applies to types B and D only");
      std::vector<long> ls;
      for (const auto& x : levi_part(kind, tail, n - 1)) ls.push_back(parse_long(x, "lambda_i"));
      w = WeightA{parse_long(head, "lambda"), std::move(ls)};
      break;
    }
    case Family::C: {
      if (spin) throw InvalidArgument("--spin applies to types B and D only");
      std::vector<long> ls;
      for (const auto& x : levi_part(kind, tail, n - 1)) ls.push_back(parse_long(x, "lambda_i"));
      w = WeightC{static_cast<int>(parse_long(head, "lambda_0")), std::move(ls)};
      break;
    }
    default: {
      std::vector<Rational> ls;
      bool halves = false;
      for (const auto& x : levi_part(kind, tail, n - 2)) {
        ls.push_back(parse_rational(x));
        halves = halves || !is_integer(ls.back());
      }
      w = WeightOrthogonal{parse_long(head, "lambda"), std::move(ls), spin || halves};
      break;
    }
  }
  validate_weight(kind, w);
  return w;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximal Cohen-Macaulay equivariant sheaves on minimal nilpotent orbit closures",
               "mcm"};
  app.footer(kGrammar);
  app.require_subcommand(1);
  app.set_version_flag("--version", "mcm 1.0");

  Common common;
  auto add_jobs = [&](CLI::App* cmd) {
    cmd->add_option("-j,--jobs", common.jobs, "Worker threads (0 = all cores)");
  };

  std::string weight;
  bool spin = false, trace = false;
  auto* check = app.add_subcommand("check", "Decide whether one weight gives an MCM sheaf");
  add_type(check, common);
  check->add_option("-w,--weight", weight, "Stabilizer weight (grammar below)")->required();
  check->add_flag("--spin", spin, "Weight lies on the Spin sublattice (B, D)");
  check->add_flag("--trace", trace, "Print every family member and its cohomology");
  check->add_option("-f,--format", common.format, "text or json");
  check->footer(kGrammar);

  std::optional<long> box;
  long bound = 16, ceiling = 64;
  bool exhaustive = false;
  std::string out_path;
  auto* enumerate = app.add_subcommand("enumerate", "List the MCM weights of a type");
  add_type(enumerate, common);
  enumerate->add_option("--bound", bound, "Coefficient bound (exceptional types)");
  enumerate->add_option("--ceiling", ceiling, "Largest bound reached by shell enlargement");
  enumerate->add_flag("--exhaustive", exhaustive,
                      "Raise the bound to cover the whole admissible region (proves completeness)");
  enumerate->add_option("--box", box, "Coordinate box (required for classical types)");
  enumerate->add_option("-f,--format", common.format, "json, csv or text");
  enumerate->add_option("-o,--out", out_path, "Write the table here instead of stdout");
  add_jobs(enumerate);

  std::string ranks, box_text = "4";
  bool cross_spin = false;
  auto* cross = app.add_subcommand("crosscheck", "Compare closed forms with the oracle on a box");
  cross->add_option("-t,--type", common.type, "A, B, C or D")->required();
  cross->add_option("--ranks", ranks, "Rank or range, e.g. 2..5")->required();
  cross->add_option("--box", box_text, "Coordinate bound, e.g. 3 or 5/2");
  cross->add_flag("--spin", cross_spin, "Use the Spin sublattice (B, D)");
  add_jobs(cross);

  auto* rootinfo = app.add_subcommand("rootinfo", "Root data, Levi and orbit dimension");
  add_type(rootinfo, common);
  rootinfo->add_option("-f,--format", common.format, "text or json");

  std::string dir = "tables";
  auto* tables = app.add_subcommand("tables", "Write the five exceptional tables in all formats");
  tables->add_option("-o,--out", dir, "Output directory");
  tables->add_option("--bound", bound, "Coefficient bound");
  tables->add_option("--ceiling", ceiling, "Largest bound reached by shell enlargement");
  add_jobs(tables);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }

  try {
    if (*check) return cmd_check(common, weight, spin, trace, out);
    if (*enumerate)
      return cmd_enumerate(common, box, bound, ceiling, exhaustive, out_path, out, err);
    if (*cross) return cmd_crosscheck(common, ranks, box_text, cross_spin, out);
    if (*rootinfo) return cmd_rootinfo(common, out);
    if (*tables) return cmd_tables(common, dir, bound, ceiling, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInput;
}

}  // namespace mcm
