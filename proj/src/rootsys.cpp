#include "mcm/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace mcm {

char family_letter(Family f) { return "ABCDEFG"[static_cast<int>(f)]; }

Family parse_family(std::string_view s) {
  if (s.size() == 1) {
    char c = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
    if (c >= 'A' && c <= 'G') return static_cast<Family>(c - 'A');
  }
  throw InvalidArgument("unknown type '" + std::string(s) + "': expected one of A B C D E F G");
}

bool is_admissible(Family family, int rank) {
  switch (family) {
    case Family::A: return rank >= 1;
    case Family::B: return rank >= 2;
    case Family::C: return rank >= 2;
    case Family::D: return rank >= 3;
    case Family::E: return rank >= 6 && rank <= 8;
    case Family::F: return rank == 4;
    case Family::G: return rank == 2;
  }
  return false;
}

SimpleType make_simple_type(Family family, int rank) {
  if (!is_admissible(family, rank)) {
    static const char* constraint[] = {"A requires rank >= 1", "B requires rank >= 2",
                                       "C requires rank >= 2", "D requires rank >= 3",
                                       "E requires rank 6, 7 or 8", "F requires rank 4",
                                       "G requires rank 2"};
    throw InvalidArgument(std::string("inadmissible type ") + family_letter(family) +
                          std::to_string(rank) + ": " + constraint[static_cast<int>(family)]);
  }
  return SimpleType{family, rank};
}

bool is_exceptional(const SimpleType& t) {
  return t.family == Family::E || t.family == Family::F || t.family == Family::G;
}

bool is_classical(const SimpleType& t) { return !is_exceptional(t); }

std::string to_string(const SimpleType& t) {
  return std::string(1, family_letter(t.family)) + std::to_string(t.rank);
}

std::vector<SimpleType> normalized_components(Family family, int rank) {
  using enum Family;
  if (rank <= 0) return {};
  switch (family) {
    case A: return {{A, rank}};
    case B:
      if (rank == 1) return {{A, 1}};
      return {{B, rank}};
    case C:
      if (rank == 1) return {{A, 1}};
      if (rank == 2) return {{B, 2}};
      return {{C, rank}};
    case D:
      if (rank == 1) return {};
      if (rank == 2) return {{A, 1}, {A, 1}};
      if (rank == 3) return {{A, 3}};
      return {{D, rank}};
    default: return {{family, rank}};
  }
}

std::string to_string(const std::vector<SimpleType>& components) {
  if (components.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i) s += "+";
    s += to_string(components[i]);
  }
  return s;
}

std::optional<std::size_t> RootSystem::positive_index(const RationalVector& v) const {
  for (std::size_t i = 0; i < positive_roots.size(); ++i)
    if (positive_roots[i] == v) return i;
  return std::nullopt;
}

bool RootSystem::is_root(const RationalVector& v) const {
  if (v.size() != ambient_dim) return false;
  return positive_index(v).has_value() || positive_index(Rational(-1) * v).has_value();
}

namespace {

using Coeffs = std::vector<long>;

RationalVector vec(std::initializer_list<Rational> xs) { return RationalVector(xs); }

RationalVector e_minus_e(std::size_t dim, std::size_t i, std::size_t j) {
  RationalVector v = zero_vector(dim);
  v[i] = 1;
  v[j] = -1;
  return v;
}

std::vector<RationalVector> simple_roots_for(const SimpleType& t, std::size_t& dim) {
  const auto n = static_cast<std::size_t>(t.rank);
  std::vector<RationalVector> roots;
  const Rational h(1, 2);
  switch (t.family) {
    case Family::A:
      dim = n + 1;
      for (std::size_t i = 0; i < n; ++i) roots.push_back(e_minus_e(dim, i, i + 1));
      break;
    case Family::B:
    case Family::C:
    case Family::D:
      dim = n;
      for (std::size_t i = 0; i + 1 < n; ++i) roots.push_back(e_minus_e(dim, i, i + 1));
      if (t.family == Family::B) roots.push_back(unit_vector(dim, n - 1));
      if (t.family == Family::C) roots.push_back(Rational(2) * unit_vector(dim, n - 1));
      if (t.family == Family::D) {
        RationalVector v = zero_vector(dim);
        v[n - 2] = 1;
        v[n - 1] = 1;
        roots.push_back(v);
      }
      break;
    case Family::E: {
      dim = 8;
      roots.push_back(vec({h, -h, -h, -h, -h, -h, -h, h}));
      roots.push_back(vec({1, 1, 0, 0, 0, 0, 0, 0}));
      for (std::size_t i = 0; i + 2 < n; ++i) roots.push_back(e_minus_e(dim, i + 1, i));
      break;
    }
    case Family::F:
      dim = 4;
      roots.push_back(vec({0, 1, -1, 0}));
      roots.push_back(vec({0, 0, 1, -1}));
      roots.push_back(vec({0, 0, 0, 1}));
      roots.push_back(vec({h, -h, -h, -h}));
      break;
    case Family::G:
      dim = 3;
      roots.push_back(vec({1, -1, 0}));
      roots.push_back(vec({-2, 1, 1}));
      break;
  }
  return roots;
}

// Positive roots in simple-root coordinates, generated height by height:
// beta + alpha_i is a root iff q = p - <beta, alpha_i^vee> > 0, where p is the
// length of the alpha_i-string below beta.
std::vector<Coeffs> generate_positive_roots(const std::vector<std::vector<long>>& cartan) {
  const std::size_t n = cartan.size();
  std::set<Coeffs> known;
  std::vector<Coeffs> all;
  std::vector<Coeffs> layer;
  for (std::size_t i = 0; i < n; ++i) {
    Coeffs c(n, 0);
    c[i] = 1;
    layer.push_back(c);
  }
  while (!layer.empty()) {
    for (const auto& c : layer) {
      known.insert(c);
      all.push_back(c);
    }
    std::set<Coeffs> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < n; ++i) {
        long p = 0;
        Coeffs down = beta;
        while (down[i] > 0) {
          --down[i];
          if (!known.contains(down)) break;
          ++p;
        }
        long pairing = 0;
        for (std::size_t j = 0; j < n; ++j) pairing += beta[j] * cartan[j][i];
        if (p - pairing > 0) {
          Coeffs up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
  }
  return all;
}

// Component identification for a connected Dynkin diagram.
SimpleType classify_component(const std::vector<std::vector<long>>& a,
                              const std::vector<std::size_t>& nodes) {
  const int r = static_cast<int>(nodes.size());
  std::map<std::size_t, std::vector<std::size_t>> adj;
  int max_bond = 1;
  for (std::size_t x : nodes)
    for (std::size_t y : nodes)
      if (x != y && a[x][y] != 0) {
        adj[x].push_back(y);
        max_bond = std::max<int>(max_bond, static_cast<int>(a[x][y] * a[y][x]));
      }
  if (r == 1) return {Family::A, 1};
  if (max_bond == 3) return {Family::G, 2};
  if (max_bond == 2) {
    if (r == 2) return {Family::B, 2};
    if (r == 4) {
      // F4 has its double bond between the two middle nodes.
      for (std::size_t x : nodes)
        for (std::size_t y : adj[x])
          if (a[x][y] * a[y][x] == 2 && adj[x].size() == 2 && adj[y].size() == 2)
            return {Family::F, 4};
    }
    // B_r: the end node of the double bond is short; C_r: it is long.
    for (std::size_t x : nodes) {
      if (adj[x].size() != 1) continue;
      std::size_t y = adj[x][0];
      if (a[x][y] * a[y][x] != 2) continue;
      // |<x, y^vee>| = 1 against |<y, x^vee>| = 2 means x is the shorter root.
      bool end_is_short = std::abs(a[x][y]) == 1;
      return {end_is_short ? Family::B : Family::C, r};
    }
    throw InternalError("unrecognized non-simply-laced Dynkin diagram");
  }
  std::vector<std::size_t> branch;
  for (std::size_t x : nodes)
    if (adj[x].size() == 3) branch.push_back(x);
  if (branch.empty()) return {Family::A, r};
  if (branch.size() != 1) throw InternalError("unrecognized Dynkin diagram");
  std::vector<int> arms;
  for (std::size_t start : adj[branch[0]]) {
    int len = 1;
    std::size_t prev = branch[0], cur = start;
    while (adj[cur].size() == 2) {
      std::size_t nxt = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {Family::D, r};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] <= 4) return {Family::E, r};
  throw InternalError("unrecognized simply-laced Dynkin diagram");
}

}  // namespace

std::vector<SimpleType> classify_cartan(const std::vector<std::vector<long>>& cartan) {
  const std::size_t n = cartan.size();
  std::vector<bool> seen(n, false);
  std::vector<SimpleType> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp, stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (std::size_t y = 0; y < n; ++y)
        if (!seen[y] && cartan[x][y] != 0) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
    SimpleType t = classify_component(cartan, comp);
    for (const auto& c : normalized_components(t.family, t.rank)) out.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootSystem build_root_system(const SimpleType& kind) {
  make_simple_type(kind.family, kind.rank);

  RootSystem rs;
  rs.kind = kind;
  rs.simple_roots = simple_roots_for(kind, rs.ambient_dim);
  const std::size_t n = rs.simple_roots.size();
  for (const auto& a : rs.simple_roots)
    rs.simple_coroots.push_back((Rational(2) / dot(a, a)) * a);

  rs.cartan.assign(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      rs.cartan[i][j] = to_long(dot(rs.simple_roots[i], rs.simple_coroots[j]));

  struct Entry {
    long height;
    RationalVector v;
    Coeffs c;
  };
  std::vector<Entry> entries;
  for (auto& c : generate_positive_roots(rs.cartan)) {
    RationalVector v = zero_vector(rs.ambient_dim);
    long h = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] == 0) continue;
      v += Rational(c[i]) * rs.simple_roots[i];
      h += c[i];
    }
    entries.push_back({h, std::move(v), std::move(c)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.height != y.height) return x.height < y.height;
    return x.v < y.v;
  });

  RationalVector sum = zero_vector(rs.ambient_dim);
  for (auto& e : entries) {
    const Rational norm = dot(e.v, e.v);
    Coeffs cc(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational ci = Rational(e.c[i]) * dot(rs.simple_roots[i], rs.simple_roots[i]) / norm;
      cc[i] = to_long(ci);
    }
    sum += e.v;
    rs.positive_coroots.push_back((Rational(2) / norm) * e.v);
    rs.positive_roots.push_back(std::move(e.v));
    rs.root_coefficients.push_back(std::move(e.c));
    rs.coroot_matrix.push_back(std::move(cc));
  }

  // The highest root is the unique root of maximal height.
  rs.theta_index = rs.positive_roots.size() - 1;
  if (rs.positive_roots.size() > 1 &&
      entries[rs.theta_index].height == entries[rs.theta_index - 1].height)
    throw InternalError("highest root is not unique for " + to_string(kind));
  rs.theta = rs.positive_roots[rs.theta_index];
  rs.theta_covector = rs.positive_coroots[rs.theta_index];
  rs.rho = Rational(1, 2) * sum;
  return rs;
}

const RationalVector& highest_root(const RootSystem& rs) { return rs.theta; }

const RationalVector& rho(const RootSystem& rs) { return rs.rho; }

RationalVector coroot(const RootSystem& rs, const RationalVector& beta) {
  if (!rs.is_root(beta))
    throw InvalidArgument(to_string(beta) + " is not a root of " + to_string(rs.kind));
  return (Rational(2) / dot(beta, beta)) * beta;
}

Rational pair(std::span<const Rational> lambda, std::span<const Rational> beta_covector) {
  return dot(lambda, beta_covector);
}

std::vector<long> theta_covector_simple_expansion(const RootSystem& rs) {
  return rs.coroot_matrix[rs.theta_index];
}

LeviData levi_subsystem(const RootSystem& rs) {
  LeviData levi;
  for (std::size_t i = 0; i < rs.rank(); ++i) {
    if (sgn(dot(rs.simple_roots[i], rs.theta)) == 0)
      levi.simple_indices.push_back(i);
    else
      levi.non_levi_simple_indices.push_back(i);
  }
  // The F4 Levi is C3 listed with its long simple root last.
  if (rs.kind.family == Family::F)
    std::reverse(levi.simple_indices.begin(), levi.simple_indices.end());
  for (std::size_t i : levi.simple_indices) levi.simple_roots_levi.push_back(rs.simple_roots[i]);

  for (std::size_t b = 0; b < rs.num_positive_roots(); ++b) {
    if (sgn(dot(rs.positive_roots[b], rs.theta)) == 0) {
      levi.positive_indices_levi.push_back(b);
      levi.positive_roots_levi.push_back(rs.positive_roots[b]);
    } else {
      levi.complement_indices.push_back(b);
      levi.complement_roots.push_back(rs.positive_roots[b]);
    }
  }

  const std::size_t r = levi.rank();
  std::vector<std::vector<long>> cartan(r, std::vector<long>(r));
  std::vector<RationalVector> cartan_q(r, RationalVector(r));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < r; ++j) {
      cartan[k][j] = rs.cartan[levi.simple_indices[k]][levi.simple_indices[j]];
      cartan_q[k][j] = cartan[k][j];
    }
  levi.classified_type = classify_cartan(cartan);

  if (r > 0) {
    auto inv = invert(cartan_q);
    for (std::size_t i = 0; i < r; ++i) {
      RationalVector w = zero_vector(rs.ambient_dim);
      for (std::size_t k = 0; k < r; ++k)
        if (sgn(inv[i][k]) != 0) w += inv[i][k] * levi.simple_roots_levi[k];
      levi.fundamental_weights.push_back(std::move(w));
    }
  }
  return levi;
}

const RationalVector& levi_fundamental_weight(const LeviData& levi, std::size_t i) {
  if (i < 1 || i > levi.rank())
    throw InvalidArgument("Levi fundamental weight index " + std::to_string(i) +
                          " out of range 1.." + std::to_string(levi.rank()));
  return levi.fundamental_weights[i - 1];
}

}  // namespace mcm
