#pragma once

// Brute-force reference computations for the test suites. These work on
// plain vectors and loops and do not call the library routines they check.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "motivic/finset.hpp"
#include "motivic/hypercube.hpp"
#include "motivic/qlinalg.hpp"

namespace oracle {

using motivic::FinDiagram;
using motivic::QMatrix;
using motivic::Rational;

using Perm = std::vector<std::size_t>;

inline std::vector<Perm> permutations(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::vector<Perm> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Every tuple (sigma_0, ..., sigma_{k-1}) of permutations of the two
// diagrams' sets; calls visit(tuple) and stops when it returns false.
template <class Visit>
void for_each_perm_tuple(const std::vector<std::size_t>& sizes, Visit visit) {
  std::vector<std::vector<Perm>> choices;
  for (auto s : sizes) choices.push_back(permutations(s));
  std::vector<std::size_t> pick(sizes.size(), 0);
  std::vector<Perm> tuple(sizes.size());
  while (true) {
    for (std::size_t j = 0; j < sizes.size(); ++j) tuple[j] = choices[j][pick[j]];
    if (!visit(tuple)) return;
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == choices[j].size()) pick[j++] = 0;
    if (j == pick.size()) return;
  }
}

inline std::vector<std::vector<std::size_t>> map_values(const FinDiagram& d) {
  std::vector<std::vector<std::size_t>> v;
  for (const auto& m : d.maps()) v.push_back(m.values());
  return v;
}

// sigma_{j+1}(f_j(e)) == f'_j(sigma_j(e)) for all levels and elements.
inline bool natural(const std::vector<Perm>& sigma, const std::vector<std::vector<std::size_t>>& f,
                    const std::vector<std::vector<std::size_t>>& g) {
  for (std::size_t j = 0; j < f.size(); ++j)
    for (std::size_t e = 0; e < f[j].size(); ++e)
      if (sigma[j + 1][f[j][e]] != g[j][sigma[j][e]]) return false;
  return true;
}

inline bool isomorphic(const FinDiagram& a, const FinDiagram& b) {
  if (a.k() != b.k() || a.sizes() != b.sizes()) return false;
  const auto f = map_values(a), g = map_values(b);
  bool found = false;
  for_each_perm_tuple(a.sizes(), [&](const std::vector<Perm>& s) {
    found = natural(s, f, g);
    return !found;
  });
  return found;
}

inline std::size_t automorphism_count(const FinDiagram& d) {
  const auto f = map_values(d);
  std::size_t n = 0;
  for_each_perm_tuple(d.sizes(), [&](const std::vector<Perm>& s) {
    if (natural(s, f, f)) ++n;
    return true;
  });
  return n;
}

inline std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

inline std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

// All value vectors {0..cod-1}^dom, lexicographic.
inline std::vector<std::vector<std::size_t>> all_functions(std::size_t dom, std::size_t cod) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> v(dom, 0);
  while (true) {
    out.push_back(v);
    std::size_t i = dom;
    while (i > 0 && ++v[i - 1] == cod) v[--i] = 0;
    if (i == 0) return out;
  }
}

// Every diagram (not up to iso) with the given sizes.
inline std::vector<FinDiagram> all_diagrams(const std::vector<std::size_t>& sizes) {
  std::vector<FinDiagram> out;
  std::vector<std::vector<std::vector<std::size_t>>> choices;
  for (std::size_t j = 0; j + 1 < sizes.size(); ++j) choices.push_back(all_functions(sizes[j], sizes[j + 1]));
  std::vector<std::size_t> pick(choices.size(), 0);
  while (true) {
    std::vector<std::vector<std::size_t>> values;
    for (std::size_t j = 0; j < choices.size(); ++j) values.push_back(choices[j][pick[j]]);
    out.push_back(FinDiagram::from_values(sizes, values));
    std::size_t j = 0;
    while (j < pick.size() && ++pick[j] == choices[j].size()) pick[j++] = 0;
    if (j == pick.size()) return out;
  }
}

// Number of isomorphism classes among all diagrams with the given sizes,
// by pairwise brute-force isomorphism tests.
inline std::size_t class_count(const std::vector<std::size_t>& sizes) {
  std::vector<FinDiagram> reps;
  for (const auto& d : all_diagrams(sizes)) {
    bool seen = false;
    for (const auto& r : reps) seen = seen || isomorphic(d, r);
    if (!seen) reps.push_back(d);
  }
  return reps.size();
}

// ---------------------------------------------------------------------------

inline QMatrix schoolbook(const QMatrix& a, const QMatrix& b) {
  QMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational s = 0;
      for (std::size_t t = 0; t < a.cols(); ++t) s += a(i, t) * b(t, j);
      c(i, j) = s;
    }
  return c;
}

inline QMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int span = 5) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 4);
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      Rational q(num(rng), den(rng));
      q.canonicalize();
      m(r, c) = q;
    }
  return m;
}

// Coalgebra morphism equations read off entrywise: column sums 1 and
// c_{y,x} c_{y',x} = [y = y'] c_{y,x}.
inline bool coalgebra_entrywise(const QMatrix& c) {
  for (std::size_t x = 0; x < c.cols(); ++x) {
    Rational sum = 0;
    for (std::size_t y = 0; y < c.rows(); ++y) sum += c(y, x);
    if (sum != 1) return false;
    for (std::size_t y = 0; y < c.rows(); ++y)
      for (std::size_t y2 = 0; y2 < c.rows(); ++y2)
        if (c(y, x) * c(y2, x) != (y == y2 ? c(y, x) : Rational(0))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Covers.

inline std::set<std::size_t> members(const motivic::Cover& c, std::uint32_t t) {
  std::set<std::size_t> acc;
  bool first = true;
  for (std::size_t i = 0; i < c.components.size(); ++i) {
    if (!((t >> i) & 1u)) continue;
    std::set<std::size_t> s(c.components[i].begin(), c.components[i].end());
    if (first) {
      acc = s;
      first = false;
    } else {
      std::set<std::size_t> keep;
      for (auto p : acc)
        if (s.count(p)) keep.insert(p);
      acc = keep;
    }
  }
  return acc;
}

// Connected components of the nerve-union: one node per (component, point)
// incidence, joined when two incidences share the point. Components of the
// cover are discrete point sets, so nothing else is glued.
inline std::size_t union_components(const motivic::Cover& c) {
  std::vector<std::pair<std::size_t, std::size_t>> nodes;
  for (std::size_t i = 0; i < c.components.size(); ++i)
    for (auto p : c.components[i]) nodes.push_back({i, p});
  std::vector<std::size_t> parent(nodes.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = a + 1; b < nodes.size(); ++b)
      if (nodes[a].second == nodes[b].second) parent[find(b)] = find(a);
  std::set<std::size_t> roots;
  for (std::size_t a = 0; a < nodes.size(); ++a) roots.insert(find(a));
  return roots.size();
}

inline long inclusion_exclusion(const motivic::Cover& c) {
  long chi = 0;
  for (std::uint32_t t = 1; t < (1u << c.components.size()); ++t) {
    const long sign = (__builtin_popcount(t) % 2 == 1) ? 1 : -1;
    chi += sign * static_cast<long>(members(c, t).size());
  }
  return chi;
}

// Rank of an integer matrix modulo a large prime.
inline std::size_t rank_mod_p(std::vector<std::vector<long long>> m) {
  constexpr long long p = 1000000007LL;
  auto power = [&](long long b, long long e) {
    long long r = 1;
    b %= p;
    if (b < 0) b += p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return r;
  };
  std::size_t rank = 0;
  const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && (m[piv][c] % p + p) % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const long long inv = power(m[rank][c], p - 2);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const long long f = ((m[r][c] % p + p) % p) * inv % p;
      if (!f) continue;
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - f * m[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

// Homology of the nerve model: the disjoint union over points x of the full
// simplex on {i : x in W_i}. Simplicial chains, ranks mod p.
inline std::map<int, std::size_t> nerve_homology(const motivic::Cover& c, int top) {
  std::map<int, std::vector<std::pair<std::size_t, std::uint32_t>>> simplices;  // dim -> (point, face)
  for (std::size_t x = 0; x < c.universe; ++x) {
    std::uint32_t owners = 0;
    for (std::size_t i = 0; i < c.components.size(); ++i)
      if (std::find(c.components[i].begin(), c.components[i].end(), x) != c.components[i].end()) owners |= 1u << i;
    for (std::uint32_t f = owners; f; f = (f - 1) & owners) simplices[__builtin_popcount(f) - 1].push_back({x, f});
  }
  auto boundary_rank = [&](int n) -> std::size_t {
    if (n <= 0 || !simplices.count(n) || !simplices.count(n - 1)) return 0;
    const auto& hi = simplices[n];
    const auto& lo = simplices[n - 1];
    std::vector<std::vector<long long>> m(lo.size(), std::vector<long long>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j) {
      int pos = 0;
      for (std::size_t i = 0; i < 32; ++i) {
        if (!((hi[j].second >> i) & 1u)) continue;
        const std::pair<std::size_t, std::uint32_t> face{hi[j].first, hi[j].second & ~(1u << i)};
        const auto it = std::find(lo.begin(), lo.end(), face);
        m[static_cast<std::size_t>(it - lo.begin())][j] = (pos % 2 == 0) ? 1 : -1;
        ++pos;
      }
    }
    return rank_mod_p(m);
  };
  std::map<int, std::size_t> h;
  for (int n = 0; n <= top; ++n) {
    const std::size_t dim = simplices.count(n) ? simplices[n].size() : 0;
    h[n] = dim - boundary_rank(n) - boundary_rank(n + 1);
  }
  return h;
}

inline motivic::Cover random_cover(std::mt19937& rng, std::size_t max_components = 4, std::size_t max_points = 5) {
  std::uniform_int_distribution<std::size_t> ncomp(1, max_components), npts(1, max_points);
  motivic::Cover c;
  c.universe = 8;
  const std::size_t n = ncomp(rng);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::size_t> pts(c.universe);
    std::iota(pts.begin(), pts.end(), std::size_t{0});
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(npts(rng));
    std::sort(pts.begin(), pts.end());
    c.components.push_back(pts);
  }
  return c;
}

}  // namespace oracle
