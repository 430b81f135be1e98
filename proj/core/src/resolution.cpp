#include "motivic/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "motivic/error.hpp"
#include "motivic/monad.hpp"

namespace motivic {

namespace {

FinDiagram one_set(std::size_t n) { return FinDiagram::from_values({n}, {}); }

std::size_t power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

// Index permutation underlying tensor_permutation: idx -> image.
std::vector<std::size_t> index_permutation(const SetMap& sigma, std::size_t m_size) {
  const QMatrix p = tensor_permutation(sigma, m_size);
  std::vector<std::size_t> out(p.cols());
  for (std::size_t c = 0; c < p.cols(); ++c)
    for (std::size_t r = 0; r < p.rows(); ++r)
      if (p(r, c) == 1) out[c] = r;
  return out;
}

std::vector<Rational> key(const QMatrix& m) { return m.entries(); }

}  // namespace

TowerContext make_tower(const FinSet& x, const FinSet& y, std::size_t bound) {
  return {x, y, artin_monoid(y), artin_monoid(x), bound};
}

std::vector<FinDiagram> tower_census(std::size_t k, std::size_t bound) {
  if (k > 2) throw InvariantError("tower_census: the tower is implemented on levels 0..2");
  return enumerate_diagrams(k, std::vector<std::size_t>(k, bound), EmptySets::allow);
}

TowerLevel level(std::size_t k, const FinSet& x, const FinSet& y, std::size_t bound) {
  if (k > 2) throw InvariantError("level: the tower is implemented on levels 0..2");
  if (bound < 2) throw InvariantError("level: bound must be at least 2");
  TowerLevel out{k, bound, tower_census(k, bound), {}};
  for (const auto& cls : out.census) {
    const std::size_t s1 = k == 0 ? 1 : cls.size(0);
    const std::size_t cols = power(y.size(), s1);
    // Column orbits under Aut(cls) acting through S_1.
    std::vector<std::size_t> parent(cols);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t a) {
      while (parent[a] != a) a = parent[a] = parent[parent[a]];
      return a;
    };
    if (k > 0) {
      for (const auto& g : automorphism_group(cls).generators) {
        const auto perm = index_permutation(g.components[0], y.size());
        for (std::size_t c = 0; c < cols; ++c) parent[find(c)] = find(perm[c]);
      }
    }
    FixedSpace space{x.size(), cols, {}};
    for (std::size_t r = 0; r < x.size(); ++r)
      for (std::size_t root = 0; root < cols; ++root) {
        if (find(root) != root) continue;
        QMatrix b(x.size(), cols);
        for (std::size_t c = 0; c < cols; ++c)
          if (find(c) == root) b(r, c) = 1;
        space.basis.push_back(std::move(b));
      }
    out.components.emplace(cls, std::move(space));
  }
  return out;
}

QMatrix iterated_mult(const ArtinMonoid& m, std::size_t n) {
  if (n == 0) return m.unit;
  QMatrix acc = QMatrix::identity(m.size());
  for (std::size_t i = 1; i < n; ++i) acc = m.mult * kron(acc, QMatrix::identity(m.size()));
  return acc;
}

QMatrix fiber_shuffle(const SetMap& phi, std::size_t m_size) {
  std::vector<std::size_t> order(phi.dom());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return phi(a) < phi(b); });
  std::vector<std::size_t> sigma(phi.dom());
  for (std::size_t pos = 0; pos < order.size(); ++pos) sigma[order[pos]] = pos;
  return tensor_permutation(SetMap(phi.dom(), phi.dom(), sigma), m_size);
}

QMatrix fiber_mult(const ArtinMonoid& m, const SetMap& phi) {
  std::vector<QMatrix> blocks;
  for (auto f : phi.fiber_sizes()) blocks.push_back(iterated_mult(m, f));
  return kron_all(blocks) * fiber_shuffle(phi, m.size());
}

namespace {

void check_level0(const TowerContext& ctx, const QMatrix& f) {
  if (f.rows() != ctx.x.size() || f.cols() != ctx.y.size())
    throw ShapeError("coface: a level-0 element is an |X| x |Y| matrix");
}

void check_one_set(const FinDiagram& cls) {
  if (cls.k() != 1) throw ShapeError("coface: level-1 classes are single sets");
}

}  // namespace

QMatrix coface_d0(const TowerContext& ctx, const QMatrix& f, const FinDiagram& cls) {
  check_level0(ctx, f);
  check_one_set(cls);
  return iterated_mult(ctx.target, cls.size(0)) * kron_all(std::vector<QMatrix>(cls.size(0), f));
}

QMatrix coface_d1(const TowerContext& ctx, const QMatrix& f, const FinDiagram& cls) {
  check_level0(ctx, f);
  check_one_set(cls);
  return f * iterated_mult(ctx.source, cls.size(0));
}

TowerPoint level0_point(const QMatrix& f) { return {{FinDiagram{}, f}}; }

TowerPoint coface(const TowerContext& ctx, std::size_t from, std::size_t i, const TowerPoint& p) {
  TowerPoint out;
  if (from == 0) {
    if (i > 1) throw InvariantError("coface: level 0 has cofaces d0, d1");
    const QMatrix& f = p.at(FinDiagram{});
    for (const auto& cls : tower_census(1, ctx.bound))
      out.emplace(cls, i == 0 ? coface_d0(ctx, f, cls) : coface_d1(ctx, f, cls));
    return out;
  }
  if (from != 1 || i > 2) throw InvariantError("coface: implemented out of levels 0 and 1");
  for (const auto& cls : tower_census(2, ctx.bound)) {
    const SetMap& phi = cls.maps()[0];
    QMatrix value;
    if (i == 0) {
      std::vector<QMatrix> blocks;
      for (auto f : phi.fiber_sizes()) blocks.push_back(p.at(one_set(f)));
      value = iterated_mult(ctx.target, phi.cod()) * kron_all(blocks) * fiber_shuffle(phi, ctx.y.size());
    } else if (i == 1) {
      value = p.at(one_set(cls.size(0)));
    } else {
      value = p.at(one_set(cls.size(1))) * fiber_mult(ctx.source, phi);
    }
    out.emplace(cls, std::move(value));
  }
  return out;
}

TowerPoint codegeneracy(const TowerContext& ctx, std::size_t from, std::size_t j, const TowerPoint& p) {
  if (from == 1) {
    if (j != 0) throw InvariantError("codegeneracy: level 1 has only s0");
    return level0_point(p.at(one_set(1)));
  }
  if (from != 2 || j > 1) throw InvariantError("codegeneracy: implemented out of levels 1 and 2");
  TowerPoint out;
  for (std::size_t s = 0; s <= ctx.bound; ++s) {
    const FinDiagram cls = j == 0 ? FinDiagram::from_values({s, 1}, {std::vector<std::size_t>(s, 0)})
                                  : FinDiagram::from_values({s, s}, {SetMap::identity(s).values()});
    out.emplace(one_set(s), p.at(canonical_form(cls)));
  }
  return out;
}

bool is_aut_fixed(const QMatrix& g, const FinDiagram& cls, std::size_t source_size) {
  if (cls.k() == 0) return true;
  for (const auto& gen : automorphism_group(cls).generators)
    if (g * tensor_permutation(gen.components[0], source_size) != g) return false;
  return true;
}

bool equalizes(const TowerContext& ctx, const QMatrix& f) {
  for (std::size_t s = 0; s <= ctx.bound; ++s) {
    const FinDiagram cls = one_set(s);
    if (coface_d0(ctx, f, cls) != coface_d1(ctx, f, cls)) return false;
  }
  return true;
}

namespace {

// All {0,1} rows of length n, lexicographic with the first entry most significant.
std::vector<std::vector<Rational>> binary_rows(std::size_t n) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Rational> r(n);
    for (std::size_t i = 0; i < n; ++i) r[i] = (mask >> (n - 1 - i)) & 1u;
    rows.push_back(std::move(r));
  }
  return rows;
}

// Every matrix whose rows are drawn from `rows`, in lexicographic order.
template <class Keep>
std::vector<QMatrix> stack_rows(const std::vector<std::vector<Rational>>& rows, std::size_t nrows, std::size_t ncols,
                                Keep keep) {
  std::vector<QMatrix> out;
  if (rows.empty()) return out;
  std::vector<std::size_t> pick(nrows, 0);
  while (true) {
    QMatrix m(nrows, ncols);
    for (std::size_t r = 0; r < nrows; ++r)
      for (std::size_t c = 0; c < ncols; ++c) m(r, c) = rows[pick[r]][c];
    if (keep(m)) out.push_back(std::move(m));
    std::size_t r = nrows;
    while (r > 0) {
      --r;
      if (++pick[r] < rows.size()) break;
      pick[r] = 0;
      if (r == 0) return out;
    }
    if (nrows == 0) return out;
  }
}

QMatrix as_row(const std::vector<Rational>& r) { return QMatrix(1, r.size(), r); }

}  // namespace

std::vector<QMatrix> equalizer(const FinSet& x, const FinSet& y, std::size_t bound) {
  if (bound < 2) throw InvariantError("equalizer: bound must be at least 2");
  const TowerContext ctx = make_tower(x, y, bound);
  // m_B^(S) is supported on constant tuples, so the equations hold row by
  // row; admissible rows are found against a one-point target first.
  const TowerContext row_ctx = make_tower(FinSet(1), y, bound);
  std::vector<std::vector<Rational>> rows;
  for (auto& r : binary_rows(y.size()))
    if (equalizes(row_ctx, as_row(r))) rows.push_back(std::move(r));
  return stack_rows(rows, x.size(), y.size(), [&](const QMatrix& f) { return equalizes(ctx, f); });
}

MdffeReport verify_mdffe(const FinSet& x, const FinSet& y, std::size_t bound) {
  MdffeReport r;
  r.x_size = x.size();
  r.y_size = y.size();
  r.bound = bound;

  const auto eq = equalizer(x, y, bound);
  const auto eq_next = equalizer(x, y, bound + 1);
  r.equalizer_count = eq.size();
  r.stable_at_next_bound = eq == eq_next;

  const ArtinMonoid a = artin_monoid(y);
  const ArtinMonoid b = artin_monoid(x);
  const ArtinMonoid point = artin_monoid(FinSet(1));
  std::vector<std::vector<Rational>> alg_rows;
  for (auto& row : binary_rows(y.size()))
    if (is_algebra_morphism(as_row(row), a, point)) alg_rows.push_back(std::move(row));
  const auto algebra = stack_rows(alg_rows, x.size(), y.size(),
                                  [&](const QMatrix& f) { return is_algebra_morphism(f, a, b).ok; });
  r.algebra_count = algebra.size();

  std::vector<QMatrix> comonoid;
  for (const auto& m : solve_coalgebra_morphisms(artin_comonoid(x), artin_comonoid(y)))
    comonoid.push_back(m.matrix.transpose());
  r.comonoid_count = comonoid.size();

  std::vector<QMatrix> setmaps;
  for (const auto& f : all_maps(x.size(), y.size())) setmaps.push_back(graph_matrix(f).transpose());
  r.setmap_count = setmaps.size();

  auto as_set = [](const std::vector<QMatrix>& ms) {
    std::set<std::vector<Rational>> s;
    for (const auto& m : ms) s.insert(key(m));
    return s;
  };
  const auto s_eq = as_set(eq);
  r.sets_equal = s_eq == as_set(algebra) && s_eq == as_set(comonoid) && s_eq == as_set(setmaps);
  return r;
}

// ---------------------------------------------------------------------------

namespace {

// (sigma_* a)(t') = a(t' o sigma_1): a o pi^-1 with pi the induced index map.
SetMap transport(const SetMap& a, const DiagramIso& sigma, std::size_t y_size) {
  const auto pi = index_permutation(sigma.components[0], y_size);
  std::vector<std::size_t> v(a.dom());
  for (std::size_t idx = 0; idx < a.dom(); ++idx) v[pi[idx]] = a(idx);
  return SetMap(a.dom(), a.cod(), std::move(v));
}

std::vector<FinDiagram> all_objects(std::size_t k, std::size_t bound) {
  std::vector<FinDiagram> objs;
  if (k == 0) return {FinDiagram{}};
  std::vector<std::size_t> sizes(k, 1);
  while (true) {
    // every chain of maps with these sizes
    std::vector<std::vector<SetMap>> choices;
    for (std::size_t j = 0; j + 1 < k; ++j) choices.push_back(all_maps(sizes[j], sizes[j + 1]));
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      std::vector<std::vector<std::size_t>> values;
      for (std::size_t j = 0; j < choices.size(); ++j) values.push_back(choices[j][pick[j]].values());
      objs.push_back(FinDiagram::from_values(sizes, values));
      std::size_t j = 0;
      while (j < pick.size() && ++pick[j] == choices[j].size()) pick[j++] = 0;
      if (j == pick.size()) break;
    }
    std::size_t i = 0;
    while (i < k && ++sizes[i] > bound) sizes[i++] = 1;
    if (i == k) break;
  }
  return objs;
}

}  // namespace

LimitComparison compare_limit_readings(std::size_t k, std::size_t bound, const FinSet& x, const FinSet& y) {
  LimitComparison out;
  const auto classes = enumerate_diagrams(k, std::vector<std::size_t>(k, bound));
  out.classes = classes.size();

  for (const auto& cls : classes) {
    const std::size_t s1 = k == 0 ? 1 : cls.size(0);
    const auto gens = automorphism_group(cls).generators;
    std::size_t fixed = 0;
    for (const auto& a : all_maps(power(y.size(), s1), x.size())) {
      bool ok = true;
      for (const auto& g : gens) ok = ok && transport(a, g, y.size()) == a;
      if (ok) ++fixed;
    }
    out.product_of_fixed_points *= fixed;
  }

  const auto objects = all_objects(k, bound);
  out.objects = objects.size();
  std::map<FinDiagram, std::vector<std::size_t>> components;
  for (std::size_t o = 0; o < objects.size(); ++o) components[canonical_form(objects[o])].push_back(o);

  for (const auto& [cls, members] : components) {
    const FinDiagram& base = objects[members.front()];
    const std::size_t s1 = k == 0 ? 1 : base.size(0);
    std::vector<DiagramIso> from_base;
    for (auto o : members) from_base.push_back(*are_isomorphic(base, objects[o]));

    std::size_t sections = 0;
    for (const auto& a : all_maps(power(y.size(), s1), x.size())) {
      std::vector<SetMap> family;
      for (std::size_t m = 0; m < members.size(); ++m)
        family.push_back(k == 0 ? a : transport(a, from_base[m], y.size()));
      bool consistent = true;
      for (std::size_t m1 = 0; m1 < members.size() && consistent; ++m1) {
        const FinDiagram& o1 = objects[members[m1]];
        const auto autos = automorphisms(o1);
        for (std::size_t m2 = 0; m2 < members.size() && consistent; ++m2) {
          const DiagramIso w = *are_isomorphic(o1, objects[members[m2]]);
          for (const auto& h : autos) {
            const DiagramIso sigma = compose(h, w);
            if (k > 0 && transport(family[m1], sigma, y.size()) != family[m2]) {
              consistent = false;
              break;
            }
          }
        }
      }
      if (consistent) ++sections;
    }
    out.groupoid_sections *= sections;
  }
  return out;
}

}  // namespace motivic
