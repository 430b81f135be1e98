#include "motivic/galois.hpp"

#include <algorithm>
#include <optional>

#include "motivic/error.hpp"

namespace motivic {

FiniteGroup::FiniteGroup(std::vector<std::vector<std::size_t>> table) : table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw InvariantError("FiniteGroup: a group has at least one element");
  for (const auto& row : table_) {
    if (row.size() != n) throw InvariantError("FiniteGroup: table must be square");
    for (auto v : row)
      if (v >= n) throw InvariantError("FiniteGroup: table entry outside the group");
  }
  std::optional<std::size_t> e;
  for (std::size_t g = 0; g < n && !e; ++g) {
    bool ok = true;
    for (std::size_t h = 0; h < n && ok; ++h) ok = table_[g][h] == h && table_[h][g] == h;
    if (ok) e = g;
  }
  if (!e) throw InvariantError("FiniteGroup: no identity element");
  identity_ = *e;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw InvariantError("FiniteGroup: multiplication is not associative");
  inverse_.assign(n, n);
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t h = 0; h < n; ++h)
      if (table_[g][h] == identity_ && table_[h][g] == identity_) inverse_[g] = h;
    if (inverse_[g] == n) throw InvariantError("FiniteGroup: element without inverse");
  }
}

FiniteGroup FiniteGroup::cyclic(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::klein_four() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return FiniteGroup(std::move(t));
}

FiniteGroup FiniteGroup::symmetric3() {
  // Elements are the permutations of {0,1,2} in lexicographic order; the
  // product g h is "h first, then g".
  const auto perms = all_permutations(3);
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      const SetMap prod = compose(perms[b], perms[a]);
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), prod) - perms.begin());
    }
  return FiniteGroup(std::move(t));
}

// ---------------------------------------------------------------------------

GSet::GSet(FiniteGroup group, FinSet carrier, std::vector<SetMap> action)
    : group_(std::move(group)), carrier_(std::move(carrier)), action_(std::move(action)) {
  const std::size_t n = carrier_.size();
  if (action_.size() != group_.order()) throw InvariantError("GSet: need one permutation per group element");
  for (const auto& p : action_)
    if (p.dom() != n || p.cod() != n || !p.is_bijective())
      throw InvariantError("GSet: every group element must act by a bijection of the carrier");
  if (action_[group_.identity()] != SetMap::identity(n))
    throw InvariantError("GSet: the identity must act trivially");
  for (std::size_t g = 0; g < group_.order(); ++g)
    for (std::size_t h = 0; h < group_.order(); ++h)
      if (action_[group_.mul(g, h)] != compose(action_[h], action_[g]))
        throw InvariantError("GSet: action(gh) must equal action(g) o action(h)");
}

GSet GSet::trivial(const FiniteGroup& group, const FinSet& carrier) {
  return GSet(group, carrier, std::vector<SetMap>(group.order(), SetMap::identity(carrier.size())));
}

GSet GSet::regular(const FiniteGroup& group) {
  std::vector<SetMap> action;
  for (std::size_t g = 0; g < group.order(); ++g) action.emplace_back(group.order(), group.order(), group.table()[g]);
  return GSet(group, FinSet(group.order()), std::move(action));
}

std::vector<GSet> all_gsets(const FiniteGroup& group, std::size_t n) {
  // Choose images for a generating set, then extend along products and keep
  // only consistent assignments.
  std::vector<std::size_t> gens;
  {
    std::vector<bool> reached(group.order(), false);
    reached[group.identity()] = true;
    for (std::size_t g = 0; g < group.order(); ++g) {
      if (reached[g]) continue;
      gens.push_back(g);
      bool grew = true;
      while (grew) {
        grew = false;
        for (std::size_t a = 0; a < group.order(); ++a)
          for (auto s : gens)
            if (reached[a] && !reached[group.mul(a, s)]) reached[group.mul(a, s)] = grew = true;
      }
    }
  }
  const auto perms = all_permutations(n);
  std::vector<GSet> out;
  std::vector<std::size_t> pick(gens.size(), 0);
  while (true) {
    std::vector<std::optional<SetMap>> act(group.order());
    act[group.identity()] = SetMap::identity(n);
    bool consistent = true;
    bool grew = true;
    while (grew && consistent) {
      grew = false;
      for (std::size_t a = 0; a < group.order() && consistent; ++a) {
        if (!act[a]) continue;
        for (std::size_t i = 0; i < gens.size() && consistent; ++i) {
          const std::size_t ag = group.mul(a, gens[i]);
          SetMap m = compose(perms[pick[i]], *act[a]);
          if (!act[ag]) {
            act[ag] = std::move(m);
            grew = true;
          } else if (*act[ag] != m) {
            consistent = false;
          }
        }
      }
    }
    if (consistent) {
      std::vector<SetMap> action;
      for (auto& m : act) action.push_back(*m);
      try {
        out.emplace_back(group, FinSet(n), std::move(action));
      } catch (const InvariantError&) {
      }
    }
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == perms.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

std::vector<SetMap> equivariant_set_maps(const GSet& x, const GSet& y) {
  if (!(x.group() == y.group())) throw ShapeError("equivariant_set_maps: the G-sets have different groups");
  std::vector<SetMap> out;
  for (auto& f : all_maps(x.size(), y.size())) {
    bool ok = true;
    for (std::size_t g = 0; g < x.group().order() && ok; ++g)
      ok = compose(x.action(g), f) == compose(f, y.action(g));
    if (ok) out.push_back(std::move(f));
  }
  return out;
}

QMatrix permutation_matrix(const SetMap& perm) { return graph_matrix(perm); }

QMatrix act_on_matrix(const QMatrix& c, const GSet& x, const GSet& y, std::size_t g) {
  const std::size_t ginv = x.group().inverse(g);
  return permutation_matrix(y.action(g)) * c * permutation_matrix(x.action(ginv));
}

std::vector<CoalgMorphism> fixed_coalgebra_morphisms(const GSet& x, const GSet& y) {
  if (!(x.group() == y.group())) throw ShapeError("fixed_coalgebra_morphisms: the G-sets have different groups");
  std::vector<CoalgMorphism> out;
  for (auto& m : solve_coalgebra_morphisms(artin_comonoid(x.carrier()), artin_comonoid(y.carrier()))) {
    bool fixed = true;
    for (std::size_t g = 0; g < x.group().order() && fixed; ++g) fixed = act_on_matrix(m.matrix, x, y, g) == m.matrix;
    if (fixed) out.push_back(std::move(m));
  }
  return out;
}

Subgroup make_subgroup(const FiniteGroup& group, std::vector<std::size_t> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  const std::size_t m = elements.size();
  auto index_of = [&](std::size_t g) -> std::size_t {
    auto it = std::lower_bound(elements.begin(), elements.end(), g);
    if (it == elements.end() || *it != g) throw InvariantError("make_subgroup: elements are not closed under the product");
    return static_cast<std::size_t>(it - elements.begin());
  };
  std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) table[a][b] = index_of(group.mul(elements[a], elements[b]));
  return {FiniteGroup(std::move(table)), std::move(elements)};
}

GSet restrict_action(const GSet& x, const Subgroup& h) {
  std::vector<SetMap> action;
  for (auto g : h.embedding) action.push_back(x.action(g));
  return GSet(h.group, x.carrier(), std::move(action));
}

}  // namespace motivic
