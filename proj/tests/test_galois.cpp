#include <doctest.h>

#include <set>

#include "motivic/artin.hpp"
#include "motivic/error.hpp"
#include "motivic/galois.hpp"
#include "oracles.hpp"

using namespace motivic;

namespace {

// f(g.x) = g.f(x) for every group element, straight from the action tables.
std::vector<std::vector<std::size_t>> brute_equivariant(const GSet& x, const GSet& y) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& f : oracle::all_functions(x.size(), y.size())) {
    bool ok = true;
    for (std::size_t g = 0; g < x.group().order() && ok; ++g)
      for (std::size_t e = 0; e < x.size() && ok; ++e) ok = f[x.action(g)(e)] == y.action(g)(f[e]);
    if (ok) out.push_back(f);
  }
  return out;
}

std::vector<FiniteGroup> small_groups() {
  return {FiniteGroup::cyclic(1), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3), FiniteGroup::cyclic(4),
          FiniteGroup::klein_four(), FiniteGroup::cyclic(5), FiniteGroup::cyclic(6), FiniteGroup::symmetric3()};
}

}  // namespace

TEST_CASE("FiniteGroup validates its table") {
  CHECK_THROWS_AS(FiniteGroup({{0, 1}, {1, 1}}), InvariantError);
  CHECK_THROWS_AS(FiniteGroup({{1, 0}, {0, 0}}), InvariantError);
  CHECK_THROWS(FiniteGroup({{0, 1}, {1}}));
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  CHECK(s3.order() == 6);
  bool abelian = true;
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h) abelian = abelian && s3.mul(g, h) == s3.mul(h, g);
  CHECK_FALSE(abelian);
  for (std::size_t g = 0; g < 6; ++g) CHECK(s3.mul(g, s3.inverse(g)) == s3.identity());
}

TEST_CASE("GSet checks the action law") {
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  CHECK_NOTHROW(GSet(c2, FinSet(2), {SetMap::identity(2), SetMap(2, 2, {1, 0})}));
  CHECK_THROWS_AS(GSet(c2, FinSet(2), {SetMap(2, 2, {1, 0}), SetMap(2, 2, {1, 0})}), InvariantError);
  const FiniteGroup c3 = FiniteGroup::cyclic(3);
  // a transposition cannot be the image of a generator of order 3
  CHECK_THROWS_AS(GSet(c3, FinSet(2), {SetMap::identity(2), SetMap(2, 2, {1, 0}), SetMap::identity(2)}), InvariantError);
}

TEST_CASE("all_gsets counts homomorphisms into S_n") {
  for (std::size_t n = 1; n <= 4; ++n)
    for (std::size_t m = 1; m <= 6; ++m) {
      // sigma with sigma^m = id
      std::size_t expected = 0;
      for (const auto& p : oracle::permutations(n)) {
        std::vector<std::size_t> q(n);
        for (std::size_t i = 0; i < n; ++i) q[i] = i;
        for (std::size_t t = 0; t < m; ++t)
          for (auto& v : q) v = p[v];
        bool id = true;
        for (std::size_t i = 0; i < n; ++i) id = id && q[i] == i;
        expected += id;
      }
      CHECK(all_gsets(FiniteGroup::cyclic(m), n).size() == expected);
    }
}

TEST_CASE("equivariant_set_maps examples") {
  const FiniteGroup c1 = FiniteGroup::cyclic(1);
  CHECK(equivariant_set_maps(GSet::trivial(c1, FinSet(2)), GSet::trivial(c1, FinSet(3))).size() == 9);
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  const GSet reg = GSet::regular(c2);
  const auto to_trivial = equivariant_set_maps(reg, GSet::trivial(c2, FinSet(2)));
  REQUIRE(to_trivial.size() == 2);
  for (const auto& f : to_trivial) CHECK(f(0) == f(1));
  CHECK(equivariant_set_maps(reg, reg).size() == 2);
  CHECK(equivariant_set_maps(GSet::trivial(c2, FinSet(1)), reg).empty());
  CHECK_THROWS_AS(equivariant_set_maps(reg, GSet::regular(FiniteGroup::cyclic(3))), ShapeError);
}

TEST_CASE("fixed_coalgebra_morphisms examples") {
  const FiniteGroup c2 = FiniteGroup::cyclic(2);
  const GSet reg = GSet::regular(c2);
  const auto fixed = fixed_coalgebra_morphisms(reg, GSet::trivial(c2, FinSet(2)));
  REQUIRE(fixed.size() == 2);
  for (const auto& m : fixed) CHECK(setmap_from_morphism(m.matrix)(0) == setmap_from_morphism(m.matrix)(1));
  CHECK(fixed_coalgebra_morphisms(reg, reg).size() == 2);
  const FiniteGroup c1 = FiniteGroup::cyclic(1);
  CHECK(fixed_coalgebra_morphisms(GSet::trivial(c1, FinSet(3)), GSet::trivial(c1, FinSet(2))).size() == 8);
}

TEST_CASE("act_on_matrix is a left action") {
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  const GSet x = GSet::regular(s3);
  const auto ys = all_gsets(s3, 3);
  const GSet& y = ys.back();
  const QMatrix c = graph_matrix(SetMap(6, 3, {0, 1, 2, 0, 1, 2}));
  for (std::size_t g = 0; g < 6; ++g)
    for (std::size_t h = 0; h < 6; ++h)
      CHECK(act_on_matrix(act_on_matrix(c, x, y, h), x, y, g) == act_on_matrix(c, x, y, s3.mul(g, h)));
}

TEST_CASE("descent: fixed morphisms are the graphs of equivariant maps (|G| <= 6, carriers <= 4)") {
  std::size_t pairs = 0;
  for (const auto& g : small_groups()) {
    const std::size_t max_n = g.order() >= 5 ? 3 : 4;
    std::vector<std::vector<GSet>> by_size(max_n + 1);
    for (std::size_t n = 1; n <= max_n; ++n) by_size[n] = all_gsets(g, n);
    for (std::size_t a = 1; a <= max_n; ++a)
      for (std::size_t b = 1; b <= max_n; ++b)
        for (const auto& x : by_size[a])
          for (const auto& y : by_size[b]) {
            std::set<std::vector<Rational>> fixed, graphs, brute;
            for (const auto& m : fixed_coalgebra_morphisms(x, y)) fixed.insert(m.matrix.entries());
            for (const auto& f : equivariant_set_maps(x, y)) graphs.insert(graph_matrix(f).entries());
            for (const auto& f : brute_equivariant(x, y)) brute.insert(graph_matrix(SetMap(a, b, f)).entries());
            REQUIRE(fixed == graphs);
            REQUIRE(graphs == brute);
            ++pairs;
          }
  }
  CHECK(pairs > 1000);
}

TEST_CASE("restricting to a subgroup enlarges both sides and keeps the bijection") {
  const FiniteGroup s3 = FiniteGroup::symmetric3();
  // rotations: the even permutations 012, 120, 201
  const Subgroup a3 = make_subgroup(s3, {0, 3, 4});
  CHECK(a3.group.order() == 3);
  CHECK_THROWS_AS(make_subgroup(s3, {0, 1, 2}), InvariantError);
  const auto xs = all_gsets(s3, 3);
  for (const auto& x : xs)
    for (const auto& y : xs) {
      const GSet rx = restrict_action(x, a3), ry = restrict_action(y, a3);
      const auto big = equivariant_set_maps(x, y), small = equivariant_set_maps(rx, ry);
      CHECK(small.size() >= big.size());
      std::set<std::vector<std::size_t>> small_set;
      for (const auto& f : small) small_set.insert(f.values());
      for (const auto& f : big) CHECK(small_set.count(f.values()) == 1);
      CHECK(fixed_coalgebra_morphisms(rx, ry).size() == small.size());
    }
}
