#pragma once

// The cosimplicial tower computing algebra morphisms C^*Y -> C^*X between the
// cohomology algebras of two finite sets, truncated to levels 0..2.
//
// A = C^*Y and B = C^*X are the Artin monoids on Y and X (multiplication the
// transpose of the diagonal). Level 0 is Hom(A, B): |X| x |Y| matrices. Level
// k >= 1 is the product over classes [S_1 -> ... -> S_k] with |S_i| <= bound of
// Hom(A^{(x) S_1}, B) fixed under Aut S acting through S_1. The census
// includes empty sets; those components carry the unit conditions.
//
// Cofaces out of level 0, at a class [S]:
//   d0(f) = m_B^(S) o f^{(x) S}     (B's multiplication)
//   d1(f) = f o m_A^(S)             (A's multiplication)
// Cofaces out of level 1, at a class [S_1 -phi-> S_2]:
//   d0(g) = m_B^(S_2) o (x)_j g[phi^-1(j)] o shuffle
//   d1(g) = g[S_1]
//   d2(g) = g[S_2] o (x)_j m_A^(phi^-1(j)) o shuffle
// where the shuffle groups the factors of A^{(x) S_1} fiber by fiber.
// Codegeneracies: s0 : level 1 -> 0 takes the one-point component; out of
// level 2, s0 takes [S -> pt] and s1 takes [S = S].

#include <cstddef>
#include <map>
#include <vector>

#include "motivic/artin.hpp"
#include "motivic/finset.hpp"
#include "motivic/qlinalg.hpp"

namespace motivic {

/// One matrix per census class; level 0 uses the key FinDiagram{}.
using TowerPoint = std::map<FinDiagram, QMatrix>;

struct TowerContext {
  FinSet x;
  FinSet y;
  ArtinMonoid source;  // A = C^*Y
  ArtinMonoid target;  // B = C^*X
  std::size_t bound = 2;
};

TowerContext make_tower(const FinSet& x, const FinSet& y, std::size_t bound);

/// Canonical classes of level k (k <= 2), empty sets allowed.
std::vector<FinDiagram> tower_census(std::size_t k, std::size_t bound);

/// The linear space of Aut-fixed matrices at one component, by a basis of
/// orbit indicator matrices.
struct FixedSpace {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<QMatrix> basis;
  std::size_t dim() const { return basis.size(); }
};

struct TowerLevel {
  std::size_t k = 0;
  std::size_t bound = 0;
  std::vector<FinDiagram> census;
  std::map<FinDiagram, FixedSpace> components;
};

/// Throws InvariantError for k > 2 or bound < 2.
TowerLevel level(std::size_t k, const FinSet& x, const FinSet& y, std::size_t bound);

/// m^(n) : M^{(x) n} -> M; n = 0 gives the unit.
QMatrix iterated_mult(const ArtinMonoid& m, std::size_t n);
/// Multiplication along the fibers of phi : S_1 -> S_2, M^{(x) S_1} -> M^{(x) S_2}.
QMatrix fiber_mult(const ArtinMonoid& m, const SetMap& phi);
/// The permutation of M^{(x) S_1} that groups factors by the fiber of phi
/// they lie in (fibers in order of S_2, elements increasing inside a fiber).
QMatrix fiber_shuffle(const SetMap& phi, std::size_t m_size);

/// Level 0 -> 1 at a one-set class [S]. Throws ShapeError unless f is |X| x |Y|.
QMatrix coface_d0(const TowerContext& ctx, const QMatrix& f, const FinDiagram& cls);
QMatrix coface_d1(const TowerContext& ctx, const QMatrix& f, const FinDiagram& cls);

TowerPoint level0_point(const QMatrix& f);
/// Coface d^i out of level `from` (0 or 1), evaluated on every class of the
/// next level's census.
TowerPoint coface(const TowerContext& ctx, std::size_t from, std::size_t i, const TowerPoint& p);
/// Codegeneracy s^j out of level `from` (1 or 2).
TowerPoint codegeneracy(const TowerContext& ctx, std::size_t from, std::size_t j, const TowerPoint& p);

/// True when g is fixed by Aut(cls) acting through the first set.
bool is_aut_fixed(const QMatrix& g, const FinDiagram& cls, std::size_t source_size);

/// d0 f = d1 f at every level-1 class (sizes 0..bound).
bool equalizes(const TowerContext& ctx, const QMatrix& f);

/// The equalizer of d0, d1 : level 0 -> level 1. On the diagonal of the
/// two-element component, d1 f reads f_{x,a} and d0 f reads f_{x,a}^2, so
/// every solution has entries in {0,1}; those candidates are enumerated and
/// filtered by `equalizes`. Output in lexicographic order of the entries.
/// Throws InvariantError for bound < 2.
std::vector<QMatrix> equalizer(const FinSet& x, const FinSet& y, std::size_t bound);

struct MdffeReport {
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  std::size_t bound = 0;
  std::size_t equalizer_count = 0;
  std::size_t algebra_count = 0;     // unital multiplicative {0,1} matrices C^*Y -> C^*X
  std::size_t comonoid_count = 0;    // transposed coalgebra morphisms C_*X -> C_*Y
  std::size_t setmap_count = 0;      // |Y|^|X|
  bool sets_equal = false;           // all four as sets of matrices
  bool stable_at_next_bound = false; // equalizer(bound) == equalizer(bound + 1)
  bool pass() const {
    return sets_equal && stable_at_next_bound && equalizer_count == setmap_count &&
           algebra_count == setmap_count && comonoid_count == setmap_count;
  }
};

MdffeReport verify_mdffe(const FinSet& x, const FinSet& y, std::size_t bound = 2);

/// The two readings of a limit over Fin^k_gr of a set-valued functor, here
/// F(S) = Hom_Set(Y^{S_1}, X) with Aut S acting through S_1: a product of
/// Aut-fixed points over iso classes, and compatible families over every
/// object and every isomorphism of the bounded groupoid.
struct LimitComparison {
  std::size_t product_of_fixed_points = 1;
  std::size_t groupoid_sections = 1;
  std::size_t classes = 0;
  std::size_t objects = 0;
  bool agree() const { return product_of_fixed_points == groupoid_sections; }
};

LimitComparison compare_limit_readings(std::size_t k, std::size_t bound, const FinSet& x, const FinSet& y);

}  // namespace motivic
