#pragma once

// The matrix category Q<fin. set> of Artin Chow motives: a finite set X is
// an object, and a morphism X -> Y is a |Y| x |X| rational matrix C = (c_{y,x})
// acting on column vectors indexed by X. Tensor product is the Cartesian
// product of sets and the Kronecker product of matrices.

#include <cstddef>
#include <string>
#include <vector>

#include "motivic/finset.hpp"
#include "motivic/qlinalg.hpp"

namespace motivic {

/// A finite set with a counit (1 x |X|) and a comultiplication (|X|^2 x |X|).
struct ArtinComonoid {
  FinSet carrier;
  QMatrix counit;
  QMatrix comult;

  std::size_t size() const { return carrier.size(); }
};

/// A finite set with a unit (|X| x 1) and a multiplication (|X| x |X|^2).
struct ArtinMonoid {
  FinSet carrier;
  QMatrix unit;
  QMatrix mult;

  std::size_t size() const { return carrier.size(); }
};

/// The structure induced by the diagonal of X: the counit is the all-ones row
/// and delta_{(x',x''),x} = 1 iff x' = x'' = x.
ArtinComonoid artin_comonoid(const FinSet& x);
ArtinMonoid artin_monoid(const FinSet& x);

/// The transpose structure.
ArtinMonoid dual(const ArtinComonoid& c);
ArtinComonoid dual(const ArtinMonoid& m);

/// The permutation (x', x'') -> (x'', x') on X (x) X.
QMatrix tensor_swap(std::size_t n);

/// Names of the failed axioms; empty when all hold.
std::vector<std::string> comonoid_axiom_failures(const ArtinComonoid& c);
std::vector<std::string> monoid_axiom_failures(const ArtinMonoid& m);

/// The equations a coalgebra morphism C : X -> Y has to satisfy. For the
/// canonical structure on Y the comultiplication condition splits by the row
/// pair (y, y'): diagonal rows give c^2 = c, off-diagonal rows c c' = 0.
enum class CoalgEquation { counit, comult_diagonal, comult_off_diagonal };

std::string to_string(CoalgEquation e);

struct MorphismCheck {
  bool ok = true;
  std::vector<CoalgEquation> failures;

  explicit operator bool() const { return ok; }
  bool failed(CoalgEquation e) const;
};

/// Checks eps_Y C = eps_X and (C (x) C) delta_X = delta_Y C exactly. Throws
/// ShapeError unless C is |Y| x |X|.
MorphismCheck is_coalgebra_morphism(const QMatrix& c, const ArtinComonoid& x, const ArtinComonoid& y);

/// Checks A eta_X = eta_Y and A m_X = m_Y (A (x) A) for A : X -> Y.
MorphismCheck is_algebra_morphism(const QMatrix& a, const ArtinMonoid& x, const ArtinMonoid& y);

struct CoalgMorphism {
  ArtinComonoid source;
  ArtinComonoid target;
  QMatrix matrix;
};

bool is_canonical(const ArtinComonoid& c);

/// All coalgebra morphisms between canonical comonoids. The equations are
/// column-local: c_{y,x}^2 = c_{y,x} forces entries in {0,1}, c_{y,x} c_{y',x} = 0
/// leaves at most one 1 per column, and the counit condition makes the column
/// sum 1. Admissible columns are enumerated and combined; the output is in
/// lexicographic order of the chosen columns. Throws InvariantError for
/// non-canonical structures.
std::vector<CoalgMorphism> solve_coalgebra_morphisms(const ArtinComonoid& x, const ArtinComonoid& y);

/// The graph matrix of f: entry (y, x) is 1 iff f(x) = y.
QMatrix graph_matrix(const SetMap& f);
CoalgMorphism morphism_from_setmap(const SetMap& f);
/// Inverse of morphism_from_setmap. Throws InvariantError if the matrix is
/// not the graph of a map.
SetMap setmap_from_morphism(const QMatrix& c);

struct DualCheck {
  MorphismCheck comonoid_side;  // C : C_*X -> C_*Y
  MorphismCheck monoid_side;    // C^T : D(Y) -> D(X)
  bool consistent() const { return comonoid_side.ok == monoid_side.ok; }
};

/// Checks C against the comonoid equations and C^T against the transposed
/// monoid equations.
DualCheck dualize(const QMatrix& c, const ArtinComonoid& x, const ArtinComonoid& y);

struct McffeReport {
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  std::size_t solver_count = 0;
  std::size_t expected_count = 0;  // |Y|^|X|
  bool all_pass_check = false;
  bool graph_bijection = false;
  bool pass() const { return solver_count == expected_count && all_pass_check && graph_bijection; }
};

/// Coalgebra morphisms C_*X -> C_*Y against maps X -> Y.
McffeReport verify_mcffe(const FinSet& x, const FinSet& y);

}  // namespace motivic
