#pragma once

// Finite groups acting on finite sets. Over a field k with absolute Galois
// group G (acting through a finite quotient), finite etale k-schemes are the
// same as finite G-sets; morphisms over k are the G-equivariant maps.

#include <cstddef>
#include <vector>

#include "motivic/artin.hpp"
#include "motivic/finset.hpp"
#include "motivic/qlinalg.hpp"

namespace motivic {

/// A finite group by its multiplication table: table[g][h] = g h.
class FiniteGroup {
 public:
  /// Throws InvariantError unless the table is a group (closure, identity,
  /// inverses, associativity).
  explicit FiniteGroup(std::vector<std::vector<std::size_t>> table);

  static FiniteGroup cyclic(std::size_t n);
  static FiniteGroup klein_four();
  static FiniteGroup symmetric3();

  std::size_t order() const { return table_.size(); }
  std::size_t identity() const { return identity_; }
  std::size_t mul(std::size_t g, std::size_t h) const { return table_[g][h]; }
  std::size_t inverse(std::size_t g) const { return inverse_[g]; }
  const std::vector<std::vector<std::size_t>>& table() const { return table_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
};

/// A left action: action[g] is the permutation x -> g.x, with
/// action[gh] = action[g] o action[h].
class GSet {
 public:
  /// Throws InvariantError unless the action is a homomorphism into the
  /// permutations of the carrier.
  GSet(FiniteGroup group, FinSet carrier, std::vector<SetMap> action);

  /// The trivial action.
  static GSet trivial(const FiniteGroup& group, const FinSet& carrier);
  /// G acting on itself by left multiplication.
  static GSet regular(const FiniteGroup& group);

  const FiniteGroup& group() const { return group_; }
  const FinSet& carrier() const { return carrier_; }
  const SetMap& action(std::size_t g) const { return action_[g]; }
  const std::vector<SetMap>& actions() const { return action_; }
  std::size_t size() const { return carrier_.size(); }

 private:
  FiniteGroup group_;
  FinSet carrier_;
  std::vector<SetMap> action_;
};

/// Every action of `group` on {0..n-1}, i.e. every homomorphism into S_n.
std::vector<GSet> all_gsets(const FiniteGroup& group, std::size_t n);

/// Maps f with f(g.x) = g.f(x) for all g. Throws ShapeError if the groups differ.
std::vector<SetMap> equivariant_set_maps(const GSet& x, const GSet& y);

/// The permutation matrix of action[g]: entry (g.x, x) is 1.
QMatrix permutation_matrix(const SetMap& perm);

/// g.C = P_Y(g) C P_X(g)^-1.
QMatrix act_on_matrix(const QMatrix& c, const GSet& x, const GSet& y, std::size_t g);

/// Coalgebra morphisms C_*X -> C_*Y of the underlying sets that are fixed by
/// the induced action of G on matrices.
std::vector<CoalgMorphism> fixed_coalgebra_morphisms(const GSet& x, const GSet& y);

/// A subgroup given by a set of elements of `group`, re-indexed 0..m-1 in
/// increasing order of the original labels.
struct Subgroup {
  FiniteGroup group;
  std::vector<std::size_t> embedding;  // new index -> element of the ambient group
};

/// Throws InvariantError unless `elements` is closed under the product.
Subgroup make_subgroup(const FiniteGroup& group, std::vector<std::size_t> elements);
GSet restrict_action(const GSet& x, const Subgroup& h);

}  // namespace motivic
