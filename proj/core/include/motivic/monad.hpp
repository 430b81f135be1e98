#pragma once

// The free commutative monoid M on groupoids of finite diagrams, realized on
// objects and isomorphism classes: an object of M(Fin^k_gr) is a finite
// multiset of k-diagrams, and assembling it (disjoint unions levelwise plus a
// final map to the index set {0..n-1}) gives a (k+1)-diagram. Also the
// tensor-power functor Omega_E on comonoids.

#include <cstddef>
#include <string>
#include <vector>

#include "motivic/artin.hpp"
#include "motivic/finset.hpp"
#include "motivic/qlinalg.hpp"

namespace motivic {

/// A multiset of k-diagrams. Entries are kept sorted by canonical form, so two
/// multisets with entrywise isomorphic members compare equal after
/// `canonicalized()`. Entries may contain empty sets: they are fibers of a
/// (k+1)-diagram over elements whose preimage is empty.
class MultisetOfDiagrams {
 public:
  MultisetOfDiagrams() = default;
  /// Throws InvariantError if the entries have different k.
  explicit MultisetOfDiagrams(std::vector<FinDiagram> entries);

  const std::vector<FinDiagram>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  /// Same multiset with every entry replaced by its canonical form.
  MultisetOfDiagrams canonicalized() const;

  friend bool operator==(const MultisetOfDiagrams&, const MultisetOfDiagrams&) = default;
  friend auto operator<=>(const MultisetOfDiagrams& a, const MultisetOfDiagrams& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<FinDiagram> entries_;
};

std::string to_string(const MultisetOfDiagrams& m);

/// (S^1, ..., S^n) |-> (coprod_i S^i_1 -> ... -> coprod_i S^i_k -> {0..n-1}),
/// block i of every level mapping into block i of the next and to i at the
/// end. Throws InvariantError on the empty multiset.
FinDiagram assemble(const MultisetOfDiagrams& m);

/// Inverse direction: the fibers over each element of the last set, as a
/// multiset of k-diagrams.
MultisetOfDiagrams disassemble(const FinDiagram& d);

/// prod_c m_c! |Aut c|^{m_c} over the distinct classes c of the multiset.
std::size_t wreath_automorphism_count(const MultisetOfDiagrams& m);

struct MonadCensusRow {
  FinDiagram assembled;          // canonical (k+1)-class
  MultisetOfDiagrams preimage;   // canonical multiset of k-classes
  std::size_t aut_direct = 0;    // automorphism_group(assembled).order
  std::size_t aut_brute = 0;     // brute force over all permutation tuples
  std::size_t aut_wreath = 0;    // from the multiset
};

struct MonadReport {
  std::size_t k = 0;
  std::vector<std::size_t> bounds;  // k+1 bounds, the last one caps the multiset size
  std::vector<MonadCensusRow> rows;
  std::size_t census_size = 0;      // |enumerate_diagrams(k+1, bounds)|
  bool every_class_hit = false;
  bool injective = false;           // distinct multisets give distinct classes
  bool images_match_census = false;
  bool aut_orders_agree = false;
  bool pass() const { return every_class_hit && injective && images_match_census && aut_orders_agree; }
};

/// Checks M(Fin^k_gr) = Fin^{k+1}_gr on bounded iso classes: multisets of at
/// most bounds[k] k-classes (possibly empty sets, levelwise totals within
/// bounds[0..k-1], every assembled level nonempty) against
/// enumerate_diagrams(k+1, bounds).
MonadReport verify_m_identity(std::size_t k, const std::vector<std::size_t>& bounds);

/// Omega_E(S_1) = E^{(x) S_1}: carrier E^{S_1} flattened with the first factor
/// most significant, counit the Kronecker power of counits, comultiplication
/// the Kronecker power of comultiplications followed by the shuffle
/// (e_1, e'_1, ..., e_s, e'_s) -> (e_1..e_s, e'_1..e'_s). Throws
/// InvariantError when k = 0.
ArtinComonoid omega_power(const ArtinComonoid& e, const FinDiagram& d);
/// E^{(x) n}; n = 0 gives the unit object.
ArtinComonoid tensor_power(const ArtinComonoid& e, std::size_t n);

/// Permutation of (E^{(x)n}) moving the factor in position s to position
/// sigma(s).
QMatrix tensor_permutation(const SetMap& sigma, std::size_t e_size);

/// The action of an isomorphism of diagrams on Omega_E, through its first
/// component.
QMatrix functoriality_on_iso(const DiagramIso& iso, const ArtinComonoid& e);

}  // namespace motivic
