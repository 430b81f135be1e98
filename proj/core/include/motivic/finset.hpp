#pragma once

// Finite sets, set maps and the groupoids Fin^k_gr of diagrams
// S_1 -> S_2 -> ... -> S_k of finite sets, with canonical forms,
// isomorphism witnesses, automorphism groups and bounded enumeration of
// isomorphism classes.

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace motivic {

/// The finite set {0, ..., size-1}, optionally with display labels.
class FinSet {
 public:
  /// Throws InvariantError when size == 0 or the labels are malformed.
  explicit FinSet(std::size_t size, std::vector<std::string> labels = {});

  /// The empty set. Public interfaces work with nonempty sets; the empty set
  /// only shows up as a fiber block of the free commutative monoid and as the
  /// unit component of the resolution tower.
  static FinSet empty() { return FinSet(); }

  std::size_t size() const { return size_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// Sets compare by cardinality; labels are display only.
  friend bool operator==(const FinSet& a, const FinSet& b) { return a.size_ == b.size_; }

 private:
  FinSet() = default;
  std::size_t size_ = 0;
  std::vector<std::string> labels_;
};

/// A map dom -> cod of finite sets; values[i] is the image of i.
class SetMap {
 public:
  SetMap() = default;
  SetMap(std::size_t dom, std::size_t cod, std::vector<std::size_t> values);

  static SetMap identity(std::size_t n);

  std::size_t dom() const { return dom_; }
  std::size_t cod() const { return cod_; }
  const std::vector<std::size_t>& values() const { return values_; }
  std::size_t operator()(std::size_t i) const { return values_[i]; }

  bool is_bijective() const;
  /// Throws InvariantError unless bijective.
  SetMap inverse() const;
  /// Number of preimages of each element of the codomain.
  std::vector<std::size_t> fiber_sizes() const;

  friend auto operator<=>(const SetMap&, const SetMap&) = default;
  friend bool operator==(const SetMap&, const SetMap&) = default;

 private:
  std::size_t dom_ = 0;
  std::size_t cod_ = 0;
  std::vector<std::size_t> values_;
};

/// g o f. Throws ShapeError when f.cod() != g.dom().
SetMap compose(const SetMap& f, const SetMap& g);

/// Every map dom -> cod, in lexicographic order of the value lists.
std::vector<SetMap> all_maps(std::size_t dom, std::size_t cod);
/// Every bijection of {0..n-1}, in lexicographic order.
std::vector<SetMap> all_permutations(std::size_t n);

/// An object of Fin^k_gr: sets[0] -> sets[1] -> ... -> sets[k-1].
/// k = 0 is the single object of Fin^0_gr.
class FinDiagram {
 public:
  FinDiagram() = default;
  FinDiagram(std::vector<FinSet> sets, std::vector<SetMap> maps);

  /// Build from cardinalities and value lists; zero sizes produce empty sets.
  static FinDiagram from_values(std::vector<std::size_t> sizes,
                                std::vector<std::vector<std::size_t>> values);

  std::size_t k() const { return sets_.size(); }
  const std::vector<FinSet>& sets() const { return sets_; }
  const std::vector<SetMap>& maps() const { return maps_; }
  std::size_t size(std::size_t level) const { return sets_[level].size(); }
  std::vector<std::size_t> sizes() const;
  bool has_empty_set() const;

  /// Diagrams compare by cardinalities, then by map values; labels are ignored.
  friend std::strong_ordering operator<=>(const FinDiagram& a, const FinDiagram& b);
  friend bool operator==(const FinDiagram& a, const FinDiagram& b);

 private:
  std::vector<FinSet> sets_;
  std::vector<SetMap> maps_;
};

/// Compact single-line rendering, e.g. "3>2 [0,0,1]".
std::string to_string(const FinDiagram& d);

/// A morphism of Fin^k_gr: one bijection per level.
struct DiagramIso {
  std::vector<SetMap> components;

  friend auto operator<=>(const DiagramIso&, const DiagramIso&) = default;
  friend bool operator==(const DiagramIso&, const DiagramIso&) = default;
};

DiagramIso identity_iso(const FinDiagram& d);
/// Levelwise b o a.
DiagramIso compose(const DiagramIso& a, const DiagramIso& b);
DiagramIso inverse(const DiagramIso& a);
/// True when every component is a bijection of the right sets and every
/// naturality square commutes.
bool is_diagram_iso(const DiagramIso& iso, const FinDiagram& from, const FinDiagram& to);

/// Automorphism group of a diagram, by generators.
struct PermGroup {
  std::vector<std::size_t> degrees;
  std::vector<DiagramIso> generators;
  std::size_t order = 1;
};

struct CanonicalLabeling {
  FinDiagram form;
  DiagramIso to_form;  // d -> form
};

/// Relabels d into the representative of its isomorphism class.
CanonicalLabeling canonical_labeling(const FinDiagram& d);
FinDiagram canonical_form(const FinDiagram& d);

/// A witness d1 -> d2 when the diagrams are isomorphic.
std::optional<DiagramIso> are_isomorphic(const FinDiagram& d1, const FinDiagram& d2);

PermGroup automorphism_group(const FinDiagram& d);
/// All elements of the group generated by `generators`, by breadth-first closure.
std::vector<DiagramIso> group_closure(const FinDiagram& d,
                                      const std::vector<DiagramIso>& generators);
std::vector<DiagramIso> automorphisms(const FinDiagram& d);

/// Counts self-isomorphisms by testing every tuple of permutations. Factorial;
/// meant for verification at small sizes.
std::size_t brute_force_automorphism_count(const FinDiagram& d);

enum class EmptySets { forbid, allow };

/// One canonical representative per isomorphism class of k-diagrams with
/// |S_i| <= max_sizes[i], sorted. With EmptySets::allow the sets may be empty.
std::vector<FinDiagram> enumerate_diagrams(std::size_t k, const std::vector<std::size_t>& max_sizes,
                                           EmptySets empty = EmptySets::forbid);

}  // namespace motivic
