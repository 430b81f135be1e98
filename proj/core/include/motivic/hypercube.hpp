#pragma once

// Power-set cubes and their homotopy colimits.
//
// Subsets of an index set {0..n-1} are bitmasks. Punctured cubes are indexed
// by the NONEMPTY subsets T, with one structure map D(T) -> D(T \ {i}) for
// every i in T (arrows run against inclusion, like the inclusions of
// intersections W_T into W_{T \ i}). The homotopy colimit is the total complex
// with Cech signs.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "motivic/qlinalg.hpp"

namespace motivic {

using Subset = std::uint32_t;

std::size_t popcount(Subset s);
/// Position of i among the elements of s, counted from the smallest.
std::size_t position_in(Subset s, std::size_t i);
std::vector<std::size_t> elements_of(Subset s);

// ---------------------------------------------------------------------------
// The isomorphism between the power set and the cube (Delta^1)^n.

/// The three morphisms of Delta^1 = {0 -> 1}.
enum class CubeArrow { id0, tau, id1 };

/// The characteristic vector of `subset` (entry i is 1 iff i is in the subset).
std::vector<int> psi(std::size_t n, Subset subset);
/// Throws InvariantError unless v is a 0/1 vector.
Subset psi_inverse(const std::vector<int>& v);
/// Image of the inclusion smaller -> larger, coordinatewise: id1 on the
/// smaller set, tau on the difference, id0 outside. Throws InvariantError
/// unless smaller is contained in larger.
std::vector<CubeArrow> psi_morphism(std::size_t n, Subset smaller, Subset larger);
/// Coordinatewise "first a, then b". Throws InvariantError when not composable.
std::vector<CubeArrow> compose_arrows(const std::vector<CubeArrow>& a, const std::vector<CubeArrow>& b);

// ---------------------------------------------------------------------------

/// A functor from the nonempty subsets of {0..n-1} to chain complexes.
class CubeDiagram {
 public:
  using EdgeKey = std::pair<Subset, std::size_t>;  // (T, i): D(T) -> D(T \ {i})

  CubeDiagram() = default;
  /// Needs a complex at every nonempty subset and an edge map for every
  /// (T, i) with i in T and |T| >= 2. Throws ShapeError on missing or
  /// mis-shaped data and InvariantError if an edge is not a chain map or a
  /// square fails to commute.
  CubeDiagram(std::size_t index_size, std::map<Subset, ChainComplex> vertices, std::map<EdgeKey, ChainMap> edges);

  std::size_t index_size() const { return n_; }
  const ChainComplex& at(Subset t) const { return vertices_.at(t); }
  const ChainMap& edge(Subset t, std::size_t i) const { return edges_.at({t, i}); }
  const std::map<Subset, ChainComplex>& vertices() const { return vertices_; }
  const std::map<EdgeKey, ChainMap>& edges() const { return edges_; }

 private:
  std::size_t n_ = 0;
  std::map<Subset, ChainComplex> vertices_;
  std::map<EdgeKey, ChainMap> edges_;
};

/// Total complex: in degree N the summands are D(T)_{N-|T|+1}, ordered by |T|,
/// then by bitmask, each in its own basis order. The differential on
/// x in D(T)_q is (-1)^{|T|-1} d x plus sum over i in T of
/// (-1)^{position of i in T} D(T -> T\i)(x).
ChainComplex punctured_cube_hocolim(const CubeDiagram& d);

/// Summand offsets of the total complex, in the order described above.
struct TotalLayout {
  // (degree, T) -> offset inside the degree's basis
  std::map<std::pair<int, Subset>, std::size_t> offset;
  std::map<int, std::size_t> dims;
};
TotalLayout total_layout(const CubeDiagram& d);

/// Cover model: W_i are subsets of a finite point set; each W_T is the
/// intersection placed in degree 0, and the edges are the point inclusions.
struct Cover {
  std::size_t universe = 0;
  std::vector<std::vector<std::size_t>> components;
};

/// Throws InvariantError if a component mentions a point outside the universe.
CubeDiagram cover_model(const Cover& cover);
std::vector<std::size_t> intersection(const Cover& cover, Subset t);

/// The cofiber of hocolim(D) -> ambient. `to_ambient` holds a chain map
/// D(T) -> ambient for each nonempty T, compatible with the edges. The map
/// out of the total complex uses the singletons on column 0 and vanishes
/// elsewhere.
ChainComplex ks_hocolim(const ChainComplex& ambient, const CubeDiagram& d, const std::map<Subset, ChainMap>& to_ambient);

/// ks_hocolim for a cover inside the full universe.
ChainComplex cover_ks_hocolim(const Cover& cover);

// ---------------------------------------------------------------------------
// Formal motives and the hypercube compactification.

/// Symbolic motive: C_*(label), 0, twists (q), shifts [m], and products with
/// a further label. Twists and shifts add up and commute with everything.
class FormalMotive {
 public:
  static FormalMotive motive(std::string label);
  static FormalMotive zero();

  FormalMotive twist(int q) const;
  FormalMotive shift(int m) const;
  FormalMotive product(std::string label) const;

  struct Normal {
    bool is_zero = false;
    std::vector<std::string> factors;
    int twist = 0;
    int shift = 0;
    friend bool operator==(const Normal&, const Normal&) = default;
  };
  Normal normal_form() const;

  friend bool operator==(const FormalMotive& a, const FormalMotive& b) { return a.normal_form() == b.normal_form(); }

 private:
  struct Node;
  explicit FormalMotive(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// e.g. "C_*(A∩B × Y)(-1)[-2]", or "0".
std::string to_string(const FormalMotive& m);

struct KSVertex {
  enum class Kind { inner, l, u };
  Kind kind = Kind::inner;
  Subset subset = 0;  // inner vertices only
  FormalMotive value = FormalMotive::zero();
};

/// The category KS: nonempty subsets of the components plus l and u, with
/// T -> T\{i}, T -> l and T -> u.
struct KappaDiagram {
  std::vector<std::string> components;
  std::string ambient;
  int dimension = 0;
  std::vector<KSVertex> vertices;                          // inner by (|T|, mask), then l, then u
  std::vector<std::pair<std::size_t, std::size_t>> arrows;  // indices into vertices
  int twist = 0;                                            // applied to the colimit
  int shift = 0;

  std::size_t index_of_l() const { return vertices.size() - 2; }
  std::size_t index_of_u() const { return vertices.size() - 1; }
};

/// T |-> C_*(intersection of the components in T), l |-> C_*(ambient),
/// u |-> 0, with the colimit twisted by (-d)[-2d]. Throws InvariantError on
/// repeated labels or more than 16 components.
KappaDiagram build_kappa(const std::vector<std::string>& components, const std::string& ambient, int d);
/// The same diagram tensored with C_*(y).
KappaDiagram cross_with(const KappaDiagram& k, const std::string& y);
/// "colim kappa (-d)[-2d]".
std::string colimit_annotation(const KappaDiagram& k);
std::string to_string(const KappaDiagram& k);

}  // namespace motivic
