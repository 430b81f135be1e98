#include "motivic/hypercube.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>
#include <variant>

#include "motivic/error.hpp"

namespace motivic {

std::size_t popcount(Subset s) { return static_cast<std::size_t>(std::popcount(s)); }

std::size_t position_in(Subset s, std::size_t i) { return popcount(s & ((Subset{1} << i) - 1)); }

std::vector<std::size_t> elements_of(Subset s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s >> i; ++i)
    if ((s >> i) & 1u) out.push_back(i);
  return out;
}

namespace {

bool contains(Subset s, std::size_t i) { return (s >> i) & 1u; }

std::vector<Subset> nonempty_subsets_by_size(std::size_t n) {
  std::vector<Subset> out;
  for (Subset t = 1; t < (Subset{1} << n); ++t) out.push_back(t);
  std::stable_sort(out.begin(), out.end(), [](Subset a, Subset b) { return popcount(a) < popcount(b); });
  return out;
}

}  // namespace

std::vector<int> psi(std::size_t n, Subset subset) {
  std::vector<int> v(n, 0);
  for (std::size_t i = 0; i < n; ++i) v[i] = contains(subset, i) ? 1 : 0;
  return v;
}

Subset psi_inverse(const std::vector<int>& v) {
  Subset s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0 && v[i] != 1) throw InvariantError("psi_inverse: cube vertices are 0/1 vectors");
    if (v[i] == 1) s |= Subset{1} << i;
  }
  return s;
}

std::vector<CubeArrow> psi_morphism(std::size_t n, Subset smaller, Subset larger) {
  if ((smaller & ~larger) != 0) throw InvariantError("psi_morphism: not an inclusion");
  std::vector<CubeArrow> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (contains(smaller, i))
      out[i] = CubeArrow::id1;
    else if (contains(larger, i))
      out[i] = CubeArrow::tau;
    else
      out[i] = CubeArrow::id0;
  }
  return out;
}

std::vector<CubeArrow> compose_arrows(const std::vector<CubeArrow>& a, const std::vector<CubeArrow>& b) {
  if (a.size() != b.size()) throw InvariantError("compose_arrows: cubes of different dimension");
  auto target = [](CubeArrow x) { return x == CubeArrow::id0 ? 0 : 1; };
  auto source = [](CubeArrow x) { return x == CubeArrow::id1 ? 1 : 0; };
  std::vector<CubeArrow> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (target(a[i]) != source(b[i])) throw InvariantError("compose_arrows: arrows are not composable");
    const int s = source(a[i]);
    const int t = target(b[i]);
    out[i] = s == t ? (s == 0 ? CubeArrow::id0 : CubeArrow::id1) : CubeArrow::tau;
  }
  return out;
}

// ---------------------------------------------------------------------------

CubeDiagram::CubeDiagram(std::size_t index_size, std::map<Subset, ChainComplex> vertices,
                         std::map<EdgeKey, ChainMap> edges)
    : n_(index_size), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  if (n_ > 16) throw ShapeError("CubeDiagram: at most 16 components");
  const Subset full = (Subset{1} << n_) - 1;
  for (Subset t = 1; t <= full && n_ > 0; ++t)
    if (!vertices_.count(t)) throw ShapeError("CubeDiagram: missing vertex " + std::to_string(t));
  for (const auto& [t, c] : vertices_)
    if (t == 0 || (t & ~full)) throw ShapeError("CubeDiagram: vertex outside the punctured cube");

  for (const auto& [key, f] : edges_) {
    const auto [t, i] = key;
    if (!vertices_.count(t) || !contains(t, i) || popcount(t) < 2)
      throw ShapeError("CubeDiagram: edge (" + std::to_string(t) + ", " + std::to_string(i) + ") is not a cube edge");
    if (!is_chain_map(f, vertices_.at(t), vertices_.at(t & ~(Subset{1} << i))))
      throw InvariantError("CubeDiagram: edge (" + std::to_string(t) + ", " + std::to_string(i) +
                           ") is not a chain map");
  }
  for (const auto& [t, c] : vertices_) {
    if (popcount(t) < 2) continue;
    for (auto i : elements_of(t))
      if (!edges_.count({t, i}))
        throw ShapeError("CubeDiagram: missing edge (" + std::to_string(t) + ", " + std::to_string(i) + ")");
  }
  // D(T) -> D(T\i) -> D(T\{i,j}) equals D(T) -> D(T\j) -> D(T\{i,j}).
  for (const auto& [t, c] : vertices_) {
    if (popcount(t) < 3) continue;
    const auto elems = elements_of(t);
    for (std::size_t a = 0; a < elems.size(); ++a)
      for (std::size_t b = a + 1; b < elems.size(); ++b) {
        const std::size_t i = elems[a], j = elems[b];
        const Subset ti = t & ~(Subset{1} << i), tj = t & ~(Subset{1} << j), tij = ti & tj;
        const ChainComplex& ct = vertices_.at(t);
        const int lo = ct.lo(), hi = ct.hi();
        for (int q = lo; q <= hi; ++q) {
          const QMatrix p1 = edges_.at({ti, j}).at(q, vertices_.at(ti), vertices_.at(tij)) *
                             edges_.at({t, i}).at(q, ct, vertices_.at(ti));
          const QMatrix p2 = edges_.at({tj, i}).at(q, vertices_.at(tj), vertices_.at(tij)) *
                             edges_.at({t, j}).at(q, ct, vertices_.at(tj));
          if (p1 != p2) throw InvariantError("CubeDiagram: a square of edge maps does not commute");
        }
      }
  }
}

TotalLayout total_layout(const CubeDiagram& d) {
  TotalLayout layout;
  for (Subset t : nonempty_subsets_by_size(d.index_size())) {
    const ChainComplex& c = d.at(t);
    const int p = static_cast<int>(popcount(t)) - 1;
    for (int q = c.lo(); q <= c.hi(); ++q) {
      const int n = p + q;
      layout.offset[{n, t}] = layout.dims[n];
      layout.dims[n] += c.dim(q);
    }
  }
  return layout;
}

ChainComplex punctured_cube_hocolim(const CubeDiagram& d) {
  const TotalLayout layout = total_layout(d);
  if (layout.dims.empty()) return ChainComplex();
  const int lo = layout.dims.begin()->first;
  const int hi = layout.dims.rbegin()->first;
  auto dim = [&](int n) {
    auto it = layout.dims.find(n);
    return it == layout.dims.end() ? std::size_t{0} : it->second;
  };

  std::map<int, QMatrix> diffs;
  for (int n = lo + 1; n <= hi; ++n) diffs[n] = QMatrix(dim(n - 1), dim(n));

  for (Subset t : nonempty_subsets_by_size(d.index_size())) {
    const ChainComplex& c = d.at(t);
    const int p = static_cast<int>(popcount(t)) - 1;
    const Rational internal_sign = p % 2 == 0 ? 1 : -1;
    for (int q = c.lo(); q <= c.hi(); ++q) {
      const int n = p + q;
      if (n <= lo || c.dim(q) == 0) continue;
      const std::size_t col = layout.offset.at({n, t});
      QMatrix& target = diffs[n];
      if (q - 1 >= c.lo() && c.dim(q - 1) > 0)
        target.set_block(layout.offset.at({n - 1, t}), col, internal_sign * c.differential(q));
      if (p == 0) continue;
      for (auto i : elements_of(t)) {
        const Subset s = t & ~(Subset{1} << i);
        const ChainComplex& cs = d.at(s);
        if (cs.dim(q) == 0) continue;
        const Rational sign = position_in(t, i) % 2 == 0 ? 1 : -1;
        target.set_block(layout.offset.at({n - 1, s}), col, sign * d.edge(t, i).at(q, c, cs));
      }
    }
  }
  std::map<int, std::size_t> dims(layout.dims.begin(), layout.dims.end());
  return ChainComplex(lo, hi, std::move(dims), std::move(diffs));
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> intersection(const Cover& cover, Subset t) {
  std::vector<std::size_t> out;
  bool first = true;
  for (auto i : elements_of(t)) {
    std::vector<std::size_t> comp = cover.components.at(i);
    std::sort(comp.begin(), comp.end());
    comp.erase(std::unique(comp.begin(), comp.end()), comp.end());
    if (first) {
      out = std::move(comp);
      first = false;
    } else {
      std::vector<std::size_t> both;
      std::set_intersection(out.begin(), out.end(), comp.begin(), comp.end(), std::back_inserter(both));
      out = std::move(both);
    }
  }
  return out;
}

namespace {

QMatrix inclusion_matrix(const std::vector<std::size_t>& from, const std::vector<std::size_t>& into) {
  QMatrix m(into.size(), from.size());
  for (std::size_t c = 0; c < from.size(); ++c) {
    auto it = std::lower_bound(into.begin(), into.end(), from[c]);
    if (it == into.end() || *it != from[c]) throw InvariantError("inclusion_matrix: not a subset");
    m(static_cast<std::size_t>(it - into.begin()), c) = 1;
  }
  return m;
}

void check_cover(const Cover& cover) {
  for (const auto& comp : cover.components)
    for (auto x : comp)
      if (x >= cover.universe) throw InvariantError("Cover: component point outside the universe");
}

}  // namespace

CubeDiagram cover_model(const Cover& cover) {
  check_cover(cover);
  const std::size_t n = cover.components.size();
  std::map<Subset, ChainComplex> vertices;
  std::map<CubeDiagram::EdgeKey, ChainMap> edges;
  for (Subset t = 1; t < (Subset{1} << n); ++t) {
    const auto pts = intersection(cover, t);
    vertices.emplace(t, ChainComplex::concentrated(0, pts.size()));
    if (popcount(t) < 2) continue;
    for (auto i : elements_of(t)) {
      const auto smaller = intersection(cover, t & ~(Subset{1} << i));
      edges[{t, i}] = ChainMap{{{0, inclusion_matrix(pts, smaller)}}};
    }
  }
  return CubeDiagram(n, std::move(vertices), std::move(edges));
}

ChainComplex ks_hocolim(const ChainComplex& ambient, const CubeDiagram& d, const std::map<Subset, ChainMap>& to_ambient) {
  const std::size_t n = d.index_size();
  for (Subset t = 1; t < (Subset{1} << n); ++t) {
    auto it = to_ambient.find(t);
    if (it == to_ambient.end()) throw ShapeError("ks_hocolim: missing map into the ambient complex");
    if (!is_chain_map(it->second, d.at(t), ambient)) throw InvariantError("ks_hocolim: map into the ambient is not a chain map");
    if (popcount(t) < 2) continue;
    for (auto i : elements_of(t)) {
      const Subset s = t & ~(Subset{1} << i);
      const ChainMap via = compose(d.edge(t, i), to_ambient.at(s), d.at(t), d.at(s), ambient);
      for (int q = d.at(t).lo(); q <= d.at(t).hi(); ++q)
        if (via.at(q, d.at(t), ambient) != it->second.at(q, d.at(t), ambient))
          throw InvariantError("ks_hocolim: maps into the ambient are incompatible with the cube");
    }
  }

  const ChainComplex total = punctured_cube_hocolim(d);
  const TotalLayout layout = total_layout(d);
  ChainMap phi;
  for (std::size_t i = 0; i < n; ++i) {
    const Subset t = Subset{1} << i;
    const ChainComplex& c = d.at(t);
    for (int q = c.lo(); q <= c.hi(); ++q) {
      if (c.dim(q) == 0 || ambient.dim(q) == 0) continue;
      auto [it, inserted] = phi.components.try_emplace(q, ambient.dim(q), total.dim(q));
      it->second.set_block(0, layout.offset.at({q, t}), to_ambient.at(t).at(q, c, ambient));
    }
  }
  return mapping_cone(phi, total, ambient);
}

ChainComplex cover_ks_hocolim(const Cover& cover) {
  const CubeDiagram d = cover_model(cover);
  std::vector<std::size_t> all(cover.universe);
  for (std::size_t x = 0; x < cover.universe; ++x) all[x] = x;
  std::map<Subset, ChainMap> to_ambient;
  for (Subset t = 1; t < (Subset{1} << cover.components.size()); ++t)
    to_ambient[t] = ChainMap{{{0, inclusion_matrix(intersection(cover, t), all)}}};
  return ks_hocolim(ChainComplex::concentrated(0, cover.universe), d, to_ambient);
}

// ---------------------------------------------------------------------------

struct FormalMotive::Node {
  struct Leaf {
    std::string label;
  };
  struct Zero {};
  struct Twist {
    std::shared_ptr<const Node> child;
    int q;
  };
  struct Shift {
    std::shared_ptr<const Node> child;
    int m;
  };
  struct Product {
    std::shared_ptr<const Node> child;
    std::string label;
  };
  std::variant<Leaf, Zero, Twist, Shift, Product> v;
};

FormalMotive FormalMotive::motive(std::string label) {
  return FormalMotive(std::make_shared<const Node>(Node{Node::Leaf{std::move(label)}}));
}

FormalMotive FormalMotive::zero() { return FormalMotive(std::make_shared<const Node>(Node{Node::Zero{}})); }

FormalMotive FormalMotive::twist(int q) const {
  return FormalMotive(std::make_shared<const Node>(Node{Node::Twist{node_, q}}));
}

FormalMotive FormalMotive::shift(int m) const {
  return FormalMotive(std::make_shared<const Node>(Node{Node::Shift{node_, m}}));
}

FormalMotive FormalMotive::product(std::string label) const {
  return FormalMotive(std::make_shared<const Node>(Node{Node::Product{node_, std::move(label)}}));
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

}  // namespace

FormalMotive::Normal FormalMotive::normal_form() const {
  Normal out;
  std::vector<std::string> tail;  // product labels, innermost last
  const Node* node = node_.get();
  while (node) {
    node = std::visit(overloaded{
                          [&](const Node::Leaf& l) -> const Node* {
                            out.factors.push_back(l.label);
                            return nullptr;
                          },
                          [&](const Node::Zero&) -> const Node* {
                            out.is_zero = true;
                            return nullptr;
                          },
                          [&](const Node::Twist& t) -> const Node* {
                            out.twist += t.q;
                            return t.child.get();
                          },
                          [&](const Node::Shift& s) -> const Node* {
                            out.shift += s.m;
                            return s.child.get();
                          },
                          [&](const Node::Product& p) -> const Node* {
                            tail.push_back(p.label);
                            return p.child.get();
                          },
                      },
                      node->v);
  }
  if (out.is_zero) return Normal{true, {}, 0, 0};
  out.factors.insert(out.factors.end(), tail.rbegin(), tail.rend());
  return out;
}

std::string to_string(const FormalMotive& m) {
  const auto n = m.normal_form();
  if (n.is_zero) return "0";
  std::ostringstream os;
  os << "C_*(";
  for (std::size_t i = 0; i < n.factors.size(); ++i) os << (i ? " × " : "") << n.factors[i];
  os << ")";
  if (n.twist != 0) os << "(" << n.twist << ")";
  if (n.shift != 0) os << "[" << n.shift << "]";
  return os.str();
}

KappaDiagram build_kappa(const std::vector<std::string>& components, const std::string& ambient, int d) {
  if (components.size() > 16) throw InvariantError("build_kappa: at most 16 components");
  std::set<std::string> distinct(components.begin(), components.end());
  if (distinct.size() != components.size()) throw InvariantError("build_kappa: component labels must be distinct");
  if (distinct.count(ambient)) throw InvariantError("build_kappa: the ambient label must differ from the components");

  KappaDiagram k;
  k.components = components;
  k.ambient = ambient;
  k.dimension = d;
  k.twist = -d;
  k.shift = -2 * d;

  const auto subsets = nonempty_subsets_by_size(components.size());
  std::map<Subset, std::size_t> index;
  for (Subset t : subsets) {
    std::string label;
    for (auto i : elements_of(t)) label += (label.empty() ? "" : "∩") + components[i];
    index[t] = k.vertices.size();
    k.vertices.push_back({KSVertex::Kind::inner, t, FormalMotive::motive(label)});
  }
  k.vertices.push_back({KSVertex::Kind::l, 0, FormalMotive::motive(ambient)});
  k.vertices.push_back({KSVertex::Kind::u, 0, FormalMotive::zero()});

  for (Subset t : subsets) {
    if (popcount(t) >= 2)
      for (auto i : elements_of(t)) k.arrows.emplace_back(index[t], index[t & ~(Subset{1} << i)]);
    k.arrows.emplace_back(index[t], k.index_of_l());
    k.arrows.emplace_back(index[t], k.index_of_u());
  }
  return k;
}

KappaDiagram cross_with(const KappaDiagram& k, const std::string& y) {
  KappaDiagram out = k;
  for (auto& v : out.vertices) v.value = v.value.product(y);
  return out;
}

std::string colimit_annotation(const KappaDiagram& k) {
  std::ostringstream os;
  os << "colim kappa(" << k.twist << ")[" << k.shift << "]";
  return os.str();
}

std::string to_string(const KappaDiagram& k) {
  std::ostringstream os;
  auto name = [&](std::size_t idx) -> std::string {
    const auto& v = k.vertices[idx];
    if (v.kind == KSVertex::Kind::l) return "l";
    if (v.kind == KSVertex::Kind::u) return "u";
    std::string s = "{";
    for (auto i : elements_of(v.subset)) s += (s.size() > 1 ? "," : "") + k.components[i];
    return s + "}";
  };
  for (std::size_t i = 0; i < k.vertices.size(); ++i) os << name(i) << " = " << to_string(k.vertices[i].value) << "\n";
  for (const auto& [a, b] : k.arrows) os << name(a) << " -> " << name(b) << "\n";
  os << colimit_annotation(k) << "\n";
  return os.str();
}

}  // namespace motivic
