#include "motivic/finset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <sstream>
#include <unordered_set>

#include "motivic/error.hpp"

namespace motivic {

FinSet::FinSet(std::size_t size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
  if (size_ == 0) throw InvariantError("FinSet: finite sets must be nonempty");
  if (!labels_.empty()) {
    if (labels_.size() != size_)
      throw InvariantError("FinSet: labels must have length equal to size");
    std::set<std::string> distinct(labels_.begin(), labels_.end());
    if (distinct.size() != labels_.size())
      throw InvariantError("FinSet: labels must be distinct");
  }
}

SetMap::SetMap(std::size_t dom, std::size_t cod, std::vector<std::size_t> values)
    : dom_(dom), cod_(cod), values_(std::move(values)) {
  if (values_.size() != dom_)
    throw InvariantError("SetMap: length(values) must equal dom size");
  for (auto v : values_)
    if (v >= cod_) throw InvariantError("SetMap: value outside codomain");
}

SetMap SetMap::identity(std::size_t n) {
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  return SetMap(n, n, std::move(v));
}

bool SetMap::is_bijective() const {
  if (dom_ != cod_) return false;
  std::vector<bool> hit(cod_, false);
  for (auto v : values_) {
    if (hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

SetMap SetMap::inverse() const {
  if (!is_bijective()) throw InvariantError("SetMap::inverse: map is not bijective");
  std::vector<std::size_t> inv(dom_);
  for (std::size_t i = 0; i < dom_; ++i) inv[values_[i]] = i;
  return SetMap(cod_, dom_, std::move(inv));
}

std::vector<std::size_t> SetMap::fiber_sizes() const {
  std::vector<std::size_t> f(cod_, 0);
  for (auto v : values_) ++f[v];
  return f;
}

SetMap compose(const SetMap& f, const SetMap& g) {
  if (f.cod() != g.dom()) throw ShapeError("compose: codomain of f differs from domain of g");
  std::vector<std::size_t> v(f.dom());
  for (std::size_t i = 0; i < f.dom(); ++i) v[i] = g(f(i));
  return SetMap(f.dom(), g.cod(), std::move(v));
}

std::vector<SetMap> all_maps(std::size_t dom, std::size_t cod) {
  std::vector<SetMap> out;
  if (cod == 0) {
    if (dom == 0) out.emplace_back(0, 0, std::vector<std::size_t>{});
    return out;
  }
  std::vector<std::size_t> v(dom, 0);
  while (true) {
    out.emplace_back(dom, cod, v);
    std::size_t i = dom;
    while (i > 0) {
      --i;
      if (++v[i] < cod) break;
      v[i] = 0;
      if (i == 0) return out;
    }
    if (dom == 0) return out;
  }
}

std::vector<SetMap> all_permutations(std::size_t n) {
  std::vector<SetMap> out;
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), std::size_t{0});
  do {
    out.emplace_back(n, n, v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

// ---------------------------------------------------------------------------

FinDiagram::FinDiagram(std::vector<FinSet> sets, std::vector<SetMap> maps)
    : sets_(std::move(sets)), maps_(std::move(maps)) {
  const std::size_t expected = sets_.empty() ? 0 : sets_.size() - 1;
  if (maps_.size() != expected)
    throw InvariantError("FinDiagram: a k-diagram has exactly k-1 maps");
  for (std::size_t i = 0; i < maps_.size(); ++i) {
    if (maps_[i].dom() != sets_[i].size() || maps_[i].cod() != sets_[i + 1].size())
      throw InvariantError("FinDiagram: adjacent domain/codomain mismatch");
  }
}

FinDiagram FinDiagram::from_values(std::vector<std::size_t> sizes,
                                   std::vector<std::vector<std::size_t>> values) {
  std::vector<FinSet> sets;
  sets.reserve(sizes.size());
  for (auto s : sizes) sets.push_back(s == 0 ? FinSet::empty() : FinSet(s));
  if (values.size() + 1 != sizes.size() && !(sizes.empty() && values.empty()))
    throw InvariantError("FinDiagram: a k-diagram has exactly k-1 maps");
  std::vector<SetMap> maps;
  for (std::size_t i = 0; i < values.size(); ++i)
    maps.emplace_back(sizes[i], sizes[i + 1], std::move(values[i]));
  return FinDiagram(std::move(sets), std::move(maps));
}

std::vector<std::size_t> FinDiagram::sizes() const {
  std::vector<std::size_t> s;
  s.reserve(sets_.size());
  for (const auto& x : sets_) s.push_back(x.size());
  return s;
}

bool FinDiagram::has_empty_set() const {
  return std::any_of(sets_.begin(), sets_.end(), [](const FinSet& s) { return s.size() == 0; });
}

std::strong_ordering operator<=>(const FinDiagram& a, const FinDiagram& b) {
  if (auto c = a.k() <=> b.k(); c != 0) return c;
  if (auto c = a.sizes() <=> b.sizes(); c != 0) return c;
  for (std::size_t i = 0; i < a.maps_.size(); ++i)
    if (auto c = a.maps_[i].values() <=> b.maps_[i].values(); c != 0) return c;
  return std::strong_ordering::equal;
}

bool operator==(const FinDiagram& a, const FinDiagram& b) { return (a <=> b) == 0; }

std::string to_string(const FinDiagram& d) {
  std::ostringstream os;
  if (d.k() == 0) return "()";
  for (std::size_t i = 0; i < d.k(); ++i) os << (i ? ">" : "") << d.size(i);
  for (const auto& m : d.maps()) {
    os << " [";
    for (std::size_t i = 0; i < m.dom(); ++i) os << (i ? "," : "") << m(i);
    os << "]";
  }
  return os.str();
}

// ---------------------------------------------------------------------------

DiagramIso identity_iso(const FinDiagram& d) {
  DiagramIso iso;
  for (const auto& s : d.sets()) iso.components.push_back(SetMap::identity(s.size()));
  return iso;
}

DiagramIso compose(const DiagramIso& a, const DiagramIso& b) {
  if (a.components.size() != b.components.size())
    throw ShapeError("compose: isomorphisms of diagrams of different length");
  DiagramIso c;
  for (std::size_t i = 0; i < a.components.size(); ++i)
    c.components.push_back(compose(a.components[i], b.components[i]));
  return c;
}

DiagramIso inverse(const DiagramIso& a) {
  DiagramIso c;
  for (const auto& s : a.components) c.components.push_back(s.inverse());
  return c;
}

bool is_diagram_iso(const DiagramIso& iso, const FinDiagram& from, const FinDiagram& to) {
  if (iso.components.size() != from.k() || from.k() != to.k()) return false;
  for (std::size_t i = 0; i < from.k(); ++i) {
    const auto& s = iso.components[i];
    if (s.dom() != from.size(i) || s.cod() != to.size(i) || !s.is_bijective()) return false;
  }
  for (std::size_t i = 0; i + 1 < from.k(); ++i) {
    if (compose(from.maps()[i], iso.components[i + 1]) != compose(iso.components[i], to.maps()[i]))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Canonical labelling.
//
// A k-diagram is a forest of depth k: the roots are the elements of S_k and
// the children of x in S_{j+1} are its preimages in S_j. Each element gets the
// code "(" + sorted child codes + ")". Roots are labelled in code order, then
// each level is labelled parent by parent, children in code order. Equal codes
// mean isomorphic subtrees, so ties do not affect the resulting diagram.

namespace {

struct Forest {
  std::vector<std::vector<std::vector<std::size_t>>> children;  // [level][elem]
  std::vector<std::vector<std::string>> codes;                   // [level][elem]
};

Forest build_forest(const FinDiagram& d) {
  Forest f;
  const std::size_t k = d.k();
  f.children.resize(k);
  f.codes.resize(k);
  for (std::size_t j = 0; j < k; ++j) f.children[j].resize(d.size(j));
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const auto& m = d.maps()[j];
    for (std::size_t e = 0; e < m.dom(); ++e) f.children[j + 1][m(e)].push_back(e);
  }
  for (std::size_t j = 0; j < k; ++j) {
    f.codes[j].resize(d.size(j));
    for (std::size_t e = 0; e < d.size(j); ++e) {
      std::vector<std::string> kids;
      if (j > 0)
        for (auto c : f.children[j][e]) kids.push_back(f.codes[j - 1][c]);
      std::sort(kids.begin(), kids.end());
      std::string code = "(";
      for (const auto& s : kids) code += s;
      code += ")";
      f.codes[j][e] = std::move(code);
    }
  }
  return f;
}

std::vector<std::size_t> sorted_by_code(const std::vector<std::size_t>& elems,
                                        const std::vector<std::string>& codes) {
  std::vector<std::size_t> out = elems;
  std::stable_sort(out.begin(), out.end(),
                   [&](std::size_t a, std::size_t b) { return codes[a] < codes[b]; });
  return out;
}

}  // namespace

CanonicalLabeling canonical_labeling(const FinDiagram& d) {
  const std::size_t k = d.k();
  if (k == 0) return {d, DiagramIso{}};
  const Forest f = build_forest(d);

  std::vector<std::vector<std::size_t>> label(k);
  for (std::size_t j = 0; j < k; ++j) label[j].assign(d.size(j), 0);

  std::vector<std::size_t> order(d.size(k - 1));
  std::iota(order.begin(), order.end(), std::size_t{0});
  order = sorted_by_code(order, f.codes[k - 1]);
  for (std::size_t pos = 0; pos < order.size(); ++pos) label[k - 1][order[pos]] = pos;

  for (std::size_t j = k - 1; j > 0; --j) {
    std::vector<std::size_t> next;
    next.reserve(d.size(j - 1));
    for (auto parent : order) {
      auto kids = sorted_by_code(f.children[j][parent], f.codes[j - 1]);
      next.insert(next.end(), kids.begin(), kids.end());
    }
    for (std::size_t pos = 0; pos < next.size(); ++pos) label[j - 1][next[pos]] = pos;
    order = std::move(next);
  }

  DiagramIso to_form;
  for (std::size_t j = 0; j < k; ++j) to_form.components.emplace_back(d.size(j), d.size(j), label[j]);

  std::vector<SetMap> maps;
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const auto& m = d.maps()[j];
    std::vector<std::size_t> v(m.dom());
    for (std::size_t e = 0; e < m.dom(); ++e) v[label[j][e]] = label[j + 1][m(e)];
    maps.emplace_back(m.dom(), m.cod(), std::move(v));
  }
  return {FinDiagram(d.sets(), std::move(maps)), std::move(to_form)};
}

FinDiagram canonical_form(const FinDiagram& d) { return canonical_labeling(d).form; }

std::optional<DiagramIso> are_isomorphic(const FinDiagram& d1, const FinDiagram& d2) {
  if (d1.k() != d2.k()) return std::nullopt;
  auto c1 = canonical_labeling(d1);
  auto c2 = canonical_labeling(d2);
  if (c1.form != c2.form) return std::nullopt;
  return compose(c1.to_form, inverse(c2.to_form));
}

// ---------------------------------------------------------------------------
// Automorphisms.
//
// In the canonical form, two adjacent siblings with equal codes root subtrees
// whose descendants occupy adjacent, equally shaped label blocks on every
// lower level. Exchanging the blocks is an automorphism, and these exchanges
// generate the automorphism group (an iterated wreath product).

namespace {

// Labels of the descendants of `root` (at `level`) on each level below, in the
// canonical form. result[j] is contiguous and increasing.
std::vector<std::vector<std::size_t>> descendant_blocks(const Forest& f, std::size_t level,
                                                        std::size_t root) {
  std::vector<std::vector<std::size_t>> blocks(level + 1);
  blocks[level] = {root};
  for (std::size_t j = level; j > 0; --j) {
    for (auto e : blocks[j]) {
      auto kids = f.children[j][e];
      std::sort(kids.begin(), kids.end());
      blocks[j - 1].insert(blocks[j - 1].end(), kids.begin(), kids.end());
    }
  }
  return blocks;
}

DiagramIso swap_subtrees(const FinDiagram& form, const Forest& f, std::size_t level,
                         std::size_t a, std::size_t b) {
  auto ba = descendant_blocks(f, level, a);
  auto bb = descendant_blocks(f, level, b);
  DiagramIso g = identity_iso(form);
  std::vector<std::vector<std::size_t>> v(form.k());
  for (std::size_t j = 0; j < form.k(); ++j) v[j] = g.components[j].values();
  for (std::size_t j = 0; j <= level; ++j) {
    for (std::size_t i = 0; i < ba[j].size(); ++i) {
      v[j][ba[j][i]] = bb[j][i];
      v[j][bb[j][i]] = ba[j][i];
    }
  }
  for (std::size_t j = 0; j < form.k(); ++j) g.components[j] = SetMap(form.size(j), form.size(j), v[j]);
  return g;
}

std::vector<std::size_t> flatten(const DiagramIso& g) {
  std::vector<std::size_t> out;
  for (const auto& c : g.components) out.insert(out.end(), c.values().begin(), c.values().end());
  return out;
}

struct VecHash {
  std::size_t operator()(const std::vector<std::size_t>& v) const noexcept {
    std::size_t h = v.size();
    for (auto x : v) h = h * 1000003u ^ (x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    return h;
  }
};

}  // namespace

PermGroup automorphism_group(const FinDiagram& d) {
  PermGroup group;
  group.degrees = d.sizes();
  if (d.k() == 0) return group;

  auto canon = canonical_labeling(d);
  const FinDiagram& form = canon.form;
  const Forest f = build_forest(form);
  const std::size_t k = form.k();

  std::vector<DiagramIso> gens;
  auto add_sibling_swaps = [&](std::size_t level, const std::vector<std::size_t>& siblings) {
    for (std::size_t i = 0; i + 1 < siblings.size(); ++i) {
      if (f.codes[level][siblings[i]] == f.codes[level][siblings[i + 1]])
        gens.push_back(swap_subtrees(form, f, level, siblings[i], siblings[i + 1]));
    }
  };
  {
    std::vector<std::size_t> roots(form.size(k - 1));
    std::iota(roots.begin(), roots.end(), std::size_t{0});
    add_sibling_swaps(k - 1, roots);
  }
  for (std::size_t j = k - 1; j > 0; --j) {
    for (std::size_t e = 0; e < form.size(j); ++e) {
      auto kids = f.children[j][e];
      std::sort(kids.begin(), kids.end());
      add_sibling_swaps(j - 1, kids);
    }
  }

  const DiagramIso back = inverse(canon.to_form);
  for (const auto& g : gens) {
    DiagramIso h = compose(compose(canon.to_form, g), back);
    if (!is_diagram_iso(h, d, d)) throw std::logic_error("automorphism_group: bad generator");
    group.generators.push_back(std::move(h));
  }
  group.order = group_closure(d, group.generators).size();
  return group;
}

std::vector<DiagramIso> group_closure(const FinDiagram& d, const std::vector<DiagramIso>& generators) {
  std::vector<DiagramIso> elements{identity_iso(d)};
  std::unordered_set<std::vector<std::size_t>, VecHash> seen{flatten(elements.front())};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t idx = queue.front();
    queue.pop_front();
    for (const auto& g : generators) {
      DiagramIso h = compose(elements[idx], g);
      if (seen.insert(flatten(h)).second) {
        elements.push_back(std::move(h));
        queue.push_back(elements.size() - 1);
      }
    }
  }
  return elements;
}

std::vector<DiagramIso> automorphisms(const FinDiagram& d) {
  return group_closure(d, automorphism_group(d).generators);
}

std::size_t brute_force_automorphism_count(const FinDiagram& d) {
  const std::size_t k = d.k();
  if (k == 0) return 1;
  std::vector<std::vector<SetMap>> perms;
  for (std::size_t j = 0; j < k; ++j) perms.push_back(all_permutations(d.size(j)));
  std::vector<std::size_t> idx(k, 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t j = 0; j + 1 < k && ok; ++j)
      ok = compose(d.maps()[j], perms[j + 1][idx[j + 1]]) == compose(perms[j][idx[j]], d.maps()[j]);
    if (ok) ++count;
    std::size_t j = 0;
    while (j < k && ++idx[j] == perms[j].size()) idx[j++] = 0;
    if (j == k) break;
  }
  return count;
}

// ---------------------------------------------------------------------------
// Enumeration, top level first. Extending a class D = (S_j -> ... -> S_k) by a
// new bottom set of size s amounts to choosing fiber sizes over S_j summing to
// s; two choices give isomorphic extensions iff they lie in one orbit of Aut D
// acting through S_j. One representative per orbit is kept.

namespace {

void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                  std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t x = 0; x <= total; ++x) {
    cur.push_back(x);
    compositions(total - x, parts, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<std::size_t>> fiber_vectors(std::size_t total, std::size_t parts) {
  std::vector<std::vector<std::size_t>> out;
  if (parts == 0) {
    if (total == 0) out.emplace_back();
    return out;
  }
  std::vector<std::size_t> cur;
  compositions(total, parts, cur, out);
  return out;
}

FinDiagram prepend(const FinDiagram& d, const std::vector<std::size_t>& fibers) {
  std::vector<std::size_t> sizes = d.sizes();
  std::size_t s = std::accumulate(fibers.begin(), fibers.end(), std::size_t{0});
  std::vector<std::size_t> v;
  for (std::size_t e = 0; e < fibers.size(); ++e) v.insert(v.end(), fibers[e], e);
  std::vector<std::vector<std::size_t>> values{v};
  for (const auto& m : d.maps()) values.push_back(m.values());
  sizes.insert(sizes.begin(), s);
  return FinDiagram::from_values(std::move(sizes), std::move(values));
}

}  // namespace

std::vector<FinDiagram> enumerate_diagrams(std::size_t k, const std::vector<std::size_t>& max_sizes,
                                           EmptySets empty) {
  if (k == 0) return {FinDiagram{}};
  if (max_sizes.size() != k) throw ShapeError("enumerate_diagrams: need one bound per set");
  const std::size_t min_size = empty == EmptySets::allow ? 0 : 1;

  std::vector<FinDiagram> layer;
  for (std::size_t s = min_size; s <= max_sizes[k - 1]; ++s)
    layer.push_back(FinDiagram::from_values({s}, {}));

  for (std::size_t j = k - 1; j > 0; --j) {
    std::vector<FinDiagram> next;
    for (const auto& d : layer) {
      const auto autos = automorphisms(d);
      for (std::size_t s = min_size; s <= max_sizes[j - 1]; ++s) {
        for (const auto& c : fiber_vectors(s, d.size(0))) {
          bool minimal = true;
          for (const auto& g : autos) {
            std::vector<std::size_t> moved(c.size());
            for (std::size_t e = 0; e < c.size(); ++e) moved[g.components[0](e)] = c[e];
            if (moved < c) {
              minimal = false;
              break;
            }
          }
          if (minimal) next.push_back(canonical_form(prepend(d, c)));
        }
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  layer.erase(std::unique(layer.begin(), layer.end()), layer.end());
  return layer;
}

}  // namespace motivic
