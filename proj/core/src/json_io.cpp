#include "motivic/json_io.hpp"

#include <map>
#include <string>

#include "motivic/error.hpp"

namespace motivic::json_io {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvariantError(std::string("json: missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t natural(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0)
    throw InvariantError(std::string("json: ") + what + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::size_t> naturals(const json& j, const char* what) {
  if (!j.is_array()) throw InvariantError(std::string("json: ") + what + " must be an array");
  std::vector<std::size_t> out;
  for (const auto& v : j) out.push_back(natural(v, what));
  return out;
}

const json& array(const json& j, const char* key) {
  const json& a = field(j, key);
  if (!a.is_array()) throw InvariantError(std::string("json: \"") + key + "\" must be an array");
  return a;
}

int integer(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw InvariantError(std::string("json: ") + what + " keys must be integers");
}

}  // namespace

json to_json(const FinSet& s) {
  json j{{"size", s.size()}};
  if (!s.labels().empty()) j["labels"] = s.labels();
  return j;
}

json to_json(const SetMap& f) { return {{"dom", f.dom()}, {"cod", f.cod()}, {"values", f.values()}}; }

json to_json(const FinDiagram& d) {
  json sets = json::array(), maps = json::array();
  for (const auto& s : d.sets()) sets.push_back(to_json(s));
  for (const auto& m : d.maps()) maps.push_back(to_json(m));
  return {{"sets", sets}, {"maps", maps}};
}

json to_json(const DiagramIso& iso) {
  json a = json::array();
  for (const auto& c : iso.components) a.push_back(c.values());
  return a;
}

json to_json(const PermGroup& g) {
  json gens = json::array();
  for (const auto& iso : g.generators) gens.push_back(to_json(iso));
  return {{"order", g.order}, {"degrees", g.degrees}, {"generators", gens}};
}

json to_json(const Rational& q) { return to_string(q); }

json to_json(const QMatrix& m) {
  json e = json::array();
  for (const auto& q : m.entries()) e.push_back(to_json(q));
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", e}};
}

json to_json(const ChainComplex& c) {
  json dims = json::object(), diffs = json::object();
  for (const auto& [n, d] : c.dims()) dims[std::to_string(n)] = d;
  for (const auto& [n, m] : c.differentials()) diffs[std::to_string(n)] = to_json(m);
  return {{"lo", c.lo()}, {"hi", c.hi()}, {"dims", dims}, {"differentials", diffs}};
}

json to_json(const ChainMap& f) {
  json comps = json::object();
  for (const auto& [n, m] : f.components) comps[std::to_string(n)] = to_json(m);
  return {{"components", comps}};
}

json to_json(const ArtinComonoid& c) {
  return {{"carrier", to_json(c.carrier)}, {"counit", to_json(c.counit)}, {"comult", to_json(c.comult)}};
}

json to_json(const CoalgMorphism& m) {
  return {{"source", m.source.size()}, {"target", m.target.size()}, {"matrix", to_json(m.matrix)}};
}

json to_json(const FiniteGroup& g) { return {{"order", g.order()}, {"table", g.table()}}; }

json to_json(const GSet& s) {
  json action = json::array();
  for (const auto& a : s.actions()) action.push_back(a.values());
  return {{"group", to_json(s.group())}, {"carrier", to_json(s.carrier())}, {"action", action}};
}

json to_json(const CubeDiagram& d) {
  json vertices = json::array(), edges = json::array();
  for (const auto& [t, c] : d.vertices()) vertices.push_back({{"subset", t}, {"complex", to_json(c)}});
  for (const auto& [key, f] : d.edges())
    edges.push_back({{"subset", key.first}, {"index", key.second}, {"map", to_json(f)}});
  return {{"index_size", d.index_size()}, {"vertices", vertices}, {"edges", edges}};
}

json to_json(const KappaDiagram& k) {
  json vertices = json::array(), arrows = json::array();
  for (const auto& v : k.vertices) {
    json jv{{"value", to_string(v.value)}};
    switch (v.kind) {
      case KSVertex::Kind::inner:
        jv["kind"] = "subset";
        jv["subset"] = v.subset;
        break;
      case KSVertex::Kind::l: jv["kind"] = "l"; break;
      case KSVertex::Kind::u: jv["kind"] = "u"; break;
    }
    vertices.push_back(jv);
  }
  for (const auto& [a, b] : k.arrows) arrows.push_back({a, b});
  return {{"components", k.components}, {"ambient", k.ambient}, {"dimension", k.dimension},
          {"vertices", vertices}, {"arrows", arrows}, {"twist", k.twist}, {"shift", k.shift},
          {"colimit", colimit_annotation(k)}};
}

// ---------------------------------------------------------------------------

FinSet finset_from_json(const json& j) {
  const std::size_t n = natural(field(j, "size"), "size");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    if (!j.at("labels").is_array()) throw InvariantError("json: labels must be an array of strings");
    for (const auto& l : j.at("labels")) {
      if (!l.is_string()) throw InvariantError("json: labels must be an array of strings");
      labels.push_back(l.get<std::string>());
    }
  }
  return FinSet(n, std::move(labels));
}

SetMap setmap_from_json(const json& j) {
  return SetMap(natural(field(j, "dom"), "dom"), natural(field(j, "cod"), "cod"),
                naturals(field(j, "values"), "values"));
}

FinDiagram diagram_from_json(const json& j) {
  std::vector<FinSet> sets;
  std::vector<SetMap> maps;
  for (const auto& s : array(j, "sets")) sets.push_back(finset_from_json(s));
  for (const auto& m : array(j, "maps")) maps.push_back(setmap_from_json(m));
  return FinDiagram(std::move(sets), std::move(maps));
}

PermGroup permgroup_from_json(const json& j) {
  PermGroup g;
  g.order = natural(field(j, "order"), "order");
  if (j.contains("degrees")) g.degrees = naturals(j.at("degrees"), "degrees");
  for (const auto& gen : array(j, "generators")) {
    if (!gen.is_array()) throw InvariantError("json: a generator is an array of permutations");
    DiagramIso iso;
    for (const auto& c : gen) {
      auto v = naturals(c, "permutation");
      const std::size_t n = v.size();
      SetMap p(n, n, std::move(v));
      if (!p.is_bijective()) throw InvariantError("json: generator components must be permutations");
      iso.components.push_back(std::move(p));
    }
    g.generators.push_back(std::move(iso));
  }
  return g;
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw InvariantError("json: rationals are strings \"p/q\"");
  return parse_rational(j.get<std::string>());
}

QMatrix matrix_from_json(const json& j) {
  const std::size_t rows = natural(field(j, "rows"), "rows");
  const std::size_t cols = natural(field(j, "cols"), "cols");
  std::vector<Rational> entries;
  for (const auto& e : array(j, "entries")) entries.push_back(rational_from_json(e));
  return QMatrix(rows, cols, std::move(entries));
}

ChainComplex complex_from_json(const json& j) {
  const json& lo = field(j, "lo");
  const json& hi = field(j, "hi");
  if (!lo.is_number_integer() || !hi.is_number_integer()) throw InvariantError("json: lo and hi must be integers");
  std::map<int, std::size_t> dims;
  std::map<int, QMatrix> diffs;
  const json& jd = field(j, "dims");
  if (!jd.is_object()) throw InvariantError("json: dims must be an object");
  for (const auto& [k, v] : jd.items()) dims[integer(k, "dims")] = natural(v, "dims");
  if (j.contains("differentials")) {
    if (!j.at("differentials").is_object()) throw InvariantError("json: differentials must be an object");
    for (const auto& [k, v] : j.at("differentials").items()) diffs[integer(k, "differentials")] = matrix_from_json(v);
  }
  return ChainComplex(lo.get<int>(), hi.get<int>(), std::move(dims), std::move(diffs));
}

ChainMap chainmap_from_json(const json& j) {
  ChainMap f;
  const json& c = field(j, "components");
  if (!c.is_object()) throw InvariantError("json: components must be an object");
  for (const auto& [k, v] : c.items()) f.components[integer(k, "components")] = matrix_from_json(v);
  return f;
}

CoalgMorphism morphism_from_json(const json& j) {
  const FinSet x(natural(field(j, "source"), "source"));
  const FinSet y(natural(field(j, "target"), "target"));
  CoalgMorphism m{artin_comonoid(x), artin_comonoid(y), matrix_from_json(field(j, "matrix"))};
  const MorphismCheck check = is_coalgebra_morphism(m.matrix, m.source, m.target);
  if (!check.ok) throw InvariantError("json: matrix is not a coalgebra morphism");
  return m;
}

FiniteGroup group_from_json(const json& j) {
  const std::size_t order = natural(field(j, "order"), "order");
  std::vector<std::vector<std::size_t>> table;
  for (const auto& row : array(j, "table")) table.push_back(naturals(row, "table"));
  if (table.size() != order) throw InvariantError("json: group table must have order rows");
  return FiniteGroup(std::move(table));
}

GSet gset_from_json(const json& j) {
  FiniteGroup g = group_from_json(field(j, "group"));
  FinSet carrier = finset_from_json(field(j, "carrier"));
  std::vector<SetMap> action;
  for (const auto& a : array(j, "action")) action.emplace_back(carrier.size(), carrier.size(), naturals(a, "action"));
  return GSet(std::move(g), std::move(carrier), std::move(action));
}

CubeDiagram cube_from_json(const json& j) {
  const std::size_t n = natural(field(j, "index_size"), "index_size");
  std::map<Subset, ChainComplex> vertices;
  std::map<CubeDiagram::EdgeKey, ChainMap> edges;
  for (const auto& v : array(j, "vertices"))
    vertices[static_cast<Subset>(natural(field(v, "subset"), "subset"))] = complex_from_json(field(v, "complex"));
  for (const auto& e : array(j, "edges"))
    edges[{static_cast<Subset>(natural(field(e, "subset"), "subset")), natural(field(e, "index"), "index")}] =
        chainmap_from_json(field(e, "map"));
  return CubeDiagram(n, std::move(vertices), std::move(edges));
}

LabeledCover cover_from_json(const json& j) {
  const json& c = field(j, "cover");
  LabeledCover out;
  std::map<std::string, std::size_t> index;
  for (const auto& p : array(c, "points")) {
    if (!p.is_string()) throw InvariantError("json: cover points must be strings");
    const std::string label = p.get<std::string>();
    if (!index.emplace(label, out.points.size()).second) throw InvariantError("json: cover points must be distinct");
    out.points.push_back(label);
  }
  out.cover.universe = out.points.size();
  for (const auto& comp : array(c, "components")) {
    if (!comp.is_array()) throw InvariantError("json: a cover component is an array of points");
    std::vector<std::string> labels;
    std::vector<std::size_t> members;
    for (const auto& p : comp) {
      if (!p.is_string() || !index.count(p.get<std::string>()))
        throw InvariantError("json: cover components may only mention listed points");
      labels.push_back(p.get<std::string>());
      members.push_back(index.at(labels.back()));
    }
    out.components.push_back(std::move(labels));
    out.cover.components.push_back(std::move(members));
  }
  return out;
}

json to_json(const LabeledCover& c) { return {{"cover", {{"points", c.points}, {"components", c.components}}}}; }

CubeDiagram cube_input_from_json(const json& j) {
  if (j.is_object() && j.contains("cover")) return cover_model(cover_from_json(j).cover);
  return cube_from_json(j);
}

}  // namespace motivic::json_io
