#pragma once

// JSON encodings of the library's value types. Parsers validate through the
// regular constructors, so malformed input raises InvariantError or
// ShapeError naming the broken invariant; missing keys or wrong JSON types
// raise InvariantError("json: ...").

#include <nlohmann/json.hpp>

#include "motivic/artin.hpp"
#include "motivic/finset.hpp"
#include "motivic/galois.hpp"
#include "motivic/hypercube.hpp"
#include "motivic/qlinalg.hpp"

namespace motivic::json_io {

using nlohmann::json;

json to_json(const FinSet& s);
json to_json(const SetMap& f);
json to_json(const FinDiagram& d);
json to_json(const DiagramIso& iso);
json to_json(const PermGroup& g);
json to_json(const Rational& q);
json to_json(const QMatrix& m);
json to_json(const ChainComplex& c);
json to_json(const ChainMap& f);
json to_json(const ArtinComonoid& c);
json to_json(const CoalgMorphism& m);
json to_json(const FiniteGroup& g);
json to_json(const GSet& s);
/// {"index_size", "vertices":[{"subset","complex"}], "edges":[{"subset","index","map"}]}
json to_json(const CubeDiagram& d);
json to_json(const KappaDiagram& k);

FinSet finset_from_json(const json& j);
SetMap setmap_from_json(const json& j);
FinDiagram diagram_from_json(const json& j);
PermGroup permgroup_from_json(const json& j);
Rational rational_from_json(const json& j);
QMatrix matrix_from_json(const json& j);
ChainComplex complex_from_json(const json& j);
ChainMap chainmap_from_json(const json& j);
CoalgMorphism morphism_from_json(const json& j);
FiniteGroup group_from_json(const json& j);
GSet gset_from_json(const json& j);
CubeDiagram cube_from_json(const json& j);

/// {"cover":{"points":[labels], "components":[[labels], ...]}}
struct LabeledCover {
  std::vector<std::string> points;
  std::vector<std::vector<std::string>> components;
  Cover cover;
};
LabeledCover cover_from_json(const json& j);
json to_json(const LabeledCover& c);

/// A cube file holds either the full diagram or a cover.
CubeDiagram cube_input_from_json(const json& j);

}  // namespace motivic::json_io
