#include "cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "motivic/artin.hpp"
#include "motivic/error.hpp"
#include "motivic/finset.hpp"
#include "motivic/galois.hpp"
#include "motivic/hypercube.hpp"
#include "motivic/json_io.hpp"
#include "motivic/monad.hpp"
#include "motivic/qlinalg.hpp"
#include "motivic/resolution.hpp"

#ifndef MOTIVIC_KIT_DATA_DIR
#define MOTIVIC_KIT_DATA_DIR "data"
#endif

namespace motivic::cli {

using nlohmann::json;

namespace {

constexpr std::size_t default_safety_bound = 6;

// A failed assertion: reported with the invariant's name, exit status 1.
struct AssertionFailure {
  std::string invariant;
};

void require(bool ok, const std::string& invariant) {
  if (!ok) throw AssertionFailure{invariant};
}

void check_size(std::size_t n, const char* what) {
  if (n > safety_bound())
    throw InvariantError(std::string("safety bound: ") + what + " = " + std::to_string(n) + " exceeds " +
                         std::to_string(safety_bound()) + " (set MOTIVIC_KIT_MAX_SIZE to raise it)");
}

std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? sep : "") << v[i];
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvariantError("input file: cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InvariantError("input file: " + path + " is not valid JSON (" + e.what() + ")");
  }
}

std::string matrix_rows(const QMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? " | " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << to_string(m(r, c));
  }
  return os.str();
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------

void enumerate_cmd(const RunConfig& c, std::ostream& out) {
  require(c.bounds.size() == c.k, "bounds: need one bound per level");
  for (auto b : c.bounds) check_size(b, "bound");
  const auto classes =
      enumerate_diagrams(c.k, c.bounds, c.allow_empty ? EmptySets::allow : EmptySets::forbid);
  bool idempotent = true;
  for (const auto& d : classes) idempotent = idempotent && canonical_form(d) == d;

  if (c.format == Format::json) {
    json rows = json::array();
    for (const auto& d : classes)
      rows.push_back({{"class", to_string(d)}, {"diagram", json_io::to_json(d)},
                      {"aut_order", automorphism_group(d).order}});
    out << json{{"command", "enumerate-diagrams"}, {"k", c.k}, {"bounds", c.bounds}, {"allow_empty", c.allow_empty},
                {"count", classes.size()}, {"classes", rows}, {"pass", idempotent}}
               .dump(2)
        << "\n";
  } else {
    out << "class\t|Aut|\n";
    for (const auto& d : classes) out << to_string(d) << "\t" << automorphism_group(d).order << "\n";
    out << "count " << classes.size() << "\n";
  }
  require(idempotent, "canonical_form idempotence");
}

FinDiagram diagram_input(const RunConfig& c) {
  if (!c.diagram.empty()) return json_io::diagram_from_json(read_json_file(c.diagram));
  require(!c.sizes.empty(), "aut: give --diagram or --sizes");
  std::vector<std::vector<std::size_t>> values;
  std::size_t pos = 0;
  for (std::size_t j = 0; j + 1 < c.sizes.size(); ++j) {
    if (pos + c.sizes[j] > c.values.size()) throw ShapeError("aut: --values is too short for --sizes");
    values.emplace_back(c.values.begin() + static_cast<long>(pos), c.values.begin() + static_cast<long>(pos + c.sizes[j]));
    pos += c.sizes[j];
  }
  if (pos != c.values.size()) throw ShapeError("aut: --values is too long for --sizes");
  return FinDiagram::from_values(c.sizes, values);
}

void aut_cmd(const RunConfig& c, std::ostream& out) {
  const FinDiagram d = diagram_input(c);
  for (auto s : d.sizes()) check_size(s, "set size");
  const PermGroup g = automorphism_group(d);
  const std::size_t closure = group_closure(d, g.generators).size();
  bool generators_ok = true;
  for (const auto& gen : g.generators) generators_ok = generators_ok && is_diagram_iso(gen, d, d);

  if (c.format == Format::json) {
    out << json{{"command", "aut"}, {"diagram", json_io::to_json(d)}, {"canonical", json_io::to_json(canonical_form(d))},
                {"group", json_io::to_json(g)}, {"closure_order", closure},
                {"pass", generators_ok && closure == g.order}}
               .dump(2)
        << "\n";
  } else {
    out << "diagram   " << to_string(d) << "\n";
    out << "canonical " << to_string(canonical_form(d)) << "\n";
    out << "order     " << g.order << "\n";
    for (const auto& gen : g.generators) {
      out << "generator";
      for (const auto& comp : gen.components) out << " [" << join(comp.values()) << "]";
      out << "\n";
    }
  }
  require(generators_ok, "automorphism generators are diagram isomorphisms");
  require(closure == g.order, "automorphism group order equals the closure of its generators");
}

void solve_cmd(const RunConfig& c, std::ostream& out) {
  check_size(c.x, "|X|");
  check_size(c.y, "|Y|");
  const auto sols = solve_coalgebra_morphisms(artin_comonoid(FinSet(c.x)), artin_comonoid(FinSet(c.y)));
  const McffeReport r = verify_mcffe(FinSet(c.x), FinSet(c.y));
  if (c.format == Format::json) {
    json j{{"command", "solve-comonoid"}, {"x", c.x},           {"y", c.y}, {"count", sols.size()},
           {"expected", r.expected_count}, {"pass", r.pass()}};
    if (c.show_all) {
      j["morphisms"] = json::array();
      for (const auto& m : sols) j["morphisms"].push_back(json_io::to_json(m));
    }
    out << j.dump(2) << "\n";
  } else {
    out << "solutions " << sols.size() << "\n";
    if (c.show_all)
      for (const auto& m : sols) out << matrix_rows(m.matrix) << "\n";
  }
  require(r.pass(), "coalgebra morphisms are exactly the graphs of set maps");
}

FiniteGroup load_group(const std::string& name) {
  if (name.find('/') != std::string::npos || name.find(".json") != std::string::npos)
    return json_io::group_from_json(read_json_file(name));
  return json_io::group_from_json(read_json_file(data_dir() + "/groups/" + name + ".json"));
}

void galois_cmd(const RunConfig& c, std::ostream& out) {
  check_size(c.max_gset, "G-set size");
  const FiniteGroup g = load_group(c.group);
  struct Row {
    std::size_t x, y, pairs = 0, fixed = 0, equivariant = 0;
    bool match = true;
  };
  std::vector<Row> rows;
  bool all = true;
  for (std::size_t nx = 1; nx <= c.max_gset; ++nx) {
    const auto xs = all_gsets(g, nx);
    for (std::size_t ny = 1; ny <= c.max_gset; ++ny) {
      const auto ys = all_gsets(g, ny);
      Row row{nx, ny};
      for (const auto& x : xs)
        for (const auto& y : ys) {
          ++row.pairs;
          std::set<std::vector<Rational>> fixed, graphs;
          for (const auto& m : fixed_coalgebra_morphisms(x, y)) fixed.insert(m.matrix.entries());
          for (const auto& f : equivariant_set_maps(x, y)) graphs.insert(graph_matrix(f).entries());
          row.fixed += fixed.size();
          row.equivariant += graphs.size();
          row.match = row.match && fixed == graphs;
        }
      all = all && row.match;
      rows.push_back(row);
    }
  }
  if (c.format == Format::json) {
    json jr = json::array();
    for (const auto& r : rows)
      jr.push_back({{"x", r.x}, {"y", r.y}, {"gset_pairs", r.pairs}, {"fixed", r.fixed},
                    {"equivariant", r.equivariant}, {"match", r.match}});
    out << json{{"command", "galois-fixed"}, {"group", json_io::to_json(g)}, {"max_size", c.max_gset},
                {"rows", jr}, {"pass", all}}
               .dump(2)
        << "\n";
  } else {
    out << "group order " << g.order() << "\n";
    out << "|X|\t|Y|\tpairs\tfixed\tequivariant\tmatch\n";
    for (const auto& r : rows)
      out << r.x << "\t" << r.y << "\t" << r.pairs << "\t" << r.fixed << "\t" << r.equivariant << "\t"
          << yes_no(r.match) << "\n";
  }
  require(all, "fixed coalgebra morphisms are the graphs of equivariant maps");
}

void monad_cmd(const RunConfig& c, std::ostream& out) {
  require(c.bounds.size() == c.k + 1, "bounds: need k+1 bounds");
  for (auto b : c.bounds) check_size(b, "bound");
  const MonadReport r = verify_m_identity(c.k, c.bounds);
  if (c.format == Format::json) {
    json rows = json::array();
    for (const auto& row : r.rows)
      rows.push_back({{"class", to_string(row.assembled)}, {"aut_order", row.aut_direct},
                      {"aut_brute", row.aut_brute}, {"aut_wreath", row.aut_wreath},
                      {"preimage", to_string(row.preimage)}});
    out << json{{"command", "verify-monad"}, {"k", c.k}, {"bounds", c.bounds}, {"census", r.census_size},
                {"rows", rows}, {"every_class_hit", r.every_class_hit}, {"injective", r.injective},
                {"images_match_census", r.images_match_census}, {"aut_orders_agree", r.aut_orders_agree},
                {"pass", r.pass()}}
               .dump(2)
        << "\n";
  } else {
    out << "class\t|Aut|\tpreimage\n";
    for (const auto& row : r.rows)
      out << to_string(row.assembled) << "\t" << row.aut_direct << "\t" << to_string(row.preimage) << "\n";
    out << "census " << r.census_size << ", images " << r.rows.size() << "\n";
  }
  require(r.injective, "assembly is injective on multisets");
  require(r.every_class_hit && r.images_match_census, "assembly hits every census class exactly once");
  require(r.aut_orders_agree, "automorphism orders agree (direct, brute force, wreath)");
}

void hocolim_cmd(const RunConfig& c, std::ostream& out) {
  require(!c.diagram.empty(), "hocolim: --diagram is required");
  const json input = read_json_file(c.diagram);
  const CubeDiagram d = json_io::cube_input_from_json(input);
  const ChainComplex total = punctured_cube_hocolim(d);
  const auto h = homology_dims(total);

  std::map<int, std::size_t> cone_h;
  if (c.ks) {
    require(input.contains("cover"), "hocolim --ks needs a cover input");
    cone_h = homology_dims(cover_ks_hocolim(json_io::cover_from_json(input).cover));
  }
  auto line = [](const std::map<int, std::size_t>& hs) {
    std::ostringstream os;
    bool first = true;
    for (const auto& [n, v] : hs) {
      os << (first ? "" : " ") << "H" << n << "=" << v;
      first = false;
    }
    return os.str();
  };
  if (c.format == Format::json) {
    json jh = json::object(), jc = json::object();
    for (const auto& [n, v] : h) jh[std::to_string(n)] = v;
    for (const auto& [n, v] : cone_h) jc[std::to_string(n)] = v;
    json j{{"command", "hocolim"}, {"homology", jh}, {"euler_characteristic", euler_characteristic(total)},
           {"total", json_io::to_json(total)}, {"pass", true}};
    if (c.ks) j["ks_homology"] = jc;
    out << j.dump(2) << "\n";
  } else {
    out << line(h) << "\n";
    out << "chi=" << euler_characteristic(total) << "\n";
    if (c.ks) out << "ks " << line(cone_h) << "\n";
  }
}

void kappa_cmd(const RunConfig& c, std::ostream& out) {
  KappaDiagram k = build_kappa(c.components, c.ambient, c.dim);
  if (!c.cross.empty()) k = cross_with(k, c.cross);
  if (c.format == Format::json)
    out << json{{"command", "kappa"}, {"diagram", json_io::to_json(k)}, {"pass", true}}.dump(2) << "\n";
  else
    out << to_string(k);
}

void mcffe_cmd(const RunConfig& c, std::ostream& out) {
  check_size(c.x, "|X|");
  check_size(c.y, "|Y|");
  const McffeReport r = verify_mcffe(FinSet(c.x), FinSet(c.y));
  if (c.format == Format::json) {
    out << json{{"command", "verify-mcffe"}, {"x", c.x},
                {"y", c.y},                  {"solver_count", r.solver_count},
                {"expected_count", r.expected_count}, {"all_pass_check", r.all_pass_check},
                {"graph_bijection", r.graph_bijection}, {"pass", r.pass()}}
               .dump(2)
        << "\n";
  } else {
    out << r.solver_count << " = " << r.expected_count << ", " << (r.pass() ? "PASS" : "FAIL") << "\n";
  }
  require(r.pass(), "coalgebra morphisms biject with set maps");
}

void mdffe_cmd(const RunConfig& c, std::ostream& out) {
  check_size(c.x, "|X|");
  check_size(c.y, "|Y|");
  check_size(c.bound, "bound");
  const MdffeReport r = verify_mdffe(FinSet(c.x), FinSet(c.y), c.bound);
  if (c.format == Format::json) {
    out << json{{"command", "verify-mdffe"},
                {"x", c.x},
                {"y", c.y},
                {"bound", c.bound},
                {"equalizer", r.equalizer_count},
                {"algebra", r.algebra_count},
                {"comonoid_transposed", r.comonoid_count},
                {"set_maps", r.setmap_count},
                {"sets_equal", r.sets_equal},
                {"stable_at_next_bound", r.stable_at_next_bound},
                {"pass", r.pass()}}
               .dump(2)
        << "\n";
  } else {
    out << "|X|=" << c.x << " |Y|=" << c.y << " bound=" << c.bound << "\n";
    out << "equalizer\t" << r.equalizer_count << "\n";
    out << "algebra\t" << r.algebra_count << "\n";
    out << "comonoid^T\t" << r.comonoid_count << "\n";
    out << "set maps\t" << r.setmap_count << "\n";
    out << "sets equal\t" << yes_no(r.sets_equal) << "\n";
    out << "bound " << c.bound + 1 << " stable\t" << yes_no(r.stable_at_next_bound) << "\n";
    out << (r.pass() ? "PASS" : "FAIL") << "\n";
  }
  require(r.pass(), "equalizer = algebra morphisms = transposed comonoid morphisms = set maps");
}

}  // namespace

std::size_t safety_bound() {
  if (const char* env = std::getenv("MOTIVIC_KIT_MAX_SIZE")) {
    try {
      std::size_t used = 0;
      const unsigned long v = std::stoul(env, &used);
      if (used == std::string(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
  }
  return default_safety_bound;
}

std::string data_dir() {
  if (const char* env = std::getenv("MOTIVIC_KIT_DATA_DIR")) return env;
  return MOTIVIC_KIT_DATA_DIR;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream buffer;
  int status = 0;
  try {
    if (config.command == "enumerate-diagrams") enumerate_cmd(config, buffer);
    else if (config.command == "aut") aut_cmd(config, buffer);
    else if (config.command == "solve-comonoid") solve_cmd(config, buffer);
    else if (config.command == "galois-fixed") galois_cmd(config, buffer);
    else if (config.command == "verify-monad") monad_cmd(config, buffer);
    else if (config.command == "hocolim") hocolim_cmd(config, buffer);
    else if (config.command == "kappa") kappa_cmd(config, buffer);
    else if (config.command == "verify-mcffe") mcffe_cmd(config, buffer);
    else if (config.command == "verify-mdffe") mdffe_cmd(config, buffer);
    else throw InvariantError("unknown command: " + config.command);
  } catch (const AssertionFailure& f) {
    err << "FAIL: " << f.invariant << "\n";
    status = 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (config.output.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(config.output);
    if (!file) {
      err << "error: cannot write " << config.output << "\n";
      return 2;
    }
    file << buffer.str();
  }
  return status;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Artin motives and finite-set diagrams", "motivic-kit"};
  app.require_subcommand(1);
  RunConfig c;
  std::string format = "table";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "table or json")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--output", c.output, "write the report to a file");
  };

  auto* en = app.add_subcommand("enumerate-diagrams", "isomorphism classes of bounded diagrams");
  en->add_option("--k", c.k, "number of sets")->required();
  en->add_option("--bounds", c.bounds, "size bound per level")->delimiter(',')->required();
  en->add_flag("--allow-empty", c.allow_empty, "allow empty sets");
  common(en);

  auto* aut = app.add_subcommand("aut", "automorphism group of a diagram");
  aut->add_option("--diagram", c.diagram, "FinDiagram JSON file");
  aut->add_option("--sizes", c.sizes, "set sizes")->delimiter(',');
  aut->add_option("--values", c.values, "map values, concatenated")->delimiter(',');
  common(aut);

  auto* solve = app.add_subcommand("solve-comonoid", "coalgebra morphisms C_*X -> C_*Y");
  solve->add_option("--x", c.x)->required();
  solve->add_option("--y", c.y)->required();
  solve->add_flag("--all", c.show_all, "print every matrix");
  common(solve);

  auto* gal = app.add_subcommand("galois-fixed", "fixed coalgebra morphisms against equivariant maps");
  gal->add_option("--group", c.group, "fixture name (C2 C3 C4 V4 C5 C6 S3) or table file");
  gal->add_option("--max-size", c.max_gset, "largest G-set");
  common(gal);

  auto* mon = app.add_subcommand("verify-monad", "multiset assembly against the census one level up");
  mon->add_option("--k", c.k)->required();
  mon->add_option("--bounds", c.bounds, "k+1 bounds")->delimiter(',')->required();
  common(mon);

  auto* hoc = app.add_subcommand("hocolim", "homology of a punctured cube's homotopy colimit");
  hoc->add_option("--diagram", c.diagram, "CubeDiagram or cover JSON file")->required();
  hoc->add_flag("--ks", c.ks, "also the cone into the cover's point set");
  common(hoc);

  auto* kap = app.add_subcommand("kappa", "labelled hypercube compactification diagram");
  kap->add_option("--components", c.components, "component labels")->delimiter(',')->required();
  kap->add_option("--ambient", c.ambient);
  kap->add_option("--dim", c.dim);
  kap->add_option("--cross", c.cross, "tensor with C_*(label)");
  common(kap);

  auto* mc = app.add_subcommand("verify-mcffe", "coalgebra morphisms against set maps");
  mc->add_option("--x", c.x)->required();
  mc->add_option("--y", c.y)->required();
  common(mc);

  auto* md = app.add_subcommand("verify-mdffe", "cosimplicial equalizer four-way comparison");
  md->add_option("--x", c.x)->required();
  md->add_option("--y", c.y)->required();
  md->add_option("--bound", c.bound);
  common(md);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  c.command = app.get_subcommands().front()->get_name();
  c.format = format == "json" ? Format::json : Format::table;
  return run(c, out, err);
}

}  // namespace motivic::cli
