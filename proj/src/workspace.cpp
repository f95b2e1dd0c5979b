#include "mqd/workspace.hpp"

#include <json.hpp>

#include "mqd/caps.hpp"

namespace mqd {

using json = nlohmann::ordered_json;

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) ok = true;
    if (!ok) throw input_error("unknown key \"" + it.key() + "\" in " + where);
  }
}

Matrix parse_matrix(const PrimeField& f, int rows, int cols, const json& j,
                    const std::string& where) {
  if (!j.is_array()) throw input_error(where + ": matrix must be an array of rows");
  if (static_cast<int>(j.size()) != rows)
    throw input_error(where + ": expected " + std::to_string(rows) + " rows, got " +
                      std::to_string(j.size()));
  Matrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw input_error(where + ": row " + std::to_string(r) + " must have " +
                        std::to_string(cols) + " entries");
    for (int c = 0; c < cols; ++c) {
      if (!row[c].is_number_integer())
        throw input_error(where + ": entries must be integers");
      m.set(r, c, f.reduce(row[c].get<int64_t>()));
    }
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c));
    rows.push_back(row);
  }
  return rows;
}

Module parse_module(const std::shared_ptr<const PathAlgebra>& alg, const json& j,
                    const std::string& name) {
  reject_unknown(j, {"dims", "maps", "provenance"}, "module " + name);
  const Quiver& q = alg->quiver();
  std::vector<int> dims(q.vertex_count(), 0);
  if (!j.contains("dims")) throw input_error("module " + name + " has no dims");
  for (auto it = j["dims"].begin(); it != j["dims"].end(); ++it) {
    int v = q.vertex_index(it.key());
    if (!it.value().is_number_integer() || it.value().get<int64_t>() < 0)
      throw input_error("module " + name + ": dims must be nonnegative integers");
    dims[v] = it.value().get<int>();
  }
  std::vector<Matrix> maps;
  const json maps_obj = j.contains("maps") ? j["maps"] : json::object();
  for (auto it = maps_obj.begin(); it != maps_obj.end(); ++it) q.arrow_index(it.key());
  for (int a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    int rows = dims[ar.target], cols = dims[ar.source];
    if (maps_obj.contains(ar.name)) {
      maps.push_back(parse_matrix(alg->field(), rows, cols, maps_obj[ar.name],
                                  "module " + name + ", arrow " + ar.name));
    } else if (rows == 0 || cols == 0) {
      maps.push_back(Matrix(alg->field(), rows, cols));
    } else {
      throw input_error("module " + name + " is missing the map for arrow " + ar.name);
    }
  }
  return Module(alg, dims, maps);
}

} // namespace

const Module& Workspace::module_named(const std::string& name) const {
  auto it = modules.find(name);
  if (it == modules.end()) throw input_error("unknown module: " + name);
  return it->second;
}

Module Workspace::module_sum(const std::string& names) const {
  std::vector<Module> parts;
  size_t start = 0;
  while (start <= names.size()) {
    size_t plus = names.find('+', start);
    std::string part = names.substr(start, plus == std::string::npos ? plus : plus - start);
    if (part.empty()) throw input_error("empty module name in \"" + names + "\"");
    parts.push_back(module_named(part));
    if (plus == std::string::npos) break;
    start = plus + 1;
  }
  if (parts.empty()) throw input_error("no module names given");
  return parts.size() == 1 ? parts[0] : direct_sum(parts).sum;
}

Workspace load_workspace(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw input_error(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object()) throw input_error("workspace must be a JSON object");
  // "universe" carries dump metadata (dim bound, completeness) and is
  // accepted so that universe dumps re-parse as ordinary workspaces
  reject_unknown(j, {"field", "quiver", "relations", "options", "modules", "universe"},
                 "workspace");
  if (!j.contains("field") || !j["field"].is_object() || !j["field"].contains("p"))
    throw input_error("workspace needs field.p");
  reject_unknown(j["field"], {"p"}, "field");
  PrimeField f(j["field"]["p"].get<uint32_t>());

  if (!j.contains("quiver")) throw input_error("workspace needs a quiver");
  const json& qj = j["quiver"];
  reject_unknown(qj, {"vertices", "arrows"}, "quiver");
  std::vector<std::string> vertices;
  for (const json& v : qj.value("vertices", json::array())) vertices.push_back(v.get<std::string>());
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const json& a : qj.value("arrows", json::array())) {
    reject_unknown(a, {"name", "source", "target"}, "arrow");
    arrows.emplace_back(a.at("name").get<std::string>(), a.at("source").get<std::string>(),
                        a.at("target").get<std::string>());
  }
  Quiver quiver(vertices, arrows);

  std::vector<Relation> rels;
  for (const json& rj : j.value("relations", json::array())) {
    Relation r;
    for (const json& tj : rj) {
      reject_unknown(tj, {"coeff", "path"}, "relation term");
      RelationTerm t;
      t.coeff = tj.at("coeff").get<int64_t>();
      for (const json& s : tj.at("path")) t.path.push_back(s.get<std::string>());
      r.push_back(std::move(t));
    }
    rels.push_back(std::move(r));
  }

  WorkspaceOptions opts;
  if (!j.contains("options") || !j["options"].contains("nilpotency_cap"))
    throw input_error("workspace needs options.nilpotency_cap");
  reject_unknown(j["options"], {"nilpotency_cap", "universe_dim", "max_enum"}, "options");
  opts.nilpotency_cap = j["options"]["nilpotency_cap"].get<int>();
  opts.universe_dim = j["options"].value("universe_dim", 8);
  opts.max_enum = j["options"].value("max_enum", uint64_t{0});
  if (opts.max_enum) set_enum_cap(opts.max_enum);

  Workspace ws;
  ws.algebra = PathAlgebra::build(f, quiver, rels, opts.nilpotency_cap);
  ws.options = opts;

  const json mods = j.value("modules", json::object());
  for (auto it = mods.begin(); it != mods.end(); ++it) {
    Module m = parse_module(ws.algebra, it.value(), it.key());
    ValidationReport rep = validate(m);
    if (!rep.ok)
      throw input_error("module " + it.key() + " violates the relations: " + rep.violations[0]);
    ws.modules.emplace(it.key(), std::move(m));
  }
  return ws;
}

namespace {

json module_to_json(const Module& m) {
  const Quiver& q = m.algebra()->quiver();
  json dims = json::object();
  for (int v = 0; v < q.vertex_count(); ++v) dims[q.vertex_name(v)] = m.dim(v);
  json maps = json::object();
  for (int a = 0; a < q.arrow_count(); ++a)
    if (m.map(a).rows() > 0 && m.map(a).cols() > 0) maps[q.arrow(a).name] = matrix_to_json(m.map(a));
  return json{{"dims", dims}, {"maps", maps}};
}

json workspace_header(const Workspace& ws) {
  const PathAlgebra& alg = *ws.algebra;
  const Quiver& q = alg.quiver();
  json vertices = json::array();
  for (const std::string& v : q.vertices()) vertices.push_back(v);
  json arrows = json::array();
  for (const Arrow& a : q.arrows())
    arrows.push_back(json{{"name", a.name},
                          {"source", q.vertex_name(a.source)},
                          {"target", q.vertex_name(a.target)}});
  json rels = json::array();
  for (const Relation& r : alg.relations()) {
    json rj = json::array();
    for (const RelationTerm& t : r) {
      json paths = json::array();
      for (const std::string& s : t.path) paths.push_back(s);
      rj.push_back(json{{"coeff", t.coeff}, {"path", paths}});
    }
    rels.push_back(rj);
  }
  json opts{{"nilpotency_cap", ws.options.nilpotency_cap},
            {"universe_dim", ws.options.universe_dim}};
  if (ws.options.max_enum) opts["max_enum"] = ws.options.max_enum;
  return json{{"field", json{{"p", alg.field().p()}}},
              {"quiver", json{{"vertices", vertices}, {"arrows", arrows}}},
              {"relations", rels},
              {"options", opts}};
}

} // namespace

std::string workspace_to_json(const Workspace& ws) {
  json out = workspace_header(ws);
  json mods = json::object();
  for (const auto& [name, m] : ws.modules) mods[name] = module_to_json(m);
  out["modules"] = mods;
  return out.dump(2) + "\n";
}

std::string universe_to_json(const Workspace& ws, const Universe& u) {
  json out = workspace_header(ws);
  out["options"]["universe_dim"] = u.dim_bound;
  out["universe"] = json{{"dim_bound", u.dim_bound}, {"complete", u.complete}};
  json mods = json::object();
  for (size_t i = 0; i < u.modules.size(); ++i) {
    json mj = module_to_json(u.modules[i]);
    mj["provenance"] = u.provenance[i];
    mods["U" + std::to_string(i)] = mj;
  }
  out["modules"] = mods;
  return out.dump(2) + "\n";
}

std::string subspace_label(const Subspace& s) {
  if (s.dim() == 0) return "0";
  std::string out;
  for (int r = 0; r < s.dim(); ++r) {
    if (r) out += ";";
    for (int c = 0; c < s.ambient(); ++c) {
      if (c) out += ",";
      out += std::to_string(s.basis().at(r, c));
    }
  }
  return out;
}

std::string lattice_to_json(const SubmoduleLattice& lat) {
  json elems = json::array();
  for (const Subspace& s : lat.elements) {
    json basis = json::array();
    for (int r = 0; r < s.dim(); ++r) {
      json row = json::array();
      for (int c = 0; c < s.ambient(); ++c) row.push_back(s.basis().at(r, c));
      basis.push_back(row);
    }
    elems.push_back(json{{"dim", s.dim()}, {"basis", basis}});
  }
  json hasse = json::array();
  for (auto [a, b] : lat.hasse) hasse.push_back(json::array({a, b}));
  return json{{"ambient", lat.ambient}, {"elements", elems}, {"hasse", hasse}}.dump(2) + "\n";
}

std::string lattice_to_dot(const SubmoduleLattice& lat) {
  std::string out = "digraph sub {\n  rankdir=BT;\n";
  for (const Subspace& s : lat.elements) out += "  \"" + subspace_label(s) + "\";\n";
  for (auto [a, b] : lat.hasse)
    out += "  \"" + subspace_label(lat.elements[a]) + "\" -> \"" +
           subspace_label(lat.elements[b]) + "\";\n";
  out += "}\n";
  return out;
}

std::optional<std::string> lattice_reference_note(const Module& m, LatticeMode mode,
                                                  const SubmoduleLattice& lat) {
  if (mode != LatticeMode::Lambda) return std::nullopt;
  const PathAlgebra& alg = *m.algebra();
  if (alg.field().p() != 2 || alg.cap() != 2) return std::nullopt;
  if (alg.quiver().vertex_count() != 1 || alg.quiver().arrow_count() != 1) return std::nullopt;
  if (m.total_dim() != 3 || lat.elements.size() != 8) return std::nullopt;
  // the diagonal embedded copy of the regular module
  Subspace diag = Subspace::span_rows(alg.field(), 3, {{1, 0, 1}, {0, 1, 0}});
  if (lat.index_of(diag) < 0) return std::nullopt;
  return "advisory: 8 stable subspaces enumerated; a commonly drawn 7-node diagram for "
         "this module omits the diagonal embedded copy 1,0,1;0,1,0";
}

Morphism parse_morphism(const Workspace& ws, const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw input_error(std::string("morphism JSON parse error: ") + e.what());
  }
  reject_unknown(j, {"source", "target", "blocks"}, "morphism");
  const Module& src = ws.module_named(j.at("source").get<std::string>());
  const Module& tgt = ws.module_named(j.at("target").get<std::string>());
  const Quiver& q = ws.algebra->quiver();
  const json blocks = j.contains("blocks") ? j["blocks"] : json::object();
  for (auto it = blocks.begin(); it != blocks.end(); ++it) q.vertex_index(it.key());
  std::vector<Matrix> bl;
  for (int v = 0; v < q.vertex_count(); ++v) {
    int rows = tgt.dim(v), cols = src.dim(v);
    if (blocks.contains(q.vertex_name(v)))
      bl.push_back(parse_matrix(ws.algebra->field(), rows, cols, blocks[q.vertex_name(v)],
                                "morphism block at " + q.vertex_name(v)));
    else if (rows == 0 || cols == 0)
      bl.push_back(Matrix(ws.algebra->field(), rows, cols));
    else
      throw input_error("morphism is missing the block at vertex " + q.vertex_name(v));
  }
  try {
    return Morphism(src, tgt, bl);
  } catch (const verify_error& e) {
    throw input_error(std::string("not a module morphism: ") + e.what());
  }
}

} // namespace mqd
