// Command-line front end. Links only the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "mqd.h"

namespace {

int load_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "input error: cannot read " << path << "\n";
    return MQD_INPUT_ERROR;
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return MQD_OK;
}

struct WorkspaceGuard {
  mqd_workspace* ws = nullptr;
  ~WorkspaceGuard() { mqd_workspace_close(ws); }
};

int open_workspace(const std::string& path, WorkspaceGuard& guard) {
  std::string text;
  if (int rc = load_file(path, text)) return rc;
  char* err = nullptr;
  guard.ws = mqd_workspace_open(text.c_str(), &err);
  if (!guard.ws) {
    std::string msg = err ? err : "input error: unknown";
    std::cerr << msg << "\n";
    mqd_string_free(err);
    return msg.rfind("cap exceeded", 0) == 0 ? MQD_CAP_EXCEEDED : MQD_INPUT_ERROR;
  }
  return MQD_OK;
}

int finish(int rc, char* out) {
  if (out) {
    std::fputs(out, stdout);
    mqd_string_free(out);
  }
  return rc;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"morphisms determined by modules over quiver algebras"};
  app.require_subcommand(1);

  std::string file, m, n, c, y, z, mode, hgens, morphism;
  int dim = 0, universe_dim = 0;
  bool radical = false, dot = false, json = false;

  auto* cmd_check = app.add_subcommand("check", "validate a workspace file");
  cmd_check->add_option("file", file)->required();

  auto* cmd_hom = app.add_subcommand("hom", "basis of Hom(M, N)");
  cmd_hom->add_option("file", file)->required();
  cmd_hom->add_option("M", m)->required();
  cmd_hom->add_option("N", n)->required();

  auto* cmd_end = app.add_subcommand("end", "endomorphism ring of M");
  cmd_end->add_option("file", file)->required();
  cmd_end->add_option("M", m)->required();
  cmd_end->add_flag("--radical", radical, "list a basis of the Jacobson radical");

  auto* cmd_universe = app.add_subcommand("universe", "indecomposables up to a dimension bound");
  cmd_universe->add_option("file", file)->required();
  cmd_universe->add_option("--dim", dim, "total dimension bound")->required();

  auto* cmd_lattice = app.add_subcommand("lattice", "submodule lattice with covering relations");
  cmd_lattice->add_option("file", file)->required();
  auto* lat_module = cmd_lattice->add_option("--module", m, "module name");
  cmd_lattice->add_option("--mode", mode, "lambda | end-stable")->needs(lat_module);
  std::vector<std::string> hom_pair;
  cmd_lattice->add_option("--hom", hom_pair, "C Y: Gamma-submodules of Hom(C,Y)")
      ->expected(2)
      ->excludes(lat_module);
  cmd_lattice->add_flag("--dot", dot, "emit DOT instead of JSON");
  cmd_lattice->add_flag("--json", json, "emit JSON (default)");

  auto* cmd_det = app.add_subcommand("determined", "right minimal right C-determined morphism");
  cmd_det->set_help_flag("--help", "print help"); // frees -h for the H option
  cmd_det->add_option("file", file)->required();
  cmd_det->add_option("--c", c, "determining module(s), names joined with +")->required();
  cmd_det->add_option("--y", y, "target module")->required();
  cmd_det->add_option("--h", hgens,
                      "H generators: semicolon-separated coordinate rows (empty = 0)");
  cmd_det->add_option("--universe-dim", universe_dim, "universe dimension bound");

  auto* cmd_ass = app.add_subcommand("almost-split", "almost split sequence ending at Z");
  cmd_ass->add_option("file", file)->required();
  cmd_ass->add_option("Z", z)->required();
  cmd_ass->add_option("--universe-dim", universe_dim, "universe dimension bound");

  auto* cmd_bij = app.add_subcommand("check-bijection", "determined-morphism round trip sweep");
  cmd_bij->add_option("file", file)->required();
  cmd_bij->add_option("--c", c)->required();
  cmd_bij->add_option("--y", y)->required();
  cmd_bij->add_option("--universe-dim", universe_dim, "universe dimension bound");

  auto* cmd_min = app.add_subcommand("minimal", "minimal presentation of a morphism");
  cmd_min->add_option("file", file)->required();
  cmd_min->add_option("--morphism", morphism, "JSON: {source, target, blocks}")->required();

  int bn = 0, bp = 0;
  uint32_t bq = 2;
  std::vector<std::string> polys;
  std::string bcmd;
  auto* cmd_bei = app.add_subcommand("beilinson", "projective varieties as quiver Grassmannians");
  cmd_bei->add_option("--n", bn, "number of variables minus one")->required();
  cmd_bei->add_option("--p", bp, "degree parameter")->required();
  cmd_bei->add_option("--q", bq, "prime field size")->required();
  cmd_bei->add_option("--poly", polys, "homogeneous polynomial, e.g. \"x0*x2 - x1^2\"");
  cmd_bei->add_option("command", bcmd, "grassmann | variety | compare")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : MQD_INPUT_ERROR;
  }

  char* out = nullptr;

  if (cmd_bei->parsed()) {
    std::vector<const char*> ptrs;
    for (const std::string& s : polys) ptrs.push_back(s.c_str());
    int rc = mqd_beilinson(bn, bp, bq, ptrs.data(), static_cast<int>(ptrs.size()), bcmd.c_str(),
                           &out);
    return finish(rc, out);
  }

  WorkspaceGuard guard;
  if (int rc = open_workspace(file, guard)) return rc;

  int rc = MQD_INPUT_ERROR;
  if (cmd_check->parsed()) {
    rc = mqd_check(guard.ws, &out);
  } else if (cmd_hom->parsed()) {
    rc = mqd_hom(guard.ws, m.c_str(), n.c_str(), &out);
  } else if (cmd_end->parsed()) {
    rc = mqd_end(guard.ws, m.c_str(), radical ? 1 : 0, &out);
  } else if (cmd_universe->parsed()) {
    rc = mqd_universe(guard.ws, dim, &out);
  } else if (cmd_lattice->parsed()) {
    if (!hom_pair.empty()) {
      rc = mqd_lattice_hom(guard.ws, hom_pair[0].c_str(), hom_pair[1].c_str(), dot ? 1 : 0, &out);
    } else if (m.empty() || mode.empty()) {
      std::cerr << "input error: lattice needs --module with --mode, or --hom C Y\n";
      return MQD_INPUT_ERROR;
    } else {
      rc = mqd_lattice_module(guard.ws, m.c_str(), mode.c_str(), dot ? 1 : 0, &out);
    }
  } else if (cmd_det->parsed()) {
    rc = mqd_determined(guard.ws, c.c_str(), y.c_str(), hgens.c_str(), universe_dim, &out);
  } else if (cmd_ass->parsed()) {
    rc = mqd_almost_split(guard.ws, z.c_str(), universe_dim, &out);
  } else if (cmd_bij->parsed()) {
    rc = mqd_check_bijection(guard.ws, c.c_str(), y.c_str(), universe_dim, &out);
  } else if (cmd_min->parsed()) {
    rc = mqd_minimal(guard.ws, morphism.c_str(), &out);
  } else {
    std::cerr << "input error: no subcommand\n";
    return MQD_INPUT_ERROR;
  }
  return finish(rc, out);
}
