#pragma once

#include <map>
#include <memory>
#include <string>

#include "mqd/lattice.hpp"
#include "mqd/module.hpp"

namespace mqd {

struct WorkspaceOptions {
  int nilpotency_cap = 0;  // required in the file
  int universe_dim = 8;
  uint64_t max_enum = 0;   // 0 = library default; MQD_MAX_ENUM still wins
};

// Parsed workspace file: field, quiver+relations, named modules, caps.
// Parsing is strict: unknown keys anywhere are rejected, and every module
// must validate against the algebra relations.
struct Workspace {
  std::shared_ptr<const PathAlgebra> algebra;
  std::map<std::string, Module> modules;
  WorkspaceOptions options;

  const Module& module_named(const std::string& name) const;
  // "A+B+C" builds the direct sum of the named modules
  Module module_sum(const std::string& names) const;
};

Workspace load_workspace(const std::string& json_text);

std::string workspace_to_json(const Workspace& ws);

// universe as a complete re-parseable workspace document
std::string universe_to_json(const Workspace& ws, const Universe& u);

std::string lattice_to_json(const SubmoduleLattice& lat);

// bit-exact DOT contract: digraph sub { rankdir=BT; nodes; covered -> covering; }
// with labels the semicolon-joined RREF rows and node order (dim, basis lex)
std::string lattice_to_dot(const SubmoduleLattice& lat);

std::string subspace_label(const Subspace& s);

// Reference note for a classical example: the 3-dimensional module over
// the dual numbers whose subobject diagram is often drawn with 7 nodes,
// while enumeration finds 8 (the embedded diagonal copy is the extra
// element). Returns the advisory text when the configuration matches.
std::optional<std::string> lattice_reference_note(const Module& m, LatticeMode mode,
                                                  const SubmoduleLattice& lat);

// {"source": name, "target": name, "blocks": {vertex: matrix}}
Morphism parse_morphism(const Workspace& ws, const std::string& json_text);

} // namespace mqd
