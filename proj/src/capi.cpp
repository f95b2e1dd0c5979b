#include "mqd.h"

#include <cstring>
#include <sstream>
#include <string>

#include "mqd/almost_split.hpp"
#include "mqd/determined.hpp"
#include "mqd/grassmannian.hpp"
#include "mqd/minimal.hpp"
#include "mqd/workspace.hpp"

using namespace mqd;

struct mqd_workspace {
  Workspace ws;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void put(char** out, const std::string& s) {
  if (out) *out = dup_string(s);
}

template <class Fn>
int run(char** out, Fn&& fn) {
  try {
    return fn();
  } catch (const input_error& e) {
    put(out, std::string("input error: ") + e.what() + "\n");
    return MQD_INPUT_ERROR;
  } catch (const cap_exceeded& e) {
    put(out, std::string("cap exceeded: ") + e.what() + "\n");
    return MQD_CAP_EXCEEDED;
  } catch (const verify_error& e) {
    put(out, std::string("verification error: ") + e.what() + "\n");
    return MQD_VERIFY_FAIL;
  } catch (const std::exception& e) {
    put(out, std::string("error: ") + e.what() + "\n");
    return MQD_INPUT_ERROR;
  }
}

std::string matrix_text(const Matrix& m) {
  std::string s = "[";
  for (int r = 0; r < m.rows(); ++r) {
    if (r) s += ",";
    s += "[";
    for (int c = 0; c < m.cols(); ++c) {
      if (c) s += ",";
      s += std::to_string(m.at(r, c));
    }
    s += "]";
  }
  return s + "]";
}

std::string morphism_text(const Morphism& f, const std::string& indent) {
  const Quiver& q = f.source().algebra()->quiver();
  std::ostringstream os;
  for (int v = 0; v < q.vertex_count(); ++v) {
    os << indent << "block " << q.vertex_name(v) << " (" << f.target().dim(v) << "x"
       << f.source().dim(v) << "): " << matrix_text(f.block(v)) << "\n";
  }
  return os.str();
}

std::string dims_text(const Module& m) {
  const Quiver& q = m.algebra()->quiver();
  std::string s;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (v) s += " ";
    s += q.vertex_name(v) + ":" + std::to_string(m.dim(v));
  }
  return s + " (total " + std::to_string(m.total_dim()) + ")";
}

Subspace parse_generators(const Workspace& ws, const GammaModule& gm, const char* text) {
  const PrimeField& f = ws.algebra->field();
  std::vector<Vec> rows;
  std::string s = text ? text : "";
  size_t start = 0;
  while (start < s.size()) {
    size_t semi = s.find(';', start);
    std::string chunk = s.substr(start, semi == std::string::npos ? semi : semi - start);
    if (!chunk.empty()) {
      Vec row;
      size_t p0 = 0;
      while (p0 <= chunk.size()) {
        size_t comma = chunk.find(',', p0);
        std::string entry = chunk.substr(p0, comma == std::string::npos ? comma : comma - p0);
        try {
          row.push_back(f.reduce(std::stoll(entry)));
        } catch (const std::exception&) {
          throw input_error("bad H generator entry: \"" + entry + "\"");
        }
        if (comma == std::string::npos) break;
        p0 = comma + 1;
      }
      if (static_cast<int>(row.size()) != gm.dim())
        throw input_error("H generator has " + std::to_string(row.size()) +
                          " entries; Hom(C,Y) has dimension " + std::to_string(gm.dim()));
      rows.push_back(std::move(row));
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return Subspace::span_rows(f, gm.dim(), rows);
}

} // namespace

extern "C" {

const char* mqd_version(void) { return "1.0.0"; }

void mqd_string_free(char* s) { std::free(s); }

mqd_workspace* mqd_workspace_open(const char* json_text, char** error_out) {
  if (error_out) *error_out = nullptr;
  try {
    auto* h = new mqd_workspace{load_workspace(json_text ? json_text : "")};
    return h;
  } catch (const cap_exceeded& e) {
    if (error_out) *error_out = dup_string(std::string("cap exceeded: ") + e.what());
    return nullptr;
  } catch (const std::exception& e) {
    if (error_out) *error_out = dup_string(std::string("input error: ") + e.what());
    return nullptr;
  }
}

void mqd_workspace_close(mqd_workspace* ws) { delete ws; }

int mqd_check(mqd_workspace* h, char** out) {
  return run(out, [&]() {
    std::ostringstream os;
    const Workspace& ws = h->ws;
    os << "algebra: dim " << ws.algebra->dim() << " over GF(" << ws.algebra->field().p()
       << "), " << ws.algebra->quiver().vertex_count() << " vertices, "
       << ws.algebra->quiver().arrow_count() << " arrows, cap "
       << ws.algebra->cap() << "\n";
    bool ok = true;
    for (const auto& [name, m] : ws.modules) {
      ValidationReport rep = validate(m);
      os << "module " << name << ": dims " << dims_text(m) << " -> "
         << (rep.ok ? "ok" : rep.violations[0]) << "\n";
      ok &= rep.ok;
    }
    put(out, os.str());
    return ok ? MQD_OK : MQD_INPUT_ERROR;
  });
}

int mqd_hom(mqd_workspace* h, const char* m, const char* n, char** out) {
  return run(out, [&]() {
    const Module& x = h->ws.module_sum(m ? m : "");
    const Module& y = h->ws.module_sum(n ? n : "");
    HomSpace hs = hom_basis(x, y);
    std::ostringstream os;
    os << "hom(" << m << ", " << n << "): dim " << hs.dim() << "\n";
    for (int i = 0; i < hs.dim(); ++i) {
      os << "basis " << i << ":\n" << morphism_text(hs.basis[i], "  ");
    }
    put(out, os.str());
    return MQD_OK;
  });
}

int mqd_end(mqd_workspace* h, const char* m, int with_radical, char** out) {
  return run(out, [&]() {
    const Module& x = h->ws.module_sum(m ? m : "");
    EndRing er = end_ring(x);
    std::ostringstream os;
    os << "end(" << m << "): dim " << er.ring.dim() << "\n";
    os << "commutative: " << (er.ring.is_commutative() ? "yes" : "no") << "\n";
    Subspace rad = jacobson_radical(er.ring);
    os << "local: " << (is_local(er.ring) ? "yes" : "no") << "\n";
    os << "radical dim: " << rad.dim() << "\n";
    if (with_radical) {
      for (int i = 0; i < rad.dim(); ++i) {
        os << "radical basis " << i << ":\n"
           << morphism_text(er.hom.from_coordinates(rad.basis().row(i)), "  ");
      }
    }
    put(out, os.str());
    return MQD_OK;
  });
}

int mqd_universe(mqd_workspace* h, int dim_bound, char** out) {
  return run(out, [&]() {
    Universe u = build_universe(h->ws.algebra, dim_bound);
    put(out, universe_to_json(h->ws, u));
    return MQD_OK;
  });
}

int mqd_lattice_module(mqd_workspace* h, const char* module_name, const char* mode,
                       int emit_dot, char** out) {
  return run(out, [&]() {
    const Module& m = h->ws.module_named(module_name ? module_name : "");
    std::string ms = mode ? mode : "";
    LatticeMode lm;
    if (ms == "lambda") lm = LatticeMode::Lambda;
    else if (ms == "end-stable") lm = LatticeMode::EndStable;
    else throw input_error("mode must be lambda or end-stable, got \"" + ms + "\"");
    SubmoduleLattice lat = module_submodule_lattice(m, lm);
    std::string text = emit_dot ? lattice_to_dot(lat) : lattice_to_json(lat);
    if (emit_dot) {
      auto note = lattice_reference_note(m, lm, lat);
      if (note) text += "// " + *note + "\n";
    }
    put(out, text);
    return MQD_OK;
  });
}

int mqd_lattice_hom(mqd_workspace* h, const char* c, const char* y, int emit_dot, char** out) {
  return run(out, [&]() {
    GammaModule gm = gamma_module({h->ws.module_sum(c ? c : "")},
                                  h->ws.module_sum(y ? y : ""));
    SubmoduleLattice lat = gamma_submodule_lattice(gm);
    put(out, emit_dot ? lattice_to_dot(lat) : lattice_to_json(lat));
    return MQD_OK;
  });
}

int mqd_determined(mqd_workspace* h, const char* c, const char* y, const char* h_generators,
                   int universe_dim, char** out) {
  return run(out, [&]() {
    const Workspace& ws = h->ws;
    int bound = universe_dim > 0 ? universe_dim : ws.options.universe_dim;
    Universe u = build_universe(ws.algebra, bound);
    std::vector<Module> c_list;
    if (c && *c) c_list.push_back(ws.module_sum(c));
    GammaModule gm = gamma_module(c_list, ws.module_sum(y ? y : ""));
    Subspace hsub = parse_generators(ws, gm, h_generators);
    DeterminedResult d = construct_determined(gm, hsub, u);
    std::ostringstream os;
    os << "determined morphism for C = " << (c && *c ? c : "(empty)") << ", Y = " << y << "\n";
    os << "H: dim " << hsub.dim() << " inside Hom(C,Y) of dim " << gm.dim() << "\n";
    os << "universe: " << u.modules.size() << " modules, bound " << bound << ", "
       << (u.complete ? "complete" : "incomplete") << "\n";
    os << "label: " << d.label << "\n";
    os << "source: " << dims_text(d.alpha.source()) << "\n";
    os << "image check: " << (d.image_check ? "ok" : "FAILED") << "\n";
    os << "right minimal: " << (d.minimal_check ? "ok" : "FAILED")
       << (d.minimal_certified ? " (certified)" : " (uncertified)") << "\n";
    os << "universality: " << (d.universality_check ? "ok" : "FAILED") << " ("
       << d.witnesses.size() << " witnesses)\n";
    if (d.alpha.source().total_dim() == 0) os << "alpha: zero morphism from the zero module\n";
    else os << "alpha blocks:\n" << morphism_text(d.alpha, "  ");
    put(out, os.str());
    return d.verified() ? MQD_OK : MQD_VERIFY_FAIL;
  });
}

int mqd_almost_split(mqd_workspace* h, const char* z, int universe_dim, char** out) {
  return run(out, [&]() {
    const Workspace& ws = h->ws;
    int bound = universe_dim > 0 ? universe_dim : ws.options.universe_dim;
    Universe u = build_universe(ws.algebra, bound);
    AlmostSplitSequence seq = almost_split_sequence(ws.module_named(z ? z : ""), u);
    EndRadCompare cmp =
        end_mod_rad_compare(seq.inclusion.source(), seq.projection.target());
    std::ostringstream os;
    os << "almost split sequence ending at " << z << "\n";
    os << "0 -> X -> M -> Z -> 0 with\n";
    os << "X: " << dims_text(seq.inclusion.source()) << "\n";
    os << "M: " << dims_text(seq.projection.source()) << "\n";
    os << "Z: " << dims_text(seq.projection.target()) << "\n";
    os << "short exact: " << (seq.short_exact ? "ok" : "FAILED") << "\n";
    os << "non-split: " << (seq.non_split ? "ok" : "FAILED") << "\n";
    os << "right almost split: " << (seq.right_almost_split_ok ? "ok" : "FAILED") << "\n";
    os << "left almost split: " << (seq.left_almost_split_ok ? "ok" : "FAILED") << "\n";
    os << "end/rad orders: " << cmp.x_class.order << " and " << cmp.z_class.order
       << (cmp.isomorphic ? " (isomorphic fields)" : " (NOT isomorphic)") << "\n";
    os << "inclusion blocks:\n" << morphism_text(seq.inclusion, "  ");
    os << "projection blocks:\n" << morphism_text(seq.projection, "  ");
    put(out, os.str());
    return (seq.verified() && cmp.isomorphic) ? MQD_OK : MQD_VERIFY_FAIL;
  });
}

int mqd_check_bijection(mqd_workspace* h, const char* c, const char* y, int universe_dim,
                        char** out) {
  return run(out, [&]() {
    const Workspace& ws = h->ws;
    int bound = universe_dim > 0 ? universe_dim : ws.options.universe_dim;
    Universe u = build_universe(ws.algebra, bound);
    GammaModule gm = gamma_module({ws.module_sum(c ? c : "")}, ws.module_sum(y ? y : ""));
    CheckReport bij = auslander_bijection_check(gm, u);
    CheckReport adj = galois_adjunction_check(gm, u);
    std::ostringstream os;
    os << "bijection check for C = " << c << ", Y = " << y << "\n";
    os << "universe: " << u.modules.size() << " modules, "
       << (u.complete ? "complete" : "incomplete") << "\n";
    os << "round trip and injectivity: " << (bij.ok ? "ok" : "FAILED") << " (" << bij.checks
       << " checks)\n";
    os << "adjunction and functoriality: " << (adj.ok ? "ok" : "FAILED") << " (" << adj.checks
       << " checks)\n";
    for (const std::string& s : bij.failures) os << "counterexample: " << s << "\n";
    for (const std::string& s : adj.failures) os << "counterexample: " << s << "\n";
    put(out, os.str());
    return (bij.ok && adj.ok) ? MQD_OK : MQD_VERIFY_FAIL;
  });
}

int mqd_minimal(mqd_workspace* h, const char* morphism_json, char** out) {
  return run(out, [&]() {
    const Workspace& ws = h->ws;
    Morphism beta = parse_morphism(ws, morphism_json ? morphism_json : "");
    Universe u = build_universe(ws.algebra, ws.options.universe_dim);
    MinimalPresentation mp = minimal_presentation(beta, &u);
    std::ostringstream os;
    os << "minimal presentation\n";
    os << "beta source: " << dims_text(beta.source()) << "\n";
    os << "beta_min source: " << dims_text(mp.beta_min.source()) << "\n";
    os << "kappa source: " << dims_text(mp.kappa.source()) << "\n";
    os << "discarded summand: " << dims_text(mp.reduction.x_dprime) << "\n";
    os << "right minimal: " << (mp.reduction.certified ? "certified" : "uncertified") << " ("
       << mp.reduction.witness << ")\n";
    os << "hom exactness at the middle: "
       << (mp.exactness_checked ? (mp.exactness_ok ? "ok" : "FAILED") : "not checked") << "\n";
    os << "beta_min blocks:\n" << morphism_text(mp.beta_min, "  ");
    os << "kappa blocks:\n" << morphism_text(mp.kappa, "  ");
    put(out, os.str());
    return (mp.reduction.certified && (!mp.exactness_checked || mp.exactness_ok))
               ? MQD_OK
               : MQD_VERIFY_FAIL;
  });
}

int mqd_beilinson(int n, int p, uint32_t q, const char* const* polys, int poly_count,
                  const char* command, char** out) {
  return run(out, [&]() {
    PrimeField f(q);
    VarietySpec spec{n, p, {}, q};
    for (int i = 0; i < poly_count; ++i)
      spec.polys.push_back(parse_polynomial(polys[i], f));
    std::string cmd = command ? command : "";
    std::ostringstream os;
    if (cmd == "variety") {
      VarietyCount vc = variety_points(spec);
      os << "{\n  \"count\": " << vc.count << ",\n  \"points\": [";
      for (size_t i = 0; i < vc.points.size(); ++i) {
        os << (i ? ", " : "") << "\"";
        for (size_t j = 0; j < vc.points[i].size(); ++j)
          os << (j ? ":" : "") << vc.points[i][j];
        os << "\"";
      }
      os << "]\n}\n";
      put(out, os.str());
      return MQD_OK;
    }
    if (cmd == "grassmann") {
      Module i0 = beilinson_injective(spec);
      std::vector<int> ones(i0.dims().size(), 1);
      GrassmannianCount g = grassmannian_points(i0, ones);
      os << "{\n  \"dims\": \"" << dims_text(i0) << "\",\n  \"count\": " << g.count
         << ",\n  \"points\": [";
      for (size_t i = 0; i < g.points.size(); ++i) {
        os << (i ? ", " : "") << "\"";
        for (size_t v = 0; v < g.points[i].size(); ++v)
          os << (v ? " | " : "") << subspace_label(g.points[i][v]);
        os << "\"";
      }
      os << "]\n}\n";
      put(out, os.str());
      return MQD_OK;
    }
    if (cmd == "compare") {
      Module i0 = beilinson_injective(spec);
      std::vector<int> ones(i0.dims().size(), 1);
      GrassmannianCount g = grassmannian_points(i0, ones);
      VarietyCount vc = variety_points(spec);
      os << "grassmannian count: " << g.count << "\n";
      os << "variety count: " << vc.count << "\n";
      if (g.count == vc.count) {
        os << "MATCH " << g.count << "\n";
        put(out, os.str());
        return MQD_OK;
      }
      os << "MISMATCH grassmannian=" << g.count << " variety=" << vc.count << "\n";
      put(out, os.str());
      return MQD_VERIFY_FAIL;
    }
    throw input_error("beilinson command must be grassmann, variety or compare");
  });
}

} // extern "C"
