#include "mqd/path_algebra.hpp"

#include <algorithm>

#include "mqd/caps.hpp"
#include "mqd/subspace.hpp"

namespace mqd {

std::string BasisPath::display() const { return ""; } // filled by elem_display

namespace {

struct RawPath {
  std::vector<int> arrows;
  int source, target;
};

struct InternalRelation {
  // terms as arrow index sequences with reduced coefficients
  std::vector<std::pair<uint32_t, std::vector<int>>> terms;
  int source, target;
  int max_len;
};

// coordinate order: longer paths first, then lexicographically larger arrow
// sequences first; surviving (non-pivot) representatives are the shortest,
// lexicographically least paths
bool coord_before(const RawPath& a, const RawPath& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() > b.arrows.size();
  if (a.arrows != b.arrows) return a.arrows > b.arrows;
  if (a.source != b.source) return a.source > b.source;
  return false;
}

// public basis order: short paths first, then lex, trivial paths by vertex
bool basis_before(const BasisPath& a, const BasisPath& b) {
  if (a.arrows.size() != b.arrows.size()) return a.arrows.size() < b.arrows.size();
  if (a.arrows.empty()) return a.source < b.source;
  return a.arrows < b.arrows;
}

} // namespace

std::shared_ptr<const PathAlgebra> PathAlgebra::build(PrimeField f, Quiver q,
                                                      std::vector<Relation> rels, int cap) {
  if (cap < 1) throw input_error("nilpotency cap must be >= 1");
  auto alg = std::shared_ptr<PathAlgebra>(new PathAlgebra(f, std::move(q)));
  const Quiver& quiv = alg->quiver_;
  alg->cap_ = cap;
  alg->relations_in_ = rels;

  // validate relations and convert to arrow indices
  std::vector<InternalRelation> internal;
  for (const Relation& r : rels) {
    if (r.empty()) throw input_error("relation has no terms");
    InternalRelation ir;
    ir.source = -1;
    ir.target = -1;
    ir.max_len = 0;
    for (const RelationTerm& t : r) {
      if (t.path.empty()) throw input_error("empty path in relation");
      std::vector<int> arrows;
      for (const std::string& name : t.path) arrows.push_back(quiv.arrow_index(name));
      for (size_t i = 0; i + 1 < arrows.size(); ++i)
        if (quiv.arrow(arrows[i]).target != quiv.arrow(arrows[i + 1]).source)
          throw input_error("non-composable path in relation");
      int s = quiv.arrow(arrows.front()).source;
      int tt = quiv.arrow(arrows.back()).target;
      if (ir.source == -1) {
        ir.source = s;
        ir.target = tt;
      } else if (ir.source != s || ir.target != tt) {
        throw input_error("relation terms are not parallel");
      }
      uint32_t c = f.reduce(t.coeff);
      if (c == 0) continue;
      ir.max_len = std::max(ir.max_len, static_cast<int>(arrows.size()));
      ir.terms.emplace_back(c, std::move(arrows));
    }
    if (ir.terms.empty())
      throw input_error("relation reduces to zero over GF(" + std::to_string(f.p()) + ")");
    internal.push_back(std::move(ir));
  }

  // enumerate all paths of length <= cap
  std::vector<RawPath> paths;
  for (int v = 0; v < quiv.vertex_count(); ++v) paths.push_back({{}, v, v});
  size_t level_begin = 0;
  for (int len = 1; len <= cap; ++len) {
    size_t level_end = paths.size();
    for (size_t i = level_begin; i < level_end; ++i) {
      for (int a = 0; a < quiv.arrow_count(); ++a) {
        if (quiv.arrow(a).source != paths[i].target) continue;
        RawPath np = paths[i];
        np.arrows.push_back(a);
        np.target = quiv.arrow(a).target;
        paths.push_back(std::move(np));
        if (paths.size() > enum_cap())
          throw cap_exceeded("path enumeration exceeds cap " + std::to_string(enum_cap()));
      }
    }
    level_begin = level_end;
  }

  std::sort(paths.begin(), paths.end(), coord_before);
  std::map<std::vector<int>, int> coord_of; // keyed by arrows; trivial paths keyed separately
  auto key_of = [&](const RawPath& p) {
    if (!p.arrows.empty()) return p.arrows;
    return std::vector<int>{-1 - p.source}; // unique key for trivial path at v
  };
  for (size_t i = 0; i < paths.size(); ++i) coord_of[key_of(paths[i])] = static_cast<int>(i);
  const int ncoords = static_cast<int>(paths.size());

  // ideal generators u * r * w whose every term fits within the cap
  std::vector<Vec> gen_rows;
  for (const InternalRelation& ir : internal) {
    for (const RawPath& u : paths) {
      if (u.target != ir.source) continue;
      if (static_cast<int>(u.arrows.size()) + ir.max_len > cap) continue;
      for (const RawPath& w : paths) {
        if (w.source != ir.target) continue;
        int extra = static_cast<int>(u.arrows.size() + w.arrows.size());
        if (extra + ir.max_len > cap) continue;
        Vec row(ncoords, 0);
        for (const auto& [c, mid] : ir.terms) {
          std::vector<int> full = u.arrows;
          full.insert(full.end(), mid.begin(), mid.end());
          full.insert(full.end(), w.arrows.begin(), w.arrows.end());
          auto it = coord_of.find(full);
          if (it == coord_of.end()) throw verify_error("generator path missing from coordinates");
          row[it->second] = f.add(row[it->second], c);
        }
        gen_rows.push_back(std::move(row));
      }
    }
  }

  Subspace ideal = Subspace::span_rows(f, ncoords, gen_rows);

  // admissibility: every path of exactly the cap length must lie in the
  // span of the generators
  for (int i = 0; i < ncoords; ++i) {
    if (static_cast<int>(paths[i].arrows.size()) != cap) continue;
    Vec e(ncoords, 0);
    e[i] = 1;
    if (!ideal.contains_vector(e)) {
      std::string disp;
      for (int a : paths[i].arrows) {
        if (!disp.empty()) disp += "*";
        disp += quiv.arrow(a).name;
      }
      throw input_error("ideal not admissible at cap " + std::to_string(cap) +
                        ": path " + disp + " does not vanish");
    }
  }

  // basis representatives = non-pivot coordinates
  std::vector<bool> is_pivot(ncoords, false);
  {
    RrefResult rr = rref(ideal.basis());
    for (int p : rr.pivots) is_pivot[p] = true;
  }
  std::vector<int> rep_coords;
  for (int i = 0; i < ncoords; ++i)
    if (!is_pivot[i]) rep_coords.push_back(i);

  std::vector<BasisPath> basis;
  for (int i : rep_coords) basis.push_back({paths[i].arrows, paths[i].source, paths[i].target});
  std::sort(basis.begin(), basis.end(), basis_before);
  alg->basis_ = basis;
  for (size_t b = 0; b < basis.size(); ++b) {
    std::vector<int> key =
        basis[b].arrows.empty() ? std::vector<int>{-1 - basis[b].source} : basis[b].arrows;
    alg->basis_by_arrows_[key] = static_cast<int>(b);
  }

  // expansion of every coordinate path into the basis
  std::vector<std::vector<std::pair<int, uint32_t>>> expand(ncoords);
  for (int i = 0; i < ncoords; ++i) {
    Vec e(ncoords, 0);
    e[i] = 1;
    Vec red = ideal.reduce(e);
    std::vector<std::pair<int, uint32_t>> sparse;
    for (int c = 0; c < ncoords; ++c) {
      if (!red[c]) continue;
      auto it = alg->basis_by_arrows_.find(key_of(paths[c]));
      if (it == alg->basis_by_arrows_.end())
        throw verify_error("reduction produced a non-basis coordinate");
      sparse.emplace_back(it->second, red[c]);
    }
    expand[i] = std::move(sparse);
  }

  // prepend tables: arrow * basis path
  alg->prepend_.resize(quiv.arrow_count());
  for (int a = 0; a < quiv.arrow_count(); ++a) {
    for (size_t b = 0; b < basis.size(); ++b) {
      if (quiv.arrow(a).target != basis[b].source) continue;
      std::vector<int> full;
      full.push_back(a);
      full.insert(full.end(), basis[b].arrows.begin(), basis[b].arrows.end());
      auto it = coord_of.find(full);
      if (it == coord_of.end()) throw verify_error("prepend path missing from coordinates");
      alg->prepend_[a][static_cast<int>(b)] = expand[it->second];
    }
  }

  // associativity must hold on all basis triples
  const int dim = alg->dim();
  std::vector<std::vector<Elem>> table(dim, std::vector<Elem>());
  for (int i = 0; i < dim; ++i) {
    table[i].reserve(dim);
    Elem ei = alg->zero_elem();
    ei[i] = 1;
    for (int j = 0; j < dim; ++j) {
      Elem ej = alg->zero_elem();
      ej[j] = 1;
      table[i].push_back(alg->multiply(ei, ej));
    }
  }
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      const Elem& ij = table[i][j];
      for (int k = 0; k < dim; ++k) {
        Elem lhs = alg->zero_elem();
        for (int m = 0; m < dim; ++m)
          if (ij[m])
            for (int c = 0; c < dim; ++c)
              lhs[c] = f.add(lhs[c], f.mul(ij[m], table[m][k][c]));
        Elem rhs = alg->zero_elem();
        const Elem& jk = table[j][k];
        for (int m = 0; m < dim; ++m)
          if (jk[m])
            for (int c = 0; c < dim; ++c)
              rhs[c] = f.add(rhs[c], f.mul(jk[m], table[i][m][c]));
        if (lhs != rhs) throw verify_error("multiplication not associative on basis triple");
      }
    }

  return alg;
}

std::vector<int> PathAlgebra::basis_indices(int s, int t) const {
  std::vector<int> out;
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].source == s && basis_[i].target == t) out.push_back(static_cast<int>(i));
  return out;
}

PathAlgebra::Elem PathAlgebra::unit_elem() const {
  Elem e = zero_elem();
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].arrows.empty()) e[i] = 1;
  return e;
}

PathAlgebra::Elem PathAlgebra::vertex_idempotent(int v) const {
  Elem e = zero_elem();
  for (size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i].arrows.empty() && basis_[i].source == v) e[i] = 1;
  return e;
}

PathAlgebra::Elem PathAlgebra::arrow_elem(int a) const {
  return path_elem(std::vector<int>{a});
}

PathAlgebra::Elem PathAlgebra::path_elem(const std::vector<int>& arrows) const {
  for (size_t i = 0; i + 1 < arrows.size(); ++i)
    if (quiver_.arrow(arrows[i]).target != quiver_.arrow(arrows[i + 1]).source)
      throw input_error("non-composable arrow sequence");
  if (static_cast<int>(arrows.size()) >= cap_) return zero_elem();
  if (arrows.empty()) throw input_error("path_elem needs at least one arrow");
  // reduce by peeling arrows from the front onto the trailing basis element
  Elem cur = zero_elem();
  int last = arrows.back();
  auto it = basis_by_arrows_.find(std::vector<int>{last});
  if (it != basis_by_arrows_.end()) {
    cur[it->second] = 1;
  } else {
    // single arrow reduced by the ideal: expand via prepend on the trivial path
    Elem ev = vertex_idempotent(quiver_.arrow(last).target);
    Elem tmp = zero_elem();
    for (size_t b = 0; b < basis_.size(); ++b) {
      if (!ev[b]) continue;
      auto jt = prepend_[last].find(static_cast<int>(b));
      if (jt == prepend_[last].end()) continue;
      for (auto [idx, c] : jt->second) tmp[idx] = field_.add(tmp[idx], c);
    }
    cur = tmp;
  }
  for (int i = static_cast<int>(arrows.size()) - 2; i >= 0; --i) {
    Elem next = zero_elem();
    for (size_t b = 0; b < basis_.size(); ++b) {
      if (!cur[b]) continue;
      auto jt = prepend_[arrows[i]].find(static_cast<int>(b));
      if (jt == prepend_[arrows[i]].end()) continue;
      for (auto [idx, c] : jt->second) next[idx] = field_.add(next[idx], field_.mul(cur[b], c));
    }
    cur = std::move(next);
  }
  return cur;
}

PathAlgebra::Elem PathAlgebra::path_elem_named(const std::vector<std::string>& names) const {
  std::vector<int> arrows;
  for (const std::string& n : names) arrows.push_back(quiver_.arrow_index(n));
  return path_elem(arrows);
}

PathAlgebra::Elem PathAlgebra::multiply(const Elem& x, const Elem& y) const {
  if (x.size() != basis_.size() || y.size() != basis_.size())
    throw input_error("element length mismatch");
  Elem out = zero_elem();
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (!x[i]) continue;
    const BasisPath& u = basis_[i];
    Elem w(basis_.size(), 0);
    if (u.arrows.empty()) {
      for (size_t b = 0; b < basis_.size(); ++b)
        if (y[b] && basis_[b].source == u.source) w[b] = y[b];
    } else {
      // restrict y to components starting where u ends, then prepend u's
      // arrows right to left
      for (size_t b = 0; b < basis_.size(); ++b)
        if (y[b] && basis_[b].source == u.target) w[b] = y[b];
      for (int k = static_cast<int>(u.arrows.size()) - 1; k >= 0; --k) {
        Elem next(basis_.size(), 0);
        for (size_t b = 0; b < basis_.size(); ++b) {
          if (!w[b]) continue;
          auto jt = prepend_[u.arrows[k]].find(static_cast<int>(b));
          if (jt == prepend_[u.arrows[k]].end()) continue;
          for (auto [idx, c] : jt->second)
            next[idx] = field_.add(next[idx], field_.mul(w[b], c));
        }
        w = std::move(next);
      }
    }
    for (size_t b = 0; b < basis_.size(); ++b)
      if (w[b]) out[b] = field_.add(out[b], field_.mul(x[i], w[b]));
  }
  return out;
}

PathAlgebra::Elem PathAlgebra::add(const Elem& x, const Elem& y) const {
  Elem out = x;
  for (size_t i = 0; i < out.size(); ++i) out[i] = field_.add(out[i], y[i]);
  return out;
}

PathAlgebra::Elem PathAlgebra::scale(uint32_t c, const Elem& x) const {
  Elem out = x;
  for (auto& v : out) v = field_.mul(v, c % field_.p());
  return out;
}

std::shared_ptr<const PathAlgebra> PathAlgebra::opposite() const {
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (const Arrow& a : quiver_.arrows())
    arrows.emplace_back(a.name, quiver_.vertex_name(a.target), quiver_.vertex_name(a.source));
  Quiver q(quiver_.vertices(), arrows);
  std::vector<Relation> rels;
  for (const Relation& r : relations_in_) {
    Relation nr;
    for (const RelationTerm& t : r) {
      RelationTerm nt = t;
      std::reverse(nt.path.begin(), nt.path.end());
      nr.push_back(std::move(nt));
    }
    rels.push_back(std::move(nr));
  }
  auto opp = build(field_, std::move(q), std::move(rels), cap_);
  return opp;
}

bool PathAlgebra::same_structure(const PathAlgebra& o) const {
  if (field_ != o.field_ || cap_ != o.cap_) return false;
  if (!(quiver_ == o.quiver_)) return false;
  if (relations_in_.size() != o.relations_in_.size()) return false;
  for (size_t i = 0; i < relations_in_.size(); ++i) {
    const Relation& a = relations_in_[i];
    const Relation& b = o.relations_in_[i];
    if (a.size() != b.size()) return false;
    for (size_t j = 0; j < a.size(); ++j)
      if (a[j].coeff != b[j].coeff || a[j].path != b[j].path) return false;
  }
  return true;
}

std::string PathAlgebra::elem_display(const Elem& x) const {
  std::string out;
  for (size_t i = 0; i < basis_.size(); ++i) {
    if (!x[i]) continue;
    if (!out.empty()) out += " + ";
    if (x[i] != 1) out += std::to_string(x[i]) + "*";
    if (basis_[i].arrows.empty()) {
      out += "e(" + quiver_.vertex_name(basis_[i].source) + ")";
    } else {
      bool first = true;
      for (int a : basis_[i].arrows) {
        if (!first) out += "*";
        out += quiver_.arrow(a).name;
        first = false;
      }
    }
  }
  return out.empty() ? "0" : out;
}

std::shared_ptr<const PathAlgebra> beilinson_algebra(int n, int degree, PrimeField f) {
  if (n < 0) throw input_error("beilinson: n must be >= 0");
  if (degree < 1) throw input_error("beilinson: degree must be >= 1");
  std::vector<std::string> vertices;
  for (int v = degree; v >= 0; --v) vertices.push_back(std::to_string(v));
  std::vector<std::tuple<std::string, std::string, std::string>> arrows;
  for (int i = degree; i >= 1; --i)
    for (int j = 0; j <= n; ++j)
      arrows.emplace_back("x" + std::to_string(j) + ":" + std::to_string(i), std::to_string(i),
                          std::to_string(i - 1));
  Quiver q(vertices, arrows);
  std::vector<Relation> rels;
  for (int i = degree; i >= 2; --i)
    for (int ja = 0; ja <= n; ++ja)
      for (int jb = ja + 1; jb <= n; ++jb) {
        Relation r;
        r.push_back({1,
                     {"x" + std::to_string(ja) + ":" + std::to_string(i),
                      "x" + std::to_string(jb) + ":" + std::to_string(i - 1)}});
        r.push_back({-1,
                     {"x" + std::to_string(jb) + ":" + std::to_string(i),
                      "x" + std::to_string(ja) + ":" + std::to_string(i - 1)}});
        rels.push_back(std::move(r));
      }
  auto alg = PathAlgebra::build(f, std::move(q), std::move(rels), degree + 1);
  const_cast<PathAlgebra&>(*alg).beilinson_ = BeilinsonShape{n, degree};
  return alg;
}

} // namespace mqd
