#include "mqd/grassmannian.hpp"

#include <string>

namespace mqd {

uint64_t gaussian_binomial(uint32_t q, int n, int k) {
  if (k < 0 || k > n) return 0;
  // prod_{i=0}^{k-1} (q^(n-i) - 1) / (q^(i+1) - 1), computed as a rational
  // product to stay integral
  long double acc = 1.0L;
  for (int i = 0; i < k; ++i) {
    long double num = 1.0L, den = 1.0L;
    for (int e = 0; e < n - i; ++e) num *= q;
    for (int e = 0; e < i + 1; ++e) den *= q;
    acc *= (num - 1.0L) / (den - 1.0L);
  }
  return static_cast<uint64_t>(acc + 0.5L);
}

std::vector<Subspace> enumerate_subspaces(PrimeField f, int n, int k) {
  std::vector<Subspace> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.emplace_back(f, n);
    return out;
  }
  // choose pivot columns, then run an odometer over the free entries
  std::vector<int> pivots(k);
  for (int i = 0; i < k; ++i) pivots[i] = i;
  auto next_combo = [&]() {
    int i = k - 1;
    while (i >= 0 && pivots[i] == n - k + i) --i;
    if (i < 0) return false;
    ++pivots[i];
    for (int j = i + 1; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
    return true;
  };
  do {
    std::vector<bool> is_pivot(n, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::pair<int, int>> free_cells; // (row, col)
    for (int r = 0; r < k; ++r)
      for (int c = pivots[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free_cells.emplace_back(r, c);
    Vec vals(free_cells.size(), 0);
    while (true) {
      Matrix b(f, k, n);
      for (int r = 0; r < k; ++r) b.set(r, pivots[r], 1);
      for (size_t i = 0; i < free_cells.size(); ++i)
        b.set(free_cells[i].first, free_cells[i].second, vals[i]);
      out.push_back(Subspace::span(b));
      size_t i = 0;
      for (; i < vals.size(); ++i) {
        if (++vals[i] < f.p()) break;
        vals[i] = 0;
      }
      if (i == vals.size()) break;
    }
  } while (next_combo());
  return out;
}

Module beilinson_injective(const VarietySpec& spec) {
  PrimeField f(spec.q);
  auto lambda = beilinson_algebra(spec.n, spec.degree_cap, f);
  // build the quotient algebra: original relations plus every placement of
  // every polynomial as a parallel-path relation
  std::vector<Relation> rels = lambda->relations();
  for (const Polynomial& poly : spec.polys) {
    if (poly.zero()) throw input_error("zero polynomial in variety spec");
    if (!poly.homogeneous()) throw input_error("variety polynomials must be homogeneous");
    if (poly.degree() > spec.degree_cap)
      throw input_error("polynomial degree exceeds the Beilinson degree cap");
    const int d = poly.degree();
    for (int t = 0; t + d <= spec.degree_cap; ++t) {
      Relation r;
      for (const auto& [coeff, mono] : poly.terms) {
        RelationTerm term;
        term.coeff = static_cast<int64_t>(coeff);
        int v = t + d;
        for (int var : mono) {
          term.path.push_back("x" + std::to_string(var) + ":" + std::to_string(v));
          --v;
        }
        r.push_back(std::move(term));
      }
      rels.push_back(std::move(r));
    }
  }
  auto quot = PathAlgebra::build(f, lambda->quiver(), rels, lambda->cap());
  int v0 = quot->quiver().vertex_index("0");
  Module i0 = injective_module(quot, v0);
  // view along the surjection: same spaces and maps over the Beilinson algebra
  std::vector<Matrix> maps;
  for (int a = 0; a < lambda->quiver().arrow_count(); ++a) maps.push_back(i0.map(a));
  Module restricted(lambda, i0.dims(), maps);
  ValidationReport rep = validate(restricted);
  if (!rep.ok) throw verify_error("restricted injective violates the Beilinson relations");
  return restricted;
}

GrassmannianCount grassmannian_points(const Module& m, const std::vector<int>& d,
                                      uint64_t guard) {
  const Quiver& q = m.algebra()->quiver();
  const PrimeField& f = m.algebra()->field();
  if (static_cast<int>(d.size()) != q.vertex_count())
    throw input_error("dimension vector length mismatch");
  uint64_t work = 1;
  for (int v = 0; v < q.vertex_count(); ++v) {
    if (d[v] < 0 || d[v] > m.dim(v))
      throw input_error("dimension vector exceeds the module dimensions at vertex " +
                        q.vertex_name(v));
    uint64_t g = gaussian_binomial(f.p(), m.dim(v), d[v]);
    if (g == 0 || work > guard / (g ? g : 1))
      throw cap_exceeded("grassmannian enumeration exceeds the guard");
    work *= g;
  }
  if (work > guard) throw cap_exceeded("grassmannian enumeration exceeds the guard");

  std::vector<std::vector<Subspace>> choices;
  for (int v = 0; v < q.vertex_count(); ++v)
    choices.push_back(enumerate_subspaces(f, m.dim(v), d[v]));

  GrassmannianCount out;
  out.dim_vector = d;
  std::vector<size_t> idx(q.vertex_count(), 0);
  while (true) {
    std::vector<Subspace> tuple;
    for (int v = 0; v < q.vertex_count(); ++v) tuple.push_back(choices[v][idx[v]]);
    bool stable = true;
    for (int a = 0; a < q.arrow_count() && stable; ++a) {
      const Arrow& ar = q.arrow(a);
      stable = tuple[ar.target].contains(apply_to_subspace(m.map(a), tuple[ar.source]));
    }
    if (stable) {
      out.points.push_back(tuple);
      ++out.count;
    }
    int v = 0;
    for (; v < q.vertex_count(); ++v) {
      if (++idx[v] < choices[v].size()) break;
      idx[v] = 0;
    }
    if (v == q.vertex_count()) break;
  }
  return out;
}

VarietyCount variety_points(const VarietySpec& spec) {
  PrimeField f(spec.q);
  const int n = spec.n;
  uint64_t total = 1, acc = 0;
  for (int i = 0; i <= n; ++i) {
    acc += total;
    total *= spec.q;
  }
  if (acc > 1'000'000) throw cap_exceeded("projective point enumeration exceeds the guard");
  VarietyCount out;
  // canonical representatives: first nonzero coordinate equal to 1
  for (int lead = 0; lead <= n; ++lead) {
    Vec pt(n + 1, 0);
    pt[lead] = 1;
    int free = n - lead;
    Vec tail(free, 0);
    while (true) {
      for (int i = 0; i < free; ++i) pt[lead + 1 + i] = tail[i];
      bool vanish = true;
      for (const Polynomial& poly : spec.polys)
        if (poly.evaluate(f, pt) != 0) {
          vanish = false;
          break;
        }
      if (vanish) {
        out.points.push_back(pt);
        ++out.count;
      }
      int i = 0;
      for (; i < free; ++i) {
        if (++tail[i] < spec.q) break;
        tail[i] = 0;
      }
      if (i == free) break;
    }
  }
  return out;
}

} // namespace mqd
