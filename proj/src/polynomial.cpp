#include "mqd/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace mqd {

bool Polynomial::homogeneous() const {
  for (const auto& [c, m] : terms)
    if (m.size() != terms.front().second.size()) return false;
  return true;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [c, m] : terms) d = std::max(d, static_cast<int>(m.size()));
  return d;
}

int Polynomial::max_var() const {
  int v = -1;
  for (const auto& [c, m] : terms)
    for (int x : m) v = std::max(v, x);
  return v;
}

uint32_t Polynomial::evaluate(const PrimeField& f, const Vec& point) const {
  uint32_t acc = 0;
  for (const auto& [c, m] : terms) {
    uint32_t t = c;
    for (int x : m) {
      if (x < 0 || x >= static_cast<int>(point.size()))
        throw input_error("polynomial variable index out of range");
      t = f.mul(t, point[x]);
    }
    acc = f.add(acc, t);
  }
  return acc;
}

Polynomial normalize_polynomial(const PrimeField& f,
                                std::vector<std::pair<int64_t, std::vector<int>>> raw) {
  std::map<std::vector<int>, uint32_t> acc;
  for (auto& [c, m] : raw) {
    std::sort(m.begin(), m.end());
    uint32_t r = f.reduce(c);
    auto [it, fresh] = acc.emplace(m, r);
    if (!fresh) it->second = f.add(it->second, r);
  }
  Polynomial out;
  for (auto& [m, c] : acc)
    if (c) out.terms.emplace_back(c, m);
  std::sort(out.terms.begin(), out.terms.end(), [](const auto& a, const auto& b) {
    if (a.second.size() != b.second.size()) return a.second.size() < b.second.size();
    return a.second < b.second;
  });
  return out;
}

namespace {

struct Parser {
  const std::string& s;
  size_t i = 0;
  const PrimeField& f;

  void skip() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eat(char c) {
    skip();
    if (i < s.size() && s[i] == c) {
      ++i;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw input_error("polynomial parse error at offset " + std::to_string(i) + ": " + what);
  }
  int64_t integer() {
    skip();
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) fail("expected integer");
    return std::stoll(s.substr(start, i - start));
  }
  // factor = integer | x<k> [^e]; appends variables, multiplies coeff
  void factor(int64_t& coeff, std::vector<int>& vars) {
    skip();
    if (i < s.size() && s[i] == 'x') {
      ++i;
      int64_t k = integer();
      int64_t e = 1;
      if (eat('^')) e = integer();
      if (e < 0) fail("negative exponent");
      for (int64_t t = 0; t < e; ++t) vars.push_back(static_cast<int>(k));
    } else if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      int64_t k = integer();
      if (eat('^')) {
        int64_t e = integer();
        int64_t acc = 1;
        for (int64_t t = 0; t < e; ++t) acc = f.reduce(acc * k);
        k = acc;
      }
      coeff = f.reduce(coeff * k);
    } else {
      fail("expected variable or coefficient");
    }
  }
  void term(int64_t sign, std::vector<std::pair<int64_t, std::vector<int>>>& out) {
    int64_t coeff = sign;
    std::vector<int> vars;
    factor(coeff, vars);
    while (true) {
      skip();
      if (eat('*')) {
        factor(coeff, vars);
        continue;
      }
      // implicit product: "2x0" or "x0x1"
      if (i < s.size() && (s[i] == 'x' || std::isdigit(static_cast<unsigned char>(s[i])))) {
        factor(coeff, vars);
        continue;
      }
      break;
    }
    out.emplace_back(coeff, std::move(vars));
  }
  Polynomial run() {
    std::vector<std::pair<int64_t, std::vector<int>>> raw;
    skip();
    if (i == s.size()) fail("empty polynomial");
    int64_t sign = 1;
    if (eat('-')) sign = -1;
    else eat('+');
    term(sign, raw);
    while (true) {
      skip();
      if (eat('+')) term(1, raw);
      else if (eat('-')) term(-1, raw);
      else break;
    }
    skip();
    if (i != s.size()) fail("trailing input");
    return normalize_polynomial(f, std::move(raw));
  }
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const PrimeField& f) {
  Parser p{text, 0, f};
  return p.run();
}

std::string polynomial_display(const Polynomial& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  for (const auto& [c, m] : p.terms) {
    if (!out.empty()) out += " + ";
    bool need_star = false;
    if (c != 1 || m.empty()) {
      out += std::to_string(c);
      need_star = true;
    }
    int run = 0;
    for (size_t k = 0; k < m.size(); ++k) {
      ++run;
      bool last_of_var = (k + 1 == m.size() || m[k + 1] != m[k]);
      if (!last_of_var) continue;
      if (need_star) out += "*";
      out += "x" + std::to_string(m[k]);
      if (run > 1) out += "^" + std::to_string(run);
      need_star = true;
      run = 0;
    }
  }
  return out;
}

std::vector<PathAlgebra::Elem> place_polynomial(const PathAlgebra& alg, const Polynomial& f) {
  const auto& shape = alg.beilinson_shape();
  if (!shape) throw input_error("place_polynomial needs a Beilinson algebra");
  if (f.zero()) throw input_error("cannot place the zero polynomial");
  if (!f.homogeneous()) throw input_error("polynomial is not homogeneous");
  const int d = f.degree();
  if (d > shape->degree)
    throw input_error("polynomial degree " + std::to_string(d) + " exceeds algebra degree " +
                      std::to_string(shape->degree));
  if (f.max_var() > shape->n)
    throw input_error("variable index exceeds x" + std::to_string(shape->n));
  if (d == 0) throw input_error("cannot place a constant polynomial");

  std::vector<PathAlgebra::Elem> out;
  for (int t = 0; t + d <= shape->degree; ++t) {
    PathAlgebra::Elem e = alg.zero_elem();
    for (const auto& [c, mono] : f.terms) {
      std::vector<std::string> names;
      int v = t + d; // walk from vertex t+d down to t
      for (int var : mono) {
        names.push_back("x" + std::to_string(var) + ":" + std::to_string(v));
        --v;
      }
      e = alg.add(e, alg.scale(c, alg.path_elem_named(names)));
    }
    out.push_back(std::move(e));
  }
  return out;
}

} // namespace mqd
