#include "mqd/matrix.hpp"

#include <string>

namespace mqd {

Matrix::Matrix(PrimeField f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
}

Matrix::Matrix(PrimeField f, int rows, int cols, std::vector<uint32_t> entries)
    : field_(f), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
  if (e_.size() != static_cast<size_t>(rows) * cols)
    throw input_error("matrix entry count does not match shape");
  for (auto& v : e_) v %= field_.p();
}

Matrix Matrix::identity(PrimeField f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

Matrix Matrix::from_rows(PrimeField f, int cols, const std::vector<Vec>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), cols);
  for (size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != cols)
      throw input_error("row length mismatch in from_rows");
    for (int c = 0; c < cols; ++c) m.set(static_cast<int>(r), c, rows[r][c]);
  }
  return m;
}

Vec Matrix::row(int r) const {
  Vec out(cols_);
  for (int c = 0; c < cols_; ++c) out[c] = at(r, c);
  return out;
}

Vec Matrix::col(int c) const {
  Vec out(rows_);
  for (int r = 0; r < rows_; ++r) out[r] = at(r, c);
  return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_ || field_ != o.field_)
    throw input_error("matrix product shape mismatch: " + std::to_string(rows_) + "x" +
                      std::to_string(cols_) + " * " + std::to_string(o.rows_) + "x" +
                      std::to_string(o.cols_));
  Matrix out(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < o.cols_; ++j) {
      uint64_t acc = 0;
      for (int k = 0; k < cols_; ++k) acc += static_cast<uint64_t>(at(i, k)) * o.at(k, j);
      out.set(i, j, static_cast<uint32_t>(acc % field_.p()));
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    throw input_error("matrix sum shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.add(e_[i], o.e_[i]);
  return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_ || field_ != o.field_)
    throw input_error("matrix difference shape mismatch");
  Matrix out(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.sub(e_[i], o.e_[i]);
  return out;
}

Matrix Matrix::scaled(uint32_t c) const {
  Matrix out(field_, rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) out.e_[i] = field_.mul(e_[i], c % field_.p());
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out.set(j, i, at(i, j));
  return out;
}

Vec Matrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw input_error("matrix apply length mismatch");
  Vec out(rows_, 0);
  for (int i = 0; i < rows_; ++i) {
    uint64_t acc = 0;
    for (int k = 0; k < cols_; ++k) acc += static_cast<uint64_t>(at(i, k)) * x[k];
    out[i] = static_cast<uint32_t>(acc % field_.p());
  }
  return out;
}

bool Matrix::is_zero() const {
  for (auto v : e_)
    if (v) return false;
  return true;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.field_ != b.field_) throw input_error("hstack shape mismatch");
  Matrix out(a.field_, a.rows_, a.cols_ + b.cols_);
  for (int i = 0; i < a.rows_; ++i) {
    for (int j = 0; j < a.cols_; ++j) out.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols_; ++j) out.set(i, a.cols_ + j, b.at(i, j));
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.cols_ || a.field_ != b.field_) throw input_error("vstack shape mismatch");
  Matrix out(a.field_, a.rows_ + b.rows_, a.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < a.cols_; ++j) out.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) out.set(a.rows_ + i, j, b.at(i, j));
  return out;
}

Matrix Matrix::block(int r0, int c0, int nr, int nc) const {
  if (r0 < 0 || c0 < 0 || r0 + nr > rows_ || c0 + nc > cols_)
    throw input_error("block out of range");
  Matrix out(field_, nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) out.set(i, j, at(r0 + i, c0 + j));
  return out;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const PrimeField& f = a.field();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < a.rows(); ++i)
      if (a.at(i, c) != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < a.cols(); ++j) {
        uint32_t t = a.at(r, j);
        a.set(r, j, a.at(pr, j));
        a.set(pr, j, t);
      }
    uint32_t iv = f.inv(a.at(r, c));
    for (int j = 0; j < a.cols(); ++j) a.set(r, j, f.mul(a.at(r, j), iv));
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      uint32_t k = a.at(i, c);
      if (!k) continue;
      for (int j = 0; j < a.cols(); ++j) a.set(i, j, f.sub(a.at(i, j), f.mul(k, a.at(r, j))));
    }
    pivots.push_back(c);
    ++r;
  }
  return {a, pivots, r};
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw input_error("solve: row count mismatch");
  if (a.field() != b.field()) throw input_error("solve: field mismatch");
  RrefResult r = rref(Matrix::hstack(a, b));
  // inconsistency: a pivot inside the b-columns
  for (int p : r.pivots)
    if (p >= a.cols()) return std::nullopt;
  Matrix x(a.field(), a.cols(), b.cols());
  for (size_t i = 0; i < r.pivots.size(); ++i)
    for (int j = 0; j < b.cols(); ++j) x.set(r.pivots[i], j, r.mat.at(static_cast<int>(i), a.cols() + j));
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  auto x = solve(a, Matrix::identity(a.field(), a.rows()));
  if (!x) return std::nullopt;
  if ((a * *x) != Matrix::identity(a.field(), a.rows())) return std::nullopt;
  return x;
}

int rank_of(const Matrix& m) { return rref(m).rank; }

} // namespace mqd
