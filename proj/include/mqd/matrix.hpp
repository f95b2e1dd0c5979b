#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mqd/gf.hpp"

namespace mqd {

using Vec = std::vector<uint32_t>;

// Dense row-major matrix over GF(p). Entries are always reduced residues.
class Matrix {
public:
  Matrix(PrimeField f, int rows, int cols);
  Matrix(PrimeField f, int rows, int cols, std::vector<uint32_t> entries);

  static Matrix identity(PrimeField f, int n);
  static Matrix from_rows(PrimeField f, int cols, const std::vector<Vec>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const PrimeField& field() const { return field_; }

  uint32_t at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, uint32_t v) { e_[static_cast<size_t>(r) * cols_ + c] = v % field_.p(); }

  Vec row(int r) const;
  Vec col(int c) const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(uint32_t c) const;
  Matrix transpose() const;
  Vec apply(const Vec& x) const; // matrix * column vector

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && e_ == o.e_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }
  bool is_zero() const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);
  Matrix block(int r0, int c0, int nr, int nc) const;

  // Row ordering used for canonical comparisons (rows as tuples).
  bool lex_less(const Matrix& o) const { return e_ < o.e_; }

private:
  PrimeField field_;
  int rows_, cols_;
  std::vector<uint32_t> e_;
};

struct RrefResult {
  Matrix mat;
  std::vector<int> pivots;
  int rank;
};

// Unique reduced row-echelon form; pivot columns strictly increasing.
RrefResult rref(const Matrix& m);

// Solves a*x = b for a matrix x (b may have several columns). Free
// variables are set to 0. Returns nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

int rank_of(const Matrix& m);

} // namespace mqd
