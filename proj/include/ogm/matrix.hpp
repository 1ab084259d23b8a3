#pragma once

// Small dense matrices over the scalar field F with exact Gaussian
// elimination. Pivots are chosen by minimal valuation (then lowest row) so
// all computations are deterministic.

#include <vector>

#include "ogm/scalars.hpp"

namespace ogm {

class Matrix {
 public:
  Matrix(const BackendConfig& cfg, std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(cfg)), cfg_(cfg) {}
  static Matrix identity(const BackendConfig& cfg, std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const BackendConfig& config() const { return cfg_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Scalar> col(std::size_t j) const;
  void set_col(std::size_t j, const std::vector<Scalar>& v);

  Matrix mul(const Matrix& o) const;
  std::vector<Scalar> apply(const std::vector<Scalar>& v) const;
  Matrix add(const Matrix& o) const;
  Matrix sub(const Matrix& o) const;
  Matrix scale(const Scalar& s) const;
  Matrix transpose() const;

  Scalar det() const;
  Matrix inverse() const;  // arithmetic_error when singular
  // unique solution of A x = b for square nonsingular A
  std::vector<Scalar> solve(const std::vector<Scalar>& b) const;

  bool is_integral() const;
  // min over nonzero entries; infinite when the matrix is zero
  Valuation min_entry_valuation() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b) { return a.mul(b); }
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
  BackendConfig cfg_;
};

}  // namespace ogm
