#include "ogm/matrix.hpp"

namespace ogm {

namespace {

void check_dims(bool ok, const char* what) {
  if (!ok) throw precondition_error(what);
}

// row with the entry of least valuation in column j, among rows >= from;
// returns rows() when the column is zero there
std::size_t pivot_row(const Matrix& m, std::size_t j, std::size_t from) {
  std::size_t best = m.rows();
  Valuation bestv = Valuation::infinite();
  for (std::size_t i = from; i < m.rows(); ++i) {
    const Scalar& e = m.at(i, j);
    if (e.is_zero()) continue;
    Valuation v = e.val();
    if (best == m.rows() || v < bestv) {
      best = i;
      bestv = v;
    }
  }
  return best;
}

}  // namespace

Matrix Matrix::identity(const BackendConfig& cfg, std::size_t n) {
  Matrix m(cfg, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(cfg);
  return m;
}

std::vector<Scalar> Matrix::col(std::size_t j) const {
  std::vector<Scalar> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back(at(i, j));
  return v;
}

void Matrix::set_col(std::size_t j, const std::vector<Scalar>& v) {
  check_dims(v.size() == rows_, "set_col: dimension mismatch");
  for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
}

Matrix Matrix::mul(const Matrix& o) const {
  check_dims(cols_ == o.rows_, "matrix product: inner dimensions differ");
  Matrix r(cfg_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        r.at(i, j) = r.at(i, j).add(x.mul(o.at(k, j)));
    }
  return r;
}

std::vector<Scalar> Matrix::apply(const std::vector<Scalar>& v) const {
  check_dims(v.size() == cols_, "apply: dimension mismatch");
  std::vector<Scalar> r(rows_, Scalar::zero(cfg_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r[i] = r[i].add(at(i, j).mul(v[j]));
  return r;
}

Matrix Matrix::add(const Matrix& o) const {
  check_dims(rows_ == o.rows_ && cols_ == o.cols_, "matrix sum: shapes differ");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i].add(o.a_[i]);
  return r;
}

Matrix Matrix::sub(const Matrix& o) const {
  check_dims(rows_ == o.rows_ && cols_ == o.cols_, "matrix diff: shapes differ");
  Matrix r = *this;
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = r.a_[i].sub(o.a_[i]);
  return r;
}

Matrix Matrix::scale(const Scalar& s) const {
  Matrix r = *this;
  for (auto& e : r.a_) e = e.mul(s);
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cfg_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Scalar Matrix::det() const {
  check_dims(rows_ == cols_, "det: square matrix required");
  Matrix w = *this;
  Scalar d = Scalar::one(cfg_);
  for (std::size_t j = 0; j < cols_; ++j) {
    std::size_t pr = pivot_row(w, j, j);
    if (pr == rows_) return Scalar::zero(cfg_);
    if (pr != j) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(w.at(pr, c), w.at(j, c));
      d = d.neg();
    }
    const Scalar piv = w.at(j, j);
    d = d.mul(piv);
    for (std::size_t i = j + 1; i < rows_; ++i) {
      if (w.at(i, j).is_zero()) continue;
      Scalar fac = w.at(i, j).div(piv);
      for (std::size_t c = j; c < cols_; ++c)
        w.at(i, c) = w.at(i, c).sub(fac.mul(w.at(j, c)));
    }
  }
  return d;
}

Matrix Matrix::inverse() const {
  check_dims(rows_ == cols_, "inverse: square matrix required");
  Matrix w = *this;
  Matrix inv = identity(cfg_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    std::size_t pr = pivot_row(w, j, j);
    if (pr == rows_) throw arithmetic_error("matrix is singular");
    if (pr != j)
      for (std::size_t c = 0; c < cols_; ++c) {
        std::swap(w.at(pr, c), w.at(j, c));
        std::swap(inv.at(pr, c), inv.at(j, c));
      }
    Scalar piv = w.at(j, j).inv();
    for (std::size_t c = 0; c < cols_; ++c) {
      w.at(j, c) = w.at(j, c).mul(piv);
      inv.at(j, c) = inv.at(j, c).mul(piv);
    }
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == j || w.at(i, j).is_zero()) continue;
      Scalar fac = w.at(i, j);
      for (std::size_t c = 0; c < cols_; ++c) {
        w.at(i, c) = w.at(i, c).sub(fac.mul(w.at(j, c)));
        inv.at(i, c) = inv.at(i, c).sub(fac.mul(inv.at(j, c)));
      }
    }
  }
  return inv;
}

std::vector<Scalar> Matrix::solve(const std::vector<Scalar>& b) const {
  Matrix m(cfg_, rows_, 1);
  for (std::size_t i = 0; i < rows_; ++i) m.at(i, 0) = b[i];
  Matrix x = inverse().mul(m);
  return x.col(0);
}

bool Matrix::is_integral() const {
  for (const auto& e : a_)
    if (!e.is_integral()) return false;
  return true;
}

Valuation Matrix::min_entry_valuation() const {
  Valuation best = Valuation::infinite();
  for (const auto& e : a_) {
    if (e.is_zero()) continue;
    Valuation v = e.val();
    if (v < best) best = v;
  }
  return best;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (!(a.a_[i] == b.a_[i])) return false;
  return true;
}

}  // namespace ogm
