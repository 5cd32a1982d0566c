#include "odca/linalg.hpp"

#include <algorithm>

#include "odca/errors.hpp"

namespace odca {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols != b.rows) throw InputError("mat_mul: dimension mismatch");
  Matrix r(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t k = 0; k < a.cols; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols; ++j) {
        const Rational& bkj = b.at(k, j);
        if (!bkj.is_zero()) r.at(i, j) += aik * bkj;
      }
    }
  }
  return r;
}

Vector vec_mat(const Vector& v, const Matrix& m) {
  if (v.size() != m.rows) throw InputError("vec_mat: dimension mismatch");
  Vector r(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (v[i].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols; ++j) {
      const Rational& mij = m.at(i, j);
      if (!mij.is_zero()) r[j] += v[i] * mij;
    }
  }
  return r;
}

Vector mat_vec(const Matrix& m, const Vector& v) {
  if (v.size() != m.cols) throw InputError("mat_vec: dimension mismatch");
  Vector r(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) {
      if (!m.at(i, j).is_zero() && !v[j].is_zero()) r[i] += m.at(i, j) * v[j];
    }
  }
  return r;
}

Rational dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw InputError("dot: dimension mismatch");
  Rational r;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_zero() && !b[i].is_zero()) r += a[i] * b[i];
  }
  return r;
}

bool is_zero_vector(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

VectorSpace VectorSpace::full(std::size_t ambient_dim) {
  VectorSpace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    Vector e(ambient_dim);
    e[i] = 1;
    s.basis_.push_back(std::move(e));
    s.pivots_.push_back(i);
  }
  return s;
}

VectorSpace VectorSpace::span_of(std::size_t ambient_dim, const std::vector<Vector>& vs) {
  VectorSpace s(ambient_dim);
  for (const Vector& v : vs) s.insert(v);
  return s;
}

bool VectorSpace::insert(const Vector& v) {
  if (v.size() != ambient_) throw InputError("span_insert: dimension mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_[i][j];
  }
  std::size_t lead = ambient_;
  for (std::size_t j = 0; j < ambient_; ++j) {
    if (!r[j].is_zero()) {
      lead = j;
      break;
    }
  }
  if (lead == ambient_) return false;
  const Rational inv = Rational(1) / r[lead];
  for (std::size_t j = lead; j < ambient_; ++j) r[j] *= inv;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = basis_[i][lead];
    if (c.is_zero()) continue;
    for (std::size_t j = lead; j < ambient_; ++j) basis_[i][j] -= c * r[j];
  }
  const auto pos = std::upper_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  basis_.insert(basis_.begin() + pos, std::move(r));
  pivots_.insert(pivots_.begin() + pos, lead);
  return true;
}

bool VectorSpace::contains(const Vector& v) const {
  if (v.size() != ambient_) throw InputError("in_span: dimension mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rational c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_; ++j) r[j] -= c * basis_[i][j];
  }
  return is_zero_vector(r);
}

std::pair<VectorSpace, bool> span_insert(VectorSpace s, const Vector& v) {
  const bool independent = s.insert(v);
  return {std::move(s), independent};
}

bool in_span(const VectorSpace& s, const Vector& v) { return s.contains(v); }

VectorSpace left_kernel(const Matrix& a) {
  // Kernel of aᵀ: row-reduce aᵀ, then one basis vector per free column.
  const std::size_t rows = a.cols, cols = a.rows;
  std::vector<Vector> m(rows, Vector(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a.at(j, i);
  }
  std::vector<std::size_t> pivot_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    const Rational inv = Rational(1) / m[rank][col];
    for (std::size_t j = col; j < cols; ++j) m[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      const Rational c = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= c * m[rank][j];
    }
    pivot_of_row.push_back(col);
    ++rank;
  }
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : pivot_of_row) is_pivot[p] = true;
  std::vector<Vector> kernel;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector y(cols);
    y[f] = 1;
    for (std::size_t i = 0; i < rank; ++i) y[pivot_of_row[i]] = -m[i][f];
    kernel.push_back(std::move(y));
  }
  return VectorSpace::span_of(cols, kernel);
}

VectorSpace preimage_space(const VectorSpace& v, const Matrix& a) {
  if (a.cols != v.ambient_dim()) throw InputError("preimage_space: dimension mismatch");
  // x ∈ v iff x equals its own projection on the basis (RREF: coefficients
  // are read off at the pivots), i.e. x·r = 0 for the residual map r below.
  const std::size_t n = v.ambient_dim();
  Matrix r = Matrix::identity(n);
  const auto& basis = v.basis();
  for (const Vector& b : basis) {
    std::size_t pivot = 0;
    while (b[pivot].is_zero()) ++pivot;
    for (std::size_t j = 0; j < n; ++j) r.at(pivot, j) -= b[j];
  }
  return left_kernel(mat_mul(a, r));
}

VectorSpace image_space(const Matrix& a) {
  VectorSpace s(a.cols);
  for (std::size_t i = 0; i < a.rows; ++i) {
    Vector row(a.cols);
    for (std::size_t j = 0; j < a.cols; ++j) row[j] = a.at(i, j);
    s.insert(row);
  }
  return s;
}

std::optional<Vector> solve_linear(const std::vector<LinearEquation>& equations,
                                   std::size_t unknowns) {
  std::vector<Vector> m;
  for (const LinearEquation& eq : equations) {
    if (eq.coeffs.size() != unknowns) throw InputError("solve_linear: dimension mismatch");
    Vector row = eq.coeffs;
    row.push_back(eq.rhs);
    m.push_back(std::move(row));
  }
  const std::size_t rows = m.size();
  std::vector<std::size_t> pivot_of_row;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < unknowns && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][col].is_zero()) ++piv;
    if (piv == rows) continue;
    std::swap(m[rank], m[piv]);
    const Rational inv = Rational(1) / m[rank][col];
    for (std::size_t j = col; j <= unknowns; ++j) m[rank][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      const Rational c = m[i][col];
      for (std::size_t j = col; j <= unknowns; ++j) m[i][j] -= c * m[rank][j];
    }
    pivot_of_row.push_back(col);
    ++rank;
  }
  for (std::size_t i = rank; i < rows; ++i) {
    if (!m[i][unknowns].is_zero()) return std::nullopt;
  }
  Vector x(unknowns);
  for (std::size_t i = 0; i < rank; ++i) x[pivot_of_row[i]] = m[i][unknowns];
  return x;
}

}  // namespace odca
