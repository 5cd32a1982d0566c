#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "odca/rational.hpp"

namespace odca {

using Vector = std::vector<Rational>;

struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Rational> a;  // row-major

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

  Rational& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

  static Matrix identity(std::size_t n);

  friend bool operator==(const Matrix&, const Matrix&) = default;
};

Matrix mat_mul(const Matrix& a, const Matrix& b);
Vector vec_mat(const Vector& v, const Matrix& m);  // row vector · matrix
Vector mat_vec(const Matrix& m, const Vector& v);  // matrix · column vector
Rational dot(const Vector& a, const Vector& b);
bool is_zero_vector(const Vector& v);

// Vector space represented by its canonical RREF basis (leading entries 1,
// zeros above and below each pivot, pivot columns strictly increasing), so
// equal spans have identical representations.
class VectorSpace {
public:
  explicit VectorSpace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static VectorSpace full(std::size_t ambient_dim);
  static VectorSpace span_of(std::size_t ambient_dim, const std::vector<Vector>& vs);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<Vector>& basis() const { return basis_; }
  bool is_full() const { return basis_.size() == ambient_; }

  // Returns true iff v was independent of the current basis (and was added).
  bool insert(const Vector& v);
  bool contains(const Vector& v) const;

  friend bool operator==(const VectorSpace&, const VectorSpace&) = default;

private:
  std::size_t ambient_;
  std::vector<Vector> basis_;
  std::vector<std::size_t> pivots_;
};

std::pair<VectorSpace, bool> span_insert(VectorSpace s, const Vector& v);
bool in_span(const VectorSpace& s, const Vector& v);

// {y : y·a ∈ v}; ambient dimension a.rows.
VectorSpace preimage_space(const VectorSpace& v, const Matrix& a);
// Row space of a.
VectorSpace image_space(const Matrix& a);
// {y : y·a = 0}; ambient dimension a.rows.
VectorSpace left_kernel(const Matrix& a);

struct LinearEquation {
  Vector coeffs;
  Rational rhs;
};

// Any exact solution of coeffs·x = rhs for all equations, with free
// variables fixed to 0; nullopt when inconsistent.
std::optional<Vector> solve_linear(const std::vector<LinearEquation>& equations,
                                   std::size_t unknowns);

}  // namespace odca
