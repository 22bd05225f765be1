#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "algfact/scalar.hpp"

namespace algfact {

using Vec = std::vector<Scalar>;

Vec vec_zero(const FieldSpec& f, std::size_t n);
Vec vec_unit(const FieldSpec& f, std::size_t n, std::size_t i);
bool vec_is_zero(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scaled(const Scalar& c, const Vec& v);
void vec_add_scaled(Vec& acc, const Scalar& c, const Vec& v);

/* Dense row-major matrix over a single field. */
class Matrix {
 public:
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_rows(const FieldSpec& f, const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const FieldSpec& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c);
  const Scalar& at(std::size_t r, std::size_t c) const;
  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);

  Matrix operator*(const Matrix& o) const;
  Vec apply(const Vec& v) const;  // this * column vector
  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> e_;
};

struct RrefResult {
  Matrix mat;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column per pivot row
};
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/* First solution of a x = b with every free variable pinned to zero;
 * nullopt when inconsistent. */
std::optional<Vec> solve(const Matrix& a, const Vec& b);

/* Row space in reduced row echelon form; the basis is canonical, so
 * subspace equality is entrywise equality. */
class Subspace {
 public:
  static Subspace span(const Matrix& rows);
  static Subspace zero(const FieldSpec& f, std::size_t ambient);
  static Subspace full(const FieldSpec& f, std::size_t ambient);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const FieldSpec& field() const { return basis_.field(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  std::optional<Vec> coordinates(const Vec& v) const;
  bool contains(const Vec& v) const { return coordinates(v).has_value(); }
  Vec from_coordinates(const Vec& coords) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/* p^exp clamped to the u64 maximum. */
std::uint64_t pow_u64_saturating(std::uint64_t base, std::uint64_t exp);

/* All rows x cols matrices over F_p, indexable in lexicographic row-major
 * order (entry residues compared as 0 < 1 < ... < p-1).  Construction fails
 * with BudgetExceeded when p^(rows*cols) > budget, so callers can split the
 * index range across workers safely. */
class MatrixStream {
 public:
  MatrixStream(const FieldSpec& f, std::size_t rows, std::size_t cols, std::uint64_t budget);
  std::uint64_t size() const { return size_; }
  Matrix at(std::uint64_t index) const;
  void decode_into(std::uint64_t index, Matrix& out) const;

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::uint64_t size_;
};

std::uint64_t gl_order(const FieldSpec& f, std::size_t n);  // saturating

/* Visits the invertible n x n matrices over F_p in lexicographic order;
 * stops early when the callback returns false.  The budget bounds
 * |GL_n(F_p)|, not the p^(n^2) candidates scanned. */
void for_each_gl(const FieldSpec& f, std::size_t n, std::uint64_t budget,
                 const std::function<bool(const Matrix&)>& visit);

}  // namespace algfact
