#include "algfact/linalg.hpp"

#include <algorithm>

namespace algfact {

Vec vec_zero(const FieldSpec& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Vec vec_unit(const FieldSpec& f, std::size_t n, std::size_t i) {
  if (i >= n) throw IndexError("unit vector index out of range");
  Vec v = vec_zero(f, n);
  v[i] = Scalar::one(f);
  return v;
}

bool vec_is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

static void require_same_size(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sizes differ");
}

Vec vec_add(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  require_same_size(a, b);
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vec vec_scaled(const Scalar& c, const Vec& v) {
  Vec r = v;
  for (auto& x : r) x *= c;
  return r;
}

void vec_add_scaled(Vec& acc, const Scalar& c, const Vec& v) {
  require_same_size(acc, v);
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (!v[i].is_zero()) acc[i] += c * v[i];
  }
}

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), e_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Matrix Matrix::from_rows(const FieldSpec& f, const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Scalar& Matrix::at(std::size_t r, std::size_t c) {
  if (r >= rows_ || c >= cols_) throw IndexError("matrix index out of range");
  return e_[r * cols_ + c];
}

const Scalar& Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw IndexError("matrix index out of range");
  return e_[r * cols_ + c];
}

Vec Matrix::row(std::size_t r) const {
  if (r >= rows_) throw IndexError("row out of range");
  return Vec(e_.begin() + r * cols_, e_.begin() + (r + 1) * cols_);
}

Vec Matrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (field_ != o.field_) throw FieldMismatch("matrix fields differ");
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix r(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const Scalar& b = o.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  }
  return r;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix apply shape mismatch");
  Vec r = vec_zero(field_, rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const Scalar& a = at(i, j);
      if (!a.is_zero()) r[i] += a * v[j];
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.field_ != b.field_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.e_.size(); ++i)
    if (a.e_[i] != b.e_[i]) return false;
  return true;
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t sel = r;
    while (sel < a.rows() && a.at(sel, c).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(sel, j), a.at(r, j));
    }
    const Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      const Scalar f = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("inverse needs a square matrix");
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar::one(m.field());
  }
  RrefResult rr = rref(aug);
  if (rr.rank < n || rr.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = rr.mat.at(i, n + j);
  return inv;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve shape mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  RrefResult rr = rref(aug);
  for (std::size_t r = 0; r < rr.rank; ++r) {
    if (rr.pivots[r] == a.cols()) return std::nullopt;  // 0 = 1 row
  }
  Vec x = vec_zero(a.field(), a.cols());
  for (std::size_t r = 0; r < rr.rank; ++r) x[rr.pivots[r]] = rr.mat.at(r, a.cols());
  return x;
}

Subspace Subspace::span(const Matrix& rows) {
  RrefResult rr = rref(rows);
  Matrix basis(rows.field(), rr.rank, rows.cols());
  for (std::size_t r = 0; r < rr.rank; ++r) basis.set_row(r, rr.mat.row(r));
  return Subspace(std::move(basis), std::move(rr.pivots));
}

Subspace Subspace::zero(const FieldSpec& f, std::size_t ambient) {
  return Subspace(Matrix(f, 0, ambient), {});
}

Subspace Subspace::full(const FieldSpec& f, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(f, ambient), std::move(piv));
}

std::optional<Vec> Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("ambient size mismatch");
  /* RREF basis: the coordinate on row r can be read off at its pivot column */
  Vec coords;
  coords.reserve(dim());
  for (std::size_t r = 0; r < dim(); ++r) coords.push_back(v[pivots_[r]]);
  Vec rebuilt = vec_zero(field(), ambient_dim());
  for (std::size_t r = 0; r < dim(); ++r) vec_add_scaled(rebuilt, coords[r], basis_.row(r));
  for (std::size_t i = 0; i < v.size(); ++i)
    if (rebuilt[i] != v[i]) return std::nullopt;
  return coords;
}

Vec Subspace::from_coordinates(const Vec& coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("coordinate size mismatch");
  Vec v = vec_zero(field(), ambient_dim());
  for (std::size_t r = 0; r < dim(); ++r) vec_add_scaled(v, coords[r], basis_.row(r));
  return v;
}

bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

std::uint64_t pow_u64_saturating(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

MatrixStream::MatrixStream(const FieldSpec& f, std::size_t rows, std::size_t cols,
                           std::uint64_t budget)
    : field_(f), rows_(rows), cols_(cols) {
  if (!f.is_prime_field()) throw FieldNotFinite();
  size_ = pow_u64_saturating(f.modulus(), static_cast<std::uint64_t>(rows) * cols);
  if (size_ > budget) throw BudgetExceeded(size_, budget);
}

void MatrixStream::decode_into(std::uint64_t index, Matrix& out) const {
  if (index >= size_) throw IndexError("stream index out of range");
  if (out.rows() != rows_ || out.cols() != cols_ || out.field() != field_)
    throw DimensionMismatch("decode target shape mismatch");
  const std::uint64_t p = field_.modulus();
  /* last entry is the fastest-moving digit */
  for (std::size_t k = rows_ * cols_; k-- > 0;) {
    const std::size_t r = k / cols_, c = k % cols_;
    out.at(r, c) = Scalar::of_int(field_, static_cast<long long>(index % p));
    index /= p;
  }
}

Matrix MatrixStream::at(std::uint64_t index) const {
  Matrix m(field_, rows_, cols_);
  decode_into(index, m);
  return m;
}

std::uint64_t gl_order(const FieldSpec& f, std::size_t n) {
  if (!f.is_prime_field()) throw FieldNotFinite();
  const std::uint64_t p = f.modulus();
  const std::uint64_t pn = pow_u64_saturating(p, n);
  if (pn == UINT64_MAX) return UINT64_MAX;
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t factor = pn - pow_u64_saturating(p, i);
    if (factor != 0 && r > UINT64_MAX / factor) return UINT64_MAX;
    r *= factor;
  }
  return r;
}

void for_each_gl(const FieldSpec& f, std::size_t n, std::uint64_t budget,
                 const std::function<bool(const Matrix&)>& visit) {
  const std::uint64_t order = gl_order(f, n);
  if (order > budget) throw BudgetExceeded(order, budget);
  MatrixStream all(f, n, n, UINT64_MAX);
  Matrix m(f, n, n);
  for (std::uint64_t i = 0; i < all.size(); ++i) {
    all.decode_into(i, m);
    if (rank(m) != n) continue;
    if (!visit(m)) return;
  }
}

}  // namespace algfact
