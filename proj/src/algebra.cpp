#include "algfact/algebra.hpp"

namespace algfact {

Algebra::Algebra(const FieldSpec& f, std::size_t dim)
    : field_(f), dim_(dim), c_(dim * dim * dim, Scalar::zero(f)) {
  names_.reserve(dim);
  for (std::size_t i = 0; i < dim; ++i) names_.push_back("b" + std::to_string(i));
}

Algebra::Algebra(const FieldSpec& f, std::vector<std::string> names)
    : Algebra(f, names.size()) {
  names_ = std::move(names);
}

void Algebra::set_names(std::vector<std::string> names) {
  if (names.size() != dim_) throw DimensionMismatch("name count mismatch");
  names_ = std::move(names);
}

const Scalar& Algebra::c(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw IndexError("structure index out of range");
  return c_[(i * dim_ + j) * dim_ + k];
}

void Algebra::set_c(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  if (i >= dim_ || j >= dim_ || k >= dim_) throw IndexError("structure index out of range");
  if (v.field() != field_) throw FieldMismatch("structure constant field mismatch");
  c_[(i * dim_ + j) * dim_ + k] = v;
}

void Algebra::set_product(std::size_t i, std::size_t j, const Vec& value) {
  if (value.size() != dim_) throw DimensionMismatch("product vector size mismatch");
  for (std::size_t k = 0; k < dim_; ++k) set_c(i, j, k, value[k]);
}

Vec Algebra::basis_product(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw IndexError("basis index out of range");
  const auto* base = &c_[(i * dim_ + j) * dim_];
  return Vec(base, base + dim_);
}

Vec Algebra::multiply(const Vec& u, const Vec& v) const {
  if (u.size() != dim_ || v.size() != dim_) throw DimensionMismatch("multiply size mismatch");
  Vec r = vec_zero(field_, dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (v[j].is_zero()) continue;
      const Scalar uv = u[i] * v[j];
      const auto* base = &c_[(i * dim_ + j) * dim_];
      for (std::size_t k = 0; k < dim_; ++k) {
        if (!base[k].is_zero()) r[k] += uv * base[k];
      }
    }
  }
  return r;
}

bool Algebra::same_structure(const Algebra& o) const {
  if (field_ != o.field_ || dim_ != o.dim_) return false;
  for (std::size_t t = 0; t < c_.size(); ++t)
    if (c_[t] != o.c_[t]) return false;
  return true;
}

std::optional<AssocViolation> check_associative(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vec ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        Vec lhs = a.multiply(ij, vec_unit(a.field(), n, k));
        Vec rhs = a.multiply(vec_unit(a.field(), n, i), a.basis_product(j, k));
        if (lhs != rhs) return AssocViolation{i, j, k, std::move(lhs), std::move(rhs)};
      }
    }
  }
  return std::nullopt;
}

std::optional<Vec> find_unit(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return std::nullopt;
  /* u e_j = e_j and e_j u = e_j, linear in u */
  Matrix sys(a.field(), 2 * n * n, n);
  Vec rhs = vec_zero(a.field(), 2 * n * n);
  std::size_t row = 0;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) sys.at(row, i) = a.c(i, j, k);
      rhs[row] = j == k ? Scalar::one(a.field()) : Scalar::zero(a.field());
      ++row;
      for (std::size_t i = 0; i < n; ++i) sys.at(row, i) = a.c(j, i, k);
      rhs[row] = j == k ? Scalar::one(a.field()) : Scalar::zero(a.field());
      ++row;
    }
  }
  return solve(sys, rhs);
}

bool is_subalgebra(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionMismatch("subspace ambient mismatch");
  if (s.field() != a.field()) throw FieldMismatch("subspace field mismatch");
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      if (!s.contains(a.multiply(s.basis().row(i), s.basis().row(j)))) return false;
    }
  }
  return true;
}

bool is_two_sided_ideal(const Algebra& a, const Subspace& s) {
  if (s.ambient_dim() != a.dim()) throw DimensionMismatch("subspace ambient mismatch");
  if (s.field() != a.field()) throw FieldMismatch("subspace field mismatch");
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vec b = s.basis().row(i);
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec ej = vec_unit(a.field(), a.dim(), j);
      if (!s.contains(a.multiply(b, ej))) return false;
      if (!s.contains(a.multiply(ej, b))) return false;
    }
  }
  return true;
}

Algebra subalgebra_on_basis(const Algebra& a, const Subspace& s) {
  if (!is_subalgebra(a, s)) throw NotASubalgebra("subspace is not closed under the product");
  Algebra sub(a.field(), s.dim());
  std::vector<std::string> names;
  for (std::size_t r = 0; r < s.dim(); ++r) {
    /* keep the ambient label when the basis row is a plain basis vector */
    const Vec row = s.basis().row(r);
    std::size_t nonzero = 0, where = 0;
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_zero()) {
        ++nonzero;
        where = c;
      }
    }
    if (nonzero == 1 && row[where].is_one())
      names.push_back(a.names()[where]);
    else
      names.push_back("v" + std::to_string(r));
  }
  sub.set_names(std::move(names));
  for (std::size_t i = 0; i < s.dim(); ++i) {
    for (std::size_t j = 0; j < s.dim(); ++j) {
      const Vec prod = a.multiply(s.basis().row(i), s.basis().row(j));
      sub.set_product(i, j, *s.coordinates(prod));
    }
  }
  return sub;
}

Algebra quotient_algebra(const Algebra& a, const Subspace& ideal) {
  if (!is_two_sided_ideal(a, ideal)) throw NotAnIdeal("subspace is not a two-sided ideal");
  std::vector<bool> is_pivot(a.dim(), false);
  for (std::size_t p : ideal.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!is_pivot[i]) keep.push_back(i);

  auto reduce = [&](Vec v) {
    for (std::size_t r = 0; r < ideal.dim(); ++r) {
      const Scalar f = v[ideal.pivots()[r]];
      if (f.is_zero()) continue;
      for (std::size_t c = 0; c < v.size(); ++c) v[c] -= f * ideal.basis().at(r, c);
    }
    return v;
  };

  Algebra q(a.field(), keep.size());
  std::vector<std::string> names;
  for (std::size_t i : keep) names.push_back(a.names()[i]);
  q.set_names(std::move(names));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      const Vec red = reduce(a.basis_product(keep[i], keep[j]));
      Vec coords;
      coords.reserve(keep.size());
      for (std::size_t k : keep) coords.push_back(red[k]);
      q.set_product(i, j, coords);
    }
  }
  return q;
}

std::optional<FactorizationViolation> check_factorization(const Factorization& f) {
  const Algebra& e = f.ambient;
  if (f.a_part.ambient_dim() != e.dim() || f.x_part.ambient_dim() != e.dim())
    throw DimensionMismatch("factorization ambient mismatch");
  if (!is_subalgebra(e, f.a_part))
    return FactorizationViolation{FactorizationDefect::a_not_subalgebra,
                                  "first part is not a subalgebra"};
  if (!is_subalgebra(e, f.x_part))
    return FactorizationViolation{FactorizationDefect::x_not_subalgebra,
                                  "second part is not a subalgebra"};
  if (f.a_part.dim() + f.x_part.dim() != e.dim())
    return FactorizationViolation{
        FactorizationDefect::dimension_sum,
        "part dimensions " + std::to_string(f.a_part.dim()) + "+" +
            std::to_string(f.x_part.dim()) + " do not sum to " + std::to_string(e.dim())};
  Matrix stacked(e.field(), f.a_part.dim() + f.x_part.dim(), e.dim());
  for (std::size_t r = 0; r < f.a_part.dim(); ++r) stacked.set_row(r, f.a_part.basis().row(r));
  for (std::size_t r = 0; r < f.x_part.dim(); ++r)
    stacked.set_row(f.a_part.dim() + r, f.x_part.basis().row(r));
  if (rank(stacked) != e.dim())
    return FactorizationViolation{FactorizationDefect::overlap,
                                  "parts intersect nontrivially"};
  return std::nullopt;
}

SplitCoords split_along(const Factorization& f, const Vec& v) {
  const std::size_t da = f.a_part.dim(), dx = f.x_part.dim();
  if (v.size() != f.ambient.dim()) throw DimensionMismatch("split size mismatch");
  Matrix cols(f.ambient.field(), f.ambient.dim(), da + dx);
  for (std::size_t c = 0; c < da; ++c)
    for (std::size_t r = 0; r < f.ambient.dim(); ++r)
      cols.at(r, c) = f.a_part.basis().at(c, r);
  for (std::size_t c = 0; c < dx; ++c)
    for (std::size_t r = 0; r < f.ambient.dim(); ++r)
      cols.at(r, da + c) = f.x_part.basis().at(c, r);
  auto sol = solve(cols, v);
  if (!sol) throw NotAFactorization("vector does not split along the given parts");
  return SplitCoords{Vec(sol->begin(), sol->begin() + da), Vec(sol->begin() + da, sol->end())};
}

}  // namespace algfact
