#include "algfact/deformation.hpp"

#include <algorithm>
#include <thread>

namespace algfact {

namespace {

void require_candidate_shape(const MatchedPair& p, const Matrix& r) {
  if (r.field() != p.field()) throw FieldMismatch("candidate field mismatch");
  if (r.rows() != p.a().dim() || r.cols() != p.x().dim())
    throw DimensionMismatch("candidate must be dimA x dimX");
}

}  // namespace

std::optional<DeformationViolation> is_deformation_map(const MatchedPair& p, const Matrix& r) {
  require_candidate_shape(p, r);
  const std::size_t dx = p.x().dim();
  std::vector<Vec> rc;  // r(x_j)
  rc.reserve(dx);
  for (std::size_t j = 0; j < dx; ++j) rc.push_back(r.col(j));
  for (std::size_t i = 0; i < dx; ++i) {
    for (std::size_t j = 0; j < dx; ++j) {
      Vec lhs = p.a().multiply(rc[i], rc[j]);
      Vec tmp = r.apply(p.x().basis_product(i, j));
      for (std::size_t k = 0; k < lhs.size(); ++k) lhs[k] -= tmp[k];

      Vec inner = p.ax_to_x().apply_right_basis(rc[i], j);
      Vec inner2 = p.xa_to_x().apply_left_basis(i, rc[j]);
      for (std::size_t k = 0; k < inner.size(); ++k) inner[k] += inner2[k];
      Vec rhs = r.apply(inner);
      Vec back = p.ax_to_a().apply_right_basis(rc[i], j);
      for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] -= back[k];
      Vec back2 = p.xa_to_a().apply_left_basis(i, rc[j]);
      for (std::size_t k = 0; k < rhs.size(); ++k) rhs[k] -= back2[k];

      if (lhs != rhs) return DeformationViolation{i, j, std::move(lhs), std::move(rhs)};
    }
  }
  return std::nullopt;
}

DeformationMap DeformationMap::checked(const MatchedPair& p, Matrix r) {
  if (auto v = is_deformation_map(p, r)) {
    throw InvalidDeformationMap("deformation identity fails at basis pair (" +
                                std::to_string(v->x_index) + "," + std::to_string(v->y_index) +
                                ")");
  }
  return DeformationMap(std::move(r));
}

DeformationMap DeformationMap::unchecked(Matrix r) { return DeformationMap(std::move(r)); }

Algebra deform(const MatchedPair& p, const DeformationMap& r) {
  require_candidate_shape(p, r.matrix());
  const std::size_t dx = p.x().dim();
  Algebra xr(p.field(), p.x().names());
  for (std::size_t i = 0; i < dx; ++i) {
    const Vec ri = r.matrix().col(i);
    for (std::size_t j = 0; j < dx; ++j) {
      Vec prod = p.x().basis_product(i, j);
      Vec t1 = p.ax_to_x().apply_right_basis(ri, j);
      Vec t2 = p.xa_to_x().apply_left_basis(i, r.matrix().col(j));
      for (std::size_t k = 0; k < dx; ++k) prod[k] += t1[k] + t2[k];
      xr.set_product(i, j, prod);
    }
  }
  return xr;
}

Subspace lift_complement(const MatchedPair& p, const DeformationMap& r) {
  require_candidate_shape(p, r.matrix());
  const std::size_t da = p.a().dim(), dx = p.x().dim();
  Matrix rows(p.field(), dx, da + dx);
  for (std::size_t i = 0; i < dx; ++i) {
    for (std::size_t k = 0; k < da; ++k) rows.at(i, k) = r.matrix().at(k, i);
    rows.at(i, da + i) = Scalar::one(p.field());
  }
  return Subspace::span(rows);
}

Factorization lifted_factorization(const MatchedPair& p, const DeformationMap& r) {
  Algebra e = bicrossed_product(p);
  const std::size_t da = p.a().dim();
  Matrix a_rows(p.field(), da, e.dim());
  for (std::size_t i = 0; i < da; ++i) a_rows.at(i, i) = Scalar::one(p.field());
  return Factorization{std::move(e), Subspace::span(a_rows), lift_complement(p, r)};
}

DeformationMap extract_deformation(const Factorization& f, const Subspace& other_x) {
  if (auto v = check_factorization(f))
    throw NotAComplement("reference data: " + v->detail);
  Factorization other{f.ambient, f.a_part, other_x};
  if (auto v = check_factorization(other))
    throw NotAComplement("candidate complement: " + v->detail);
  const std::size_t da = f.a_part.dim(), dx = f.x_part.dim();
  Matrix r(f.ambient.field(), da, dx);
  for (std::size_t i = 0; i < dx; ++i) {
    SplitCoords sc = split_along(other, f.x_part.basis().row(i));
    for (std::size_t k = 0; k < da; ++k) r.at(k, i) = -sc.a_coords[k];
  }
  MatchedPair pair = canonical_matched_pair(f);
  return DeformationMap::checked(pair, std::move(r));
}

std::vector<DeformationMap> enumerate_deformation_maps(const MatchedPair& p,
                                                       const EnumerationLimits& limits) {
  if (!p.field().is_prime_field()) throw FieldNotFinite();
  const std::size_t da = p.a().dim(), dx = p.x().dim();
  MatrixStream stream(p.field(), da, dx, limits.budget);
  const std::uint64_t total = stream.size();
  const unsigned workers = limits.workers == 0 ? 1 : limits.workers;

  auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& hits) {
    Matrix cand(p.field(), da, dx);
    for (std::uint64_t idx = lo; idx < hi; ++idx) {
      stream.decode_into(idx, cand);
      if (!is_deformation_map(p, cand)) hits.push_back(idx);
    }
  };

  std::vector<std::vector<std::uint64_t>> hits(workers);
  if (workers == 1) {
    scan(0, total, hits[0]);
  } else {
    std::vector<std::thread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
      const std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
      pool.emplace_back(scan, lo, hi, std::ref(hits[w]));
    }
    for (auto& t : pool) t.join();
  }

  std::vector<DeformationMap> found;  // chunks are index-ordered, so this is lexicographic
  for (const auto& part : hits)
    for (std::uint64_t idx : part) found.push_back(DeformationMap::unchecked(stream.at(idx)));
  return found;
}

TriangularFamily::TriangularFamily(const FieldSpec& f, std::size_t n) : field_(f), n_(n) {
  if (n < 2) throw IndexError("family needs n >= 2");
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t t = 1; t <= n; ++t)
      if (k > t) lower_.emplace_back(k, t);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      if (i <= j) upper_.emplace_back(i, j);
  v_.assign(lower_.size() * upper_.size(), Scalar::zero(f));
}

std::size_t TriangularFamily::index_of(std::size_t k, std::size_t t, std::size_t i,
                                       std::size_t j) const {
  if (k > n_ || t < 1 || k <= t) throw IndexError("lower index (k,t) needs n >= k > t >= 1");
  if (j > n_ || i < 1 || i > j) throw IndexError("upper index (i,j) needs 1 <= i <= j <= n");
  const auto lo = std::lower_bound(lower_.begin(), lower_.end(), std::make_pair(k, t));
  const auto up = std::lower_bound(upper_.begin(), upper_.end(), std::make_pair(i, j));
  return static_cast<std::size_t>(lo - lower_.begin()) * upper_.size() +
         static_cast<std::size_t>(up - upper_.begin());
}

const Scalar& TriangularFamily::at(std::size_t k, std::size_t t, std::size_t i,
                                   std::size_t j) const {
  return v_[index_of(k, t, i, j)];
}

void TriangularFamily::set(std::size_t k, std::size_t t, std::size_t i, std::size_t j,
                           const Scalar& v) {
  if (v.field() != field_) throw FieldMismatch("family entry field mismatch");
  v_[index_of(k, t, i, j)] = v;
}

TriangularFamily TriangularFamily::from_matrix(std::size_t n, const Matrix& r) {
  TriangularFamily fam(r.field(), n);
  if (r.rows() != fam.lower_.size() || r.cols() != fam.upper_.size())
    throw DimensionMismatch("matrix shape does not match the triangular split of this n");
  for (std::size_t row = 0; row < fam.lower_.size(); ++row)
    for (std::size_t col = 0; col < fam.upper_.size(); ++col)
      fam.v_[row * fam.upper_.size() + col] = r.at(row, col);
  return fam;
}

Matrix TriangularFamily::to_matrix() const {
  Matrix r(field_, lower_.size(), upper_.size());
  for (std::size_t row = 0; row < lower_.size(); ++row)
    for (std::size_t col = 0; col < upper_.size(); ++col)
      r.at(row, col) = v_[row * upper_.size() + col];
  return r;
}

std::optional<ScalarConditionViolation> triangular_scalar_condition(const TriangularFamily& a) {
  const std::size_t n = a.n();
  const FieldSpec f = a.field();
  const Scalar zero = Scalar::zero(f);
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t q = 1; q < k; ++q) {
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = i; j <= n; ++j) {
          for (std::size_t r = 1; r <= n; ++r) {
            for (std::size_t s = r; s <= n; ++s) {
              Scalar lhs = zero;
              for (std::size_t t = q + 1; t < k; ++t) lhs += a.at(k, t, i, j) * a.at(t, q, r, s);
              Scalar rhs = zero;
              if (j == r) rhs += a.at(k, q, i, s);
              for (std::size_t u = r + 1; u <= s; ++u) rhs += a.at(u, r, i, j) * a.at(k, q, u, s);
              for (std::size_t v = i; v < j; ++v) rhs += a.at(j, v, r, s) * a.at(k, q, i, v);
              if (s == q) rhs -= a.at(k, r, i, j);
              if (k == i) rhs -= a.at(j, q, r, s);
              if (lhs != rhs)
                return ScalarConditionViolation{k, q, i, j, r, s, lhs, rhs};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace algfact
