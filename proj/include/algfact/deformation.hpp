#pragma once

#include "algfact/matched_pair.hpp"

namespace algfact {

/* Candidate r is a dimA x dimX matrix: column j = r(x_j) in A-coordinates.
 * r is a deformation map when for all x, y in X
 *   r(x) r(y) - r(xy) = r([r(x)*y]_X + [x*r(y)]_X) - [r(x)*y]_A - [x*r(y)]_A
 * with the mixed products split through the pair's actions. */
struct DeformationViolation {
  std::size_t x_index, y_index;
  Vec lhs, rhs;  // values in A
};
std::optional<DeformationViolation> is_deformation_map(const MatchedPair& p, const Matrix& r);

class DeformationMap {
 public:
  static DeformationMap checked(const MatchedPair& p, Matrix r);  // InvalidDeformationMap
  static DeformationMap unchecked(Matrix r);

  const Matrix& matrix() const { return m_; }
  Vec apply(const Vec& x_coords) const { return m_.apply(x_coords); }
  std::size_t a_dim() const { return m_.rows(); }
  std::size_t x_dim() const { return m_.cols(); }

  friend bool operator==(const DeformationMap& a, const DeformationMap& b) {
    return a.m_ == b.m_;
  }

 private:
  explicit DeformationMap(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/* X with the twisted product x *_r y = xy + [r(x)*y]_X + [x*r(y)]_X; always
 * associative when r is a deformation map. */
Algebra deform(const MatchedPair& p, const DeformationMap& r);

/* Graph of r inside the bicrossed product: span of (r(x_i), x_i).  A
 * complement of the A-block. */
Subspace lift_complement(const MatchedPair& p, const DeformationMap& r);

/* Bicrossed product together with its A-block and the lifted complement. */
Factorization lifted_factorization(const MatchedPair& p, const DeformationMap& r);

/* Reads a deformation map back off a complement: split each reference-X
 * basis vector as u + v along A + other_x; then r = -u.  f.x_part is the
 * reference complement that fixes the matched pair. */
DeformationMap extract_deformation(const Factorization& f, const Subspace& other_x);

struct EnumerationLimits {
  std::uint64_t budget = 10'000'000;
  unsigned workers = 1;
};

/* All deformation maps over a prime field, in lexicographic matrix order.
 * Deterministic for any worker count. */
std::vector<DeformationMap> enumerate_deformation_maps(const MatchedPair& p,
                                                       const EnumerationLimits& limits = {});

/* Scalar families alpha^{kt}_{ij} indexed by a strictly-lower position
 * (k, t), k > t, and an upper position (i, j), i <= j, all 1-based.  These
 * encode candidate maps from the upper-triangular block of M_n into the
 * strictly lower one. */
class TriangularFamily {
 public:
  TriangularFamily(const FieldSpec& f, std::size_t n);

  std::size_t n() const { return n_; }
  const FieldSpec& field() const { return field_; }
  std::size_t lower_count() const { return lower_.size(); }
  std::size_t upper_count() const { return upper_.size(); }

  const Scalar& at(std::size_t k, std::size_t t, std::size_t i, std::size_t j) const;
  void set(std::size_t k, std::size_t t, std::size_t i, std::size_t j, const Scalar& v);

  /* rows = strictly-lower positions (k,t) in lexicographic order, columns =
   * upper positions (i,j) in lexicographic order; matches the coordinate
   * bases of the triangular split of M_n. */
  static TriangularFamily from_matrix(std::size_t n, const Matrix& r);
  Matrix to_matrix() const;

 private:
  std::size_t index_of(std::size_t k, std::size_t t, std::size_t i, std::size_t j) const;
  FieldSpec field_;
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> lower_, upper_;
  std::vector<Scalar> v_;
};

/* Closed-form deformation-map test for the triangular split: for all
 * k > q, i <= j, r <= s (1-based),
 *   sum_{q<t<k} a[kt][ij] a[tq][rs]
 *     = d_{jr} a[kq][is] + sum_{r<u<=s} a[ur][ij] a[kq][us]
 *       + sum_{i<=v<j} a[jv][rs] a[kq][iv] - a[kr][ij] d_{sq} - a[jq][rs] d_{ki}.
 * Returns the first violated tuple in lexicographic (k,q,i,j,r,s) order. */
struct ScalarConditionViolation {
  std::size_t k, q, i, j, r, s;
  Scalar lhs, rhs;
};
std::optional<ScalarConditionViolation> triangular_scalar_condition(const TriangularFamily& a);

}  // namespace algfact
