#pragma once

#include <array>
#include <optional>

#include "algfact/algebra.hpp"

namespace algfact {

/* Bilinear map (u, v) -> w given on basis pairs. */
class BilinearMap {
 public:
  BilinearMap(const FieldSpec& f, std::size_t left_dim, std::size_t right_dim,
              std::size_t out_dim);

  std::size_t left_dim() const { return left_; }
  std::size_t right_dim() const { return right_; }
  std::size_t out_dim() const { return out_; }
  const FieldSpec& field() const { return field_; }

  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const;
  void set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
  void set_value(std::size_t i, std::size_t j, const Vec& value);
  Vec value(std::size_t i, std::size_t j) const;

  Vec apply(const Vec& u, const Vec& v) const;
  Vec apply_left_basis(std::size_t i, const Vec& v) const;
  Vec apply_right_basis(const Vec& u, std::size_t j) const;
  bool is_zero() const;

  friend bool operator==(const BilinearMap&, const BilinearMap&);

 private:
  FieldSpec field_;
  std::size_t left_, right_, out_;
  std::vector<Scalar> t_;  // ((i*right + j)*out + k)
};

/* Matched pair of algebras (A, X) with the four mixed-product components:
 *   x * a = xa_to_a(x, a) in A  +  xa_to_x(x, a) in X
 *   a * x = ax_to_a(a, x) in A  +  ax_to_x(a, x) in X
 * Orientation: xa_to_* is indexed (x-basis, a-basis), ax_to_* by (a, x). */
class MatchedPair {
 public:
  MatchedPair(Algebra a, Algebra x, BilinearMap xa_to_a, BilinearMap xa_to_x,
              BilinearMap ax_to_a, BilinearMap ax_to_x);
  static MatchedPair with_trivial_actions(Algebra a, Algebra x);

  const Algebra& a() const { return a_; }
  const Algebra& x() const { return x_; }
  const FieldSpec& field() const { return a_.field(); }
  const BilinearMap& xa_to_a() const { return xa_to_a_; }
  const BilinearMap& xa_to_x() const { return xa_to_x_; }
  const BilinearMap& ax_to_a() const { return ax_to_a_; }
  const BilinearMap& ax_to_x() const { return ax_to_x_; }
  BilinearMap& mutable_action(int which);  // 0..3 in the order above, for tests

 private:
  Algebra a_, x_;
  BilinearMap xa_to_a_, xa_to_x_, ax_to_a_, ax_to_x_;
};

/* Axioms, checked in this order (tuples lexicographic within each):
 *   BX1 (ab)*x = a*(b*x)          BA1 (xy)*a = x*(y*a)
 *   BX2 x*(ab) = (x*a)*b          BA2 a*(xy) = (a*x)*y
 *   BX3 a*(x*b) = (a*x)*b         BA3 x*(a*y) = (x*a)*y
 * for the one-sided module structures, then MP1..MP6 for compatibility of
 * the actions with both multiplications. */
struct PairViolation {
  std::string axiom;
  std::array<std::size_t, 3> where;  // basis indices, in the axiom's tuple order
  Vec lhs, rhs;
};
std::optional<PairViolation> check_matched_pair(const MatchedPair& p);

/* Product on A + X:  (a,x)(b,y) = (ab + [a*y]_A + [x*b]_A, [a*y]_X + [x*b]_X + xy).
 * Basis: A's basis followed by X's.  Throws InvalidMatchedPair unless the
 * axioms hold. */
Algebra bicrossed_product(const MatchedPair& p);

/* Actions induced by splitting the ambient products of a factorization. */
MatchedPair canonical_matched_pair(const Factorization& f);

/* A-bimodule made into a matched pair with zero multiplication on X. */
MatchedPair trivial_extension(const Algebra& a, const BilinearMap& ax_to_x,
                              const BilinearMap& xa_to_x,
                              std::vector<std::string> x_names = {});

/* One-sided case: X keeps its own multiplication, A acts on X on both sides,
 * X does not act on A.  Requires the bimodule identities and
 *   a*(xy) = (a*x)y,  (xy)*a = x(y*a),  x(a*y) = (x*a)y. */
MatchedPair semidirect_product(const Algebra& a, const Algebra& x,
                               const BilinearMap& ax_to_x, const BilinearMap& xa_to_x);

}  // namespace algfact
