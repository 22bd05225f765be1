#pragma once

#include <optional>
#include <string>
#include <vector>

#include "algfact/linalg.hpp"

namespace algfact {

/* Finite-dimensional associative algebra given by its structure tensor:
 * e_i e_j = sum_k c(i,j,k) e_k.  Associativity is not enforced by the type;
 * run check_associative where it matters. */
class Algebra {
 public:
  Algebra(const FieldSpec& f, std::size_t dim);
  Algebra(const FieldSpec& f, std::vector<std::string> names);

  std::size_t dim() const { return dim_; }
  const FieldSpec& field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  void set_names(std::vector<std::string> names);

  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const;
  void set_c(std::size_t i, std::size_t j, std::size_t k, const Scalar& v);
  void set_product(std::size_t i, std::size_t j, const Vec& value);
  Vec basis_product(std::size_t i, std::size_t j) const;

  Vec multiply(const Vec& u, const Vec& v) const;

  /* field + dimension + tensor; names are labels only */
  bool same_structure(const Algebra& o) const;

 private:
  FieldSpec field_;
  std::size_t dim_;
  std::vector<std::string> names_;
  std::vector<Scalar> c_;  // dim^3, index (i*dim + j)*dim + k
};

struct AssocViolation {
  std::size_t i, j, k;
  Vec lhs, rhs;  // (e_i e_j) e_k and e_i (e_j e_k)
};
/* First violating triple in lexicographic (i, j, k) order. */
std::optional<AssocViolation> check_associative(const Algebra& a);

/* Two-sided unit, when one exists (it is then unique). */
std::optional<Vec> find_unit(const Algebra& a);

bool is_subalgebra(const Algebra& a, const Subspace& s);
bool is_two_sided_ideal(const Algebra& a, const Subspace& s);

/* Restriction of the product to a subspace closed under it; basis is the
 * subspace's canonical RREF basis. */
Algebra subalgebra_on_basis(const Algebra& a, const Subspace& s);

/* Quotient by a two-sided ideal; basis = classes of the ambient basis
 * vectors at the non-pivot coordinates of the ideal. */
Algebra quotient_algebra(const Algebra& a, const Subspace& ideal);

/* Vector-space splitting E = A + X with both parts subalgebras. */
struct Factorization {
  Algebra ambient;
  Subspace a_part;
  Subspace x_part;
};

enum class FactorizationDefect { a_not_subalgebra, x_not_subalgebra, dimension_sum, overlap };
struct FactorizationViolation {
  FactorizationDefect defect;
  std::string detail;
};
std::optional<FactorizationViolation> check_factorization(const Factorization& f);

/* Split of an ambient vector along a_part + x_part, in each part's basis
 * coordinates.  Requires check_factorization to pass. */
struct SplitCoords {
  Vec a_coords;
  Vec x_coords;
};
SplitCoords split_along(const Factorization& f, const Vec& v);

}  // namespace algfact
