#pragma once

#include "algfact/deformation.hpp"

namespace algfact {

/* Isomorphism invariants cheap enough to compute on every candidate.  The
 * two solution counts are only filled over F_p with p^dim inside the
 * budget; equal prints never prove isomorphism, unequal prints refute it. */
struct Fingerprint {
  std::size_t dim = 0;
  bool commutative = false;
  bool unital = false;
  std::size_t product_span_dim = 0;
  std::size_t left_annihilator_dim = 0;
  std::size_t right_annihilator_dim = 0;
  std::optional<std::uint64_t> square_zero_count;  // #{x : x x = 0}
  std::optional<std::uint64_t> idempotent_count;   // #{x : x x = x}

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint invariant_fingerprint(const Algebra& a, std::uint64_t budget = 10'000'000);

/* Name of the first differing component with both values, e.g.
 * "left annihilator dim: 2 vs 1"; empty when the prints agree. */
std::string separating_invariant(const Fingerprint& a, const Fingerprint& b);

enum class IsoStatus { isomorphic, not_isomorphic, unknown };
enum class IsoReason {
  identity,          // same structure tensor
  supplied_witness,
  search_witness,
  fingerprint,       // separating invariant found
  exhausted_search,  // decisive negative: every invertible matrix failed
  search_budget,     // |GL_dim| above the budget
  field_not_finite,
};

struct IsoVerdict {
  IsoStatus status;
  IsoReason reason;
  std::string detail;
  std::optional<Matrix> witness;  // column i = image of basis vector i

  explicit operator bool() const { return status == IsoStatus::isomorphic; }
};

struct ClassifyLimits {
  std::uint64_t budget = 10'000'000;    // enumeration and fingerprint counting
  std::uint64_t gl_budget = 1'000'000;  // bound on |GL_dim(F_p)| for witness search
  unsigned workers = 1;
};

/* w respects the products: w (e_i e_j) = (w e_i)(w e_j) for all basis
 * pairs.  Invertibility is checked separately. */
bool is_morphism_witness(const Algebra& a, const Algebra& b, const Matrix& w);
bool is_isomorphism_witness(const Algebra& a, const Algebra& b, const Matrix& w);

/* Fingerprint screen, then supplied witnesses, then exhaustive search over
 * GL_dim(F_p) when its order fits the budget.  A negative after a full
 * search is decisive; Unknown is returned rather than guessed away. */
IsoVerdict are_isomorphic(const Algebra& a, const Algebra& b, const ClassifyLimits& limits = {},
                          const std::vector<Matrix>& candidate_witnesses = {});

/* r ~ R iff the deformed algebras are isomorphic; the intertwining
 * condition for sigma is exactly the morphism condition X_r -> X_R. */
IsoVerdict are_equivalent(const MatchedPair& p, const DeformationMap& r, const DeformationMap& R,
                          const ClassifyLimits& limits = {});

/* Same relation decided by searching directly for sigma in GL(dim X)
 * satisfying the intertwining identity, with no fingerprint screen.
 * Exists to cross-check are_equivalent on small cases. */
IsoVerdict are_equivalent_by_identity(const MatchedPair& p, const DeformationMap& r,
                                      const DeformationMap& R, const ClassifyLimits& limits = {});

struct ComplementClass {
  std::size_t representative;        // index into maps; lexicographically smallest member
  std::vector<std::size_t> members;  // ascending
  Fingerprint fingerprint;           // of the representative's deformed algebra
};

struct ClassificationReport {
  FieldSpec field;
  std::string pair_id;
  std::vector<DeformationMap> maps;  // lexicographic order
  std::vector<ComplementClass> classes;

  std::size_t factorization_index() const { return classes.size(); }
};

/* Enumerates every deformation map over F_p, groups them into equivalence
 * classes by representative comparison, and re-checks each representative
 * (deformed product associative, lifted complement splits).  Throws
 * UnresolvedPair instead of guessing when a comparison comes back Unknown. */
ClassificationReport classify_complements(const MatchedPair& p, const ClassifyLimits& limits = {},
                                          const std::string& pair_id = "");

}  // namespace algfact
