#include "algfact/classify.hpp"

#include <limits>

namespace algfact {

namespace {

std::size_t annihilator_dim(const Algebra& a, bool left) {
  const std::size_t n = a.dim();
  Matrix sys(a.field(), n * n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i)
        sys.at(j * n + k, i) = left ? a.c(i, j, k) : a.c(j, i, k);
  return n - rank(sys);
}

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string count_str(const std::optional<std::uint64_t>& c) {
  return c ? std::to_string(*c) : std::string("uncounted");
}

}  // namespace

Fingerprint invariant_fingerprint(const Algebra& a, std::uint64_t budget) {
  Fingerprint fp;
  const std::size_t n = a.dim();
  fp.dim = n;

  fp.commutative = true;
  for (std::size_t i = 0; i < n && fp.commutative; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.basis_product(i, j) != a.basis_product(j, i)) {
        fp.commutative = false;
        break;
      }

  fp.unital = find_unit(a).has_value();

  Matrix products(a.field(), n * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      products.set_row(i * n + j, a.basis_product(i, j));
  fp.product_span_dim = rank(products);

  fp.left_annihilator_dim = annihilator_dim(a, true);
  fp.right_annihilator_dim = annihilator_dim(a, false);

  if (a.field().is_prime_field() &&
      pow_u64_saturating(a.field().modulus(), n) <= budget) {
    MatrixStream vecs(a.field(), 1, n, std::numeric_limits<std::uint64_t>::max());
    std::uint64_t nil = 0, idem = 0;
    Matrix holder(a.field(), 1, n);
    for (std::uint64_t idx = 0; idx < vecs.size(); ++idx) {
      vecs.decode_into(idx, holder);
      const Vec v = holder.row(0);
      const Vec sq = a.multiply(v, v);
      if (vec_is_zero(sq)) ++nil;
      if (sq == v) ++idem;
    }
    fp.square_zero_count = nil;
    fp.idempotent_count = idem;
  }
  return fp;
}

std::string separating_invariant(const Fingerprint& a, const Fingerprint& b) {
  if (a.dim != b.dim)
    return "dimension: " + std::to_string(a.dim) + " vs " + std::to_string(b.dim);
  if (a.commutative != b.commutative)
    return "commutative: " + yn(a.commutative) + " vs " + yn(b.commutative);
  if (a.unital != b.unital) return "unital: " + yn(a.unital) + " vs " + yn(b.unital);
  if (a.product_span_dim != b.product_span_dim)
    return "product span dim: " + std::to_string(a.product_span_dim) + " vs " +
           std::to_string(b.product_span_dim);
  if (a.left_annihilator_dim != b.left_annihilator_dim)
    return "left annihilator dim: " + std::to_string(a.left_annihilator_dim) + " vs " +
           std::to_string(b.left_annihilator_dim);
  if (a.right_annihilator_dim != b.right_annihilator_dim)
    return "right annihilator dim: " + std::to_string(a.right_annihilator_dim) + " vs " +
           std::to_string(b.right_annihilator_dim);
  if (a.square_zero_count != b.square_zero_count)
    return "square-zero solutions: " + count_str(a.square_zero_count) + " vs " +
           count_str(b.square_zero_count);
  if (a.idempotent_count != b.idempotent_count)
    return "idempotent solutions: " + count_str(a.idempotent_count) + " vs " +
           count_str(b.idempotent_count);
  return "";
}

bool is_morphism_witness(const Algebra& a, const Algebra& b, const Matrix& w) {
  if (a.field() != b.field() || w.field() != a.field())
    throw FieldMismatch("witness field mismatch");
  if (a.dim() != b.dim() || w.rows() != a.dim() || w.cols() != a.dim())
    throw DimensionMismatch("witness must be dim x dim over equal-dimension algebras");
  const std::size_t n = a.dim();
  std::vector<Vec> img;
  img.reserve(n);
  for (std::size_t i = 0; i < n; ++i) img.push_back(w.col(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (w.apply(a.basis_product(i, j)) != b.multiply(img[i], img[j])) return false;
  return true;
}

bool is_isomorphism_witness(const Algebra& a, const Algebra& b, const Matrix& w) {
  return is_morphism_witness(a, b, w) && inverse(w).has_value();
}

IsoVerdict are_isomorphic(const Algebra& a, const Algebra& b, const ClassifyLimits& limits,
                          const std::vector<Matrix>& candidate_witnesses) {
  if (a.field() != b.field()) throw FieldMismatch("cannot compare algebras over different fields");

  if (a.same_structure(b))
    return {IsoStatus::isomorphic, IsoReason::identity, "identical structure constants",
            Matrix::identity(a.field(), a.dim())};

  const Fingerprint fa = invariant_fingerprint(a, limits.budget);
  const Fingerprint fb = invariant_fingerprint(b, limits.budget);
  if (const std::string sep = separating_invariant(fa, fb); !sep.empty())
    return {IsoStatus::not_isomorphic, IsoReason::fingerprint, sep, std::nullopt};

  for (const Matrix& w : candidate_witnesses)
    if (is_isomorphism_witness(a, b, w))
      return {IsoStatus::isomorphic, IsoReason::supplied_witness, "supplied witness verified", w};

  if (!a.field().is_prime_field())
    return {IsoStatus::unknown, IsoReason::field_not_finite,
            "no exhaustive search over an infinite field", std::nullopt};

  const std::uint64_t order = gl_order(a.field(), a.dim());
  if (order > limits.gl_budget)
    return {IsoStatus::unknown, IsoReason::search_budget,
            "|GL_" + std::to_string(a.dim()) + "(F_" + std::to_string(a.field().modulus()) +
                ")| = " + std::to_string(order) + " exceeds budget " +
                std::to_string(limits.gl_budget),
            std::nullopt};

  // Morphism test first: it exits on the first bad basis pair, which is far
  // cheaper than row-reducing every candidate.
  MatrixStream stream(a.field(), a.dim(), a.dim(),
                      std::numeric_limits<std::uint64_t>::max());
  Matrix cand(a.field(), a.dim(), a.dim());
  for (std::uint64_t idx = 0; idx < stream.size(); ++idx) {
    stream.decode_into(idx, cand);
    if (is_morphism_witness(a, b, cand) && inverse(cand).has_value())
      return {IsoStatus::isomorphic, IsoReason::search_witness,
              "witness found by exhaustive search", cand};
  }
  return {IsoStatus::not_isomorphic, IsoReason::exhausted_search,
          "no witness among all " + std::to_string(order) + " invertible matrices",
          std::nullopt};
}

IsoVerdict are_equivalent(const MatchedPair& p, const DeformationMap& r, const DeformationMap& R,
                          const ClassifyLimits& limits) {
  return are_isomorphic(deform(p, r), deform(p, R), limits);
}

IsoVerdict are_equivalent_by_identity(const MatchedPair& p, const DeformationMap& r,
                                      const DeformationMap& R, const ClassifyLimits& limits) {
  if (r.matrix().field() != p.field() || R.matrix().field() != p.field())
    throw FieldMismatch("map field mismatch");
  if (r.a_dim() != p.a().dim() || r.x_dim() != p.x().dim() || R.a_dim() != p.a().dim() ||
      R.x_dim() != p.x().dim())
    throw DimensionMismatch("maps must be dimA x dimX");
  if (!p.field().is_prime_field())
    return {IsoStatus::unknown, IsoReason::field_not_finite,
            "no exhaustive search over an infinite field", std::nullopt};

  const std::size_t dx = p.x().dim();
  const std::uint64_t order = gl_order(p.field(), dx);
  if (order > limits.gl_budget)
    return {IsoStatus::unknown, IsoReason::search_budget,
            "|GL_" + std::to_string(dx) + "(F_" + std::to_string(p.field().modulus()) + ")| = " +
                std::to_string(order) + " exceeds budget " + std::to_string(limits.gl_budget),
            std::nullopt};

  // x *_r y on basis pairs, fixed across candidates.
  std::vector<Vec> left_table;
  left_table.reserve(dx * dx);
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dx; ++j) {
      Vec t = p.x().basis_product(i, j);
      Vec u = p.ax_to_x().apply_right_basis(r.matrix().col(i), j);
      Vec v = p.xa_to_x().apply_left_basis(i, r.matrix().col(j));
      for (std::size_t k = 0; k < dx; ++k) t[k] += u[k] + v[k];
      left_table.push_back(std::move(t));
    }

  auto intertwines = [&](const Matrix& sigma) {
    std::vector<Vec> img, r_img;
    img.reserve(dx);
    r_img.reserve(dx);
    for (std::size_t i = 0; i < dx; ++i) {
      img.push_back(sigma.col(i));
      r_img.push_back(R.matrix().apply(img.back()));
    }
    for (std::size_t i = 0; i < dx; ++i)
      for (std::size_t j = 0; j < dx; ++j) {
        Vec rhs = p.x().multiply(img[i], img[j]);
        Vec u = p.ax_to_x().apply(r_img[i], img[j]);
        Vec v = p.xa_to_x().apply(img[i], r_img[j]);
        for (std::size_t k = 0; k < dx; ++k) rhs[k] += u[k] + v[k];
        if (sigma.apply(left_table[i * dx + j]) != rhs) return false;
      }
    return true;
  };

  MatrixStream stream(p.field(), dx, dx, std::numeric_limits<std::uint64_t>::max());
  Matrix cand(p.field(), dx, dx);
  for (std::uint64_t idx = 0; idx < stream.size(); ++idx) {
    stream.decode_into(idx, cand);
    if (intertwines(cand) && inverse(cand).has_value())
      return {IsoStatus::isomorphic, IsoReason::search_witness,
              "intertwiner found by exhaustive search", cand};
  }
  return {IsoStatus::not_isomorphic, IsoReason::exhausted_search,
          "no intertwiner among all " + std::to_string(order) + " invertible matrices",
          std::nullopt};
}

ClassificationReport classify_complements(const MatchedPair& p, const ClassifyLimits& limits,
                                          const std::string& pair_id) {
  if (!p.field().is_prime_field()) throw FieldNotFinite();

  ClassificationReport report{p.field(), pair_id, {}, {}};
  report.maps = enumerate_deformation_maps(p, {limits.budget, limits.workers});

  std::vector<Algebra> deformed;
  std::vector<Fingerprint> prints;
  deformed.reserve(report.maps.size());
  prints.reserve(report.maps.size());
  for (const DeformationMap& r : report.maps) {
    deformed.push_back(deform(p, r));
    prints.push_back(invariant_fingerprint(deformed.back(), limits.budget));
  }

  for (std::size_t i = 0; i < report.maps.size(); ++i) {
    bool placed = false;
    for (ComplementClass& cls : report.classes) {
      if (prints[cls.representative] != prints[i]) continue;
      IsoVerdict v = are_isomorphic(deformed[cls.representative], deformed[i], limits);
      if (v.status == IsoStatus::unknown)
        throw UnresolvedPair(cls.representative, i, v.detail);
      if (v.status == IsoStatus::isomorphic) {
        cls.members.push_back(i);
        placed = true;
        break;
      }
    }
    if (placed) continue;

    if (check_associative(deformed[i]))
      throw Error("internal inconsistency: deformed product of an accepted map is not associative");
    if (check_factorization(lifted_factorization(p, report.maps[i])))
      throw Error("internal inconsistency: lifted complement does not split the bicrossed product");
    report.classes.push_back(ComplementClass{i, {i}, prints[i]});
  }
  return report;
}

}  // namespace algfact
