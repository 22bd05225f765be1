#include <doctest.h>

#include <string>

#include "algfact/catalog.hpp"

using namespace algfact;

static const FieldSpec Q = FieldSpec::rationals();
static const FieldSpec F2 = FieldSpec::prime(2);
static const FieldSpec F3 = FieldSpec::prime(3);
static const FieldSpec F5 = FieldSpec::prime(5);

namespace {

Vec vec(const FieldSpec& f, std::initializer_list<long long> entries) {
  Vec v;
  for (long long e : entries) v.push_back(Scalar::of_int(f, e));
  return v;
}

Matrix mat(const FieldSpec& f, std::size_t rows, std::size_t cols,
           std::initializer_list<long long> entries) {
  Matrix m(f, rows, cols);
  auto it = entries.begin();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = Scalar::of_int(f, *it++);
  return m;
}

MatchedPair split2(const FieldSpec& f) {
  return canonical_matched_pair(build_triangular_split(2, f));
}

// the one-parameter family on the 2x2 triangular split
Matrix ra(const FieldSpec& f, long long a) { return mat(f, 1, 3, {a, a * a, -a}); }

}  // namespace

TEST_CASE("deformation identity acceptance") {
  const MatchedPair p = split2(Q);
  for (long long a : {0, 1, 2, 5, -3})
    CHECK_FALSE(is_deformation_map(p, ra(Q, a)).has_value());
  const MatchedPair p5 = split2(F5);
  for (long long a : {0, 1, 2, 3, 4})
    CHECK_FALSE(is_deformation_map(p5, ra(F5, a)).has_value());
}

TEST_CASE("deformation identity rejection pinpoints the pair") {
  const MatchedPair p = split2(Q);
  const auto v = is_deformation_map(p, mat(Q, 1, 3, {1, 0, 0}));
  REQUIRE(v.has_value());
  CHECK(v->x_index == 1);
  CHECK(v->y_index == 0);
  CHECK(v->lhs == vec(Q, {0}));
  CHECK(v->rhs == vec(Q, {1}));  // e21

  try {
    DeformationMap::checked(p, mat(Q, 1, 3, {1, 0, 0}));
    FAIL("expected InvalidDeformationMap");
  } catch (const InvalidDeformationMap& e) {
    CHECK(std::string(e.what()) == "deformation identity fails at basis pair (1,0)");
  }
  // unchecked stores anything; useful for serialization round trips
  CHECK(DeformationMap::unchecked(mat(Q, 1, 3, {1, 0, 0})).matrix().at(0, 0).is_one());

  CHECK_THROWS_AS(is_deformation_map(p, mat(Q, 2, 3, {0, 0, 0, 0, 0, 0})), DimensionMismatch);
  CHECK_THROWS_AS(is_deformation_map(p, mat(F2, 1, 3, {0, 0, 0})), FieldMismatch);
}

TEST_CASE("corner family deformation condition") {
  // diag pair (r, s) on one corner generator: maps are (alpha, beta) with
  // alpha beta = 0
  const MatchedPair p = canonical_matched_pair(build_triangular_bimodule(Q, 1));
  CHECK_FALSE(is_deformation_map(p, mat(Q, 2, 1, {3, 0})).has_value());
  CHECK_FALSE(is_deformation_map(p, mat(Q, 2, 1, {0, -2})).has_value());
  const auto v = is_deformation_map(p, mat(Q, 2, 1, {1, 1}));
  REQUIRE(v.has_value());
  CHECK(v->x_index == 0);
  CHECK(v->y_index == 0);
  CHECK(v->lhs == vec(Q, {1, 1}));
  CHECK(v->rhs == vec(Q, {2, 2}));
}

TEST_CASE("deformed product matches the recorded tables") {
  const CatalogSelection m2 = resolve_catalog("m2-split");
  for (const FieldSpec& f : {Q, F3, F5}) {
    for (long long a : {0, 1, 2}) {
      const DeformationMap r = DeformationMap::checked(split2(f), ra(f, a));
      const Algebra got = deform(split2(f), r);
      CHECK(got.same_structure(expected_deformed(m2, "r_a", f, {Scalar::of_int(f, a)})));
      CHECK_FALSE(check_associative(got).has_value());
    }
  }
  // two entries worth pinning directly: e12 e12 and e12 e22 at a = 3
  const Algebra x3 = deform(split2(Q), DeformationMap::checked(split2(Q), ra(Q, 3)));
  CHECK(x3.basis_product(1, 1) == vec(Q, {9, 0, 9}));   // a^2 (e11 + e22)
  CHECK(x3.basis_product(1, 2) == vec(Q, {-3, 1, 0}));  // e12 - a e11
  CHECK(x3.basis_product(0, 1) == vec(Q, {0, 1, 3}));   // e12 + a e22
  CHECK(x3.names() == std::vector<std::string>{"e11", "e12", "e22"});

  const CatalogSelection m3 = resolve_catalog("m3-lastrow");
  for (const FieldSpec& f : {Q, F2, F3}) {
    const MatchedPair p = canonical_matched_pair(build_lastrow_split(3, f));
    for (const KnownDeformation& kd : known_deformations(m3, f)) {
      const Algebra got = deform(p, kd.map);
      CHECK(got.same_structure(expected_deformed(m3, kd.label, f)));
      CHECK_FALSE(check_associative(got).has_value());
    }
  }
}

TEST_CASE("lift spans the graph of the map") {
  const MatchedPair p = split2(F3);
  const DeformationMap r = DeformationMap::checked(p, ra(F3, 1));
  const Subspace lift = lift_complement(p, r);
  // bicrossed coordinates (e21, e11, e12, e22); rows reduce to echelon form
  CHECK(lift.basis() == mat(F3, 3, 4, {1, 0, 0, 2, 0, 1, 0, 1, 0, 0, 1, 1}));
  for (long long a : {0, 1, 2}) {
    const DeformationMap m = DeformationMap::checked(p, ra(F3, a));
    CHECK_FALSE(check_factorization(lifted_factorization(p, m)).has_value());
  }
}

TEST_CASE("extraction inverts lifting") {
  {  // through the bicrossed product
    const MatchedPair p = split2(F3);
    const Algebra b = bicrossed_product(p);
    Matrix a_rows(F3, 1, 4), x_rows(F3, 3, 4);
    a_rows.at(0, 0) = Scalar::one(F3);
    for (std::size_t i = 0; i < 3; ++i) x_rows.at(i, 1 + i) = Scalar::one(F3);
    const Factorization ref{b, Subspace::span(a_rows), Subspace::span(x_rows)};
    for (long long a : {0, 1, 2}) {
      const DeformationMap r = DeformationMap::checked(p, ra(F3, a));
      CHECK(extract_deformation(ref, lift_complement(p, r)) == r);
    }
    CHECK(extract_deformation(ref, ref.x_part).matrix() == mat(F3, 1, 3, {0, 0, 0}));
  }
  {  // directly inside M_2, complement spanned by x + r(x)
    const Factorization ref = build_triangular_split(2, F3);
    Matrix rows(F3, 3, 4);  // ambient order e11, e12, e21, e22
    rows.at(0, 0) = Scalar::one(F3);
    rows.at(0, 2) = Scalar::one(F3);  // e11 + e21
    rows.at(1, 1) = Scalar::one(F3);
    rows.at(1, 2) = Scalar::one(F3);  // e12 + e21
    rows.at(2, 3) = Scalar::one(F3);
    rows.at(2, 2) = Scalar::of_int(F3, 2);  // e22 + 2 e21
    CHECK(extract_deformation(ref, Subspace::span(rows)).matrix() == ra(F3, 1));
  }
}

TEST_CASE("extraction rejects non-complements") {
  const Factorization ref = build_triangular_split(2, F3);
  Matrix bad(F3, 3, 4);
  bad.at(0, 0) = bad.at(1, 1) = bad.at(2, 2) = Scalar::one(F3);  // span{e11,e12,e21}
  try {
    extract_deformation(ref, Subspace::span(bad));
    FAIL("expected NotAComplement");
  } catch (const NotAComplement& e) {
    CHECK(std::string(e.what()).starts_with("candidate complement:"));
  }
  const Factorization broken{ref.ambient, ref.a_part, ref.a_part};
  try {
    extract_deformation(broken, ref.x_part);
    FAIL("expected NotAComplement");
  } catch (const NotAComplement& e) {
    CHECK(std::string(e.what()).starts_with("reference data:"));
  }
}

TEST_CASE("enumeration finds exactly the known families") {
  {  // triangular split of M_2: the maps are r_a, one per field element
    const auto maps2 = enumerate_deformation_maps(split2(F2));
    REQUIRE(maps2.size() == 2);
    CHECK(maps2[0].matrix() == mat(F2, 1, 3, {0, 0, 0}));
    CHECK(maps2[1].matrix() == mat(F2, 1, 3, {1, 1, 1}));
    const auto maps3 = enumerate_deformation_maps(split2(F3));
    REQUIRE(maps3.size() == 3);
    CHECK(maps3[1].matrix() == ra(F3, 1));
    CHECK(maps3[2].matrix() == ra(F3, 2));
    const auto maps5 = enumerate_deformation_maps(split2(F5));
    REQUIRE(maps5.size() == 5);
    for (long long a : {0, 1, 2, 3, 4})
      CHECK(maps5[std::size_t(a)].matrix() == ra(F5, a));
  }
  {  // corner m=1 over F3: alpha beta = 0 leaves 2p-1 maps, in stream order
    const MatchedPair p = canonical_matched_pair(build_triangular_bimodule(F3, 1));
    const auto maps = enumerate_deformation_maps(p);
    REQUIRE(maps.size() == 5);
    const long long expect[5][2] = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}};
    for (std::size_t i = 0; i < 5; ++i)
      CHECK(maps[i].matrix() == mat(F3, 2, 1, {expect[i][0], expect[i][1]}));
  }
  {  // corner m=2 over F2: 2 p^m - 1 = 7
    const MatchedPair p = canonical_matched_pair(build_triangular_bimodule(F2, 2));
    CHECK(enumerate_deformation_maps(p).size() == 7);
  }
  {  // last-row split of M_3 over F2
    const MatchedPair p = canonical_matched_pair(build_lastrow_split(3, F2));
    const auto maps = enumerate_deformation_maps(p);
    REQUIRE(maps.size() == 128);
    CHECK(maps[0].matrix() == Matrix(F2, 6, 3));
    Matrix r1(F2, 6, 3);
    r1.at(4, 2) = Scalar::one(F2);
    CHECK(maps[1].matrix() == r1);  // r_1 is the first nonzero map
  }
}

TEST_CASE("enumeration is worker-count independent") {
  const MatchedPair p = canonical_matched_pair(build_lastrow_split(3, F2));
  const auto one = enumerate_deformation_maps(p, {.budget = 300'000, .workers = 1});
  const auto four = enumerate_deformation_maps(p, {.budget = 300'000, .workers = 4});
  REQUIRE(one.size() == four.size());
  for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i] == four[i]);
  const auto odd = enumerate_deformation_maps(split2(F3), {.budget = 100, .workers = 3});
  CHECK(odd.size() == 3);
}

TEST_CASE("enumeration guards") {
  CHECK_THROWS_AS(enumerate_deformation_maps(split2(Q)), FieldNotFinite);
  try {
    enumerate_deformation_maps(canonical_matched_pair(build_lastrow_split(3, F3)));
    FAIL("expected BudgetExceeded");
  } catch (const BudgetExceeded& e) {
    CHECK(e.required == 387420489);  // 3^18 candidates
    CHECK(e.budget == 10'000'000);
  }
}

TEST_CASE("triangular scalar family storage") {
  TriangularFamily fam(Q, 3);
  CHECK(fam.lower_count() == 3);
  CHECK(fam.upper_count() == 6);
  fam.set(3, 1, 2, 3, Scalar::of_int(Q, 4));
  CHECK(fam.at(3, 1, 2, 3) == Scalar::of_int(Q, 4));
  CHECK(fam.at(2, 1, 1, 1).is_zero());
  CHECK_THROWS_AS(fam.at(1, 2, 1, 1), IndexError);  // needs k > t
  CHECK_THROWS_AS(fam.at(2, 1, 2, 1), IndexError);  // needs i <= j
  CHECK_THROWS_AS(fam.at(4, 1, 1, 1), IndexError);
  CHECK_THROWS_AS(TriangularFamily(Q, 1), IndexError);

  const Matrix r = ra(Q, 2);
  const TriangularFamily f2 = TriangularFamily::from_matrix(2, r);
  CHECK(f2.at(2, 1, 1, 1) == Scalar::of_int(Q, 2));
  CHECK(f2.at(2, 1, 1, 2) == Scalar::of_int(Q, 4));
  CHECK(f2.at(2, 1, 2, 2) == Scalar::of_int(Q, -2));
  CHECK(f2.to_matrix() == r);
  CHECK_THROWS_AS(TriangularFamily::from_matrix(3, r), DimensionMismatch);
}

TEST_CASE("scalar condition matches the deformation identity") {
  // the closed form and the pair-based check must agree candidate by candidate
  for (long long a : {0, 1, 5, -2})
    CHECK_FALSE(triangular_scalar_condition(TriangularFamily::from_matrix(2, ra(Q, a))));

  const auto v = triangular_scalar_condition(TriangularFamily::from_matrix(2, mat(Q, 1, 3, {1, 0, 0})));
  REQUIRE(v.has_value());
  CHECK(v->k == 2);
  CHECK(v->q == 1);
  CHECK(v->i == 1);
  CHECK(v->j == 2);
  CHECK(v->r == 1);
  CHECK(v->s == 1);
  CHECK(v->lhs.is_zero());
  CHECK(v->rhs.is_one());

  const MatchedPair p = split2(F2);
  const MatrixStream st(F2, 1, 3, 100);
  std::size_t hits = 0;
  for (std::uint64_t idx = 0; idx < st.size(); ++idx) {
    const Matrix cand = st.at(idx);
    const bool direct = !is_deformation_map(p, cand).has_value();
    const bool scalar = !triangular_scalar_condition(TriangularFamily::from_matrix(2, cand));
    CHECK(direct == scalar);
    hits += direct;
  }
  CHECK(hits == 2);
}
