#include "algfact/catalog.hpp"

#include <algorithm>

namespace algfact {

namespace {

std::string cell_name(std::size_t i, std::size_t j) {
  if (i <= 9 && j <= 9) return "e" + std::to_string(i) + std::to_string(j);
  return "e_" + std::to_string(i) + "_" + std::to_string(j);
}

// Strictly-lower and upper positions of M_n, 1-based, lexicographic; these
// orders coincide with the RREF bases of the triangular split.
std::vector<std::pair<std::size_t, std::size_t>> lower_positions(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t t = 1; t < k; ++t) out.emplace_back(k, t);
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> upper_positions(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i; j <= n; ++j) out.emplace_back(i, j);
  return out;
}

std::size_t position_index(const std::vector<std::pair<std::size_t, std::size_t>>& list,
                           std::size_t i, std::size_t j) {
  const auto it = std::find(list.begin(), list.end(), std::make_pair(i, j));
  if (it == list.end()) throw IndexError("position not in basis list");
  return static_cast<std::size_t>(it - list.begin());
}

Subspace coordinate_subspace(const FieldSpec& f, std::size_t ambient,
                             const std::vector<std::size_t>& coords) {
  Matrix rows(f, coords.size(), ambient);
  for (std::size_t r = 0; r < coords.size(); ++r) rows.at(r, coords[r]) = Scalar::one(f);
  return Subspace::span(rows);
}

void require_n(const CatalogSelection& sel, std::size_t n) {
  if (sel.n != n)
    throw UnknownEntry("entry '" + selection_label(sel) + "' has no data at this size");
}

std::vector<Scalar> default_params(const FieldSpec& f, const std::vector<Scalar>& given,
                                   std::size_t want) {
  if (given.empty()) return std::vector<Scalar>(want, Scalar::one(f));
  if (given.size() != want)
    throw DimensionMismatch("family takes " + std::to_string(want) + " parameter(s)");
  for (const Scalar& s : given)
    if (s.field() != f) throw FieldMismatch("parameter field mismatch");
  return given;
}

}  // namespace

Algebra build_matrix_algebra(std::size_t n, const FieldSpec& f) {
  if (n < 1) throw IndexError("matrix algebra needs n >= 1");
  std::vector<std::string> names;
  names.reserve(n * n);
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) names.push_back(cell_name(i, j));
  Algebra a(f, std::move(names));
  const Scalar one = Scalar::one(f);
  // e_ij e_kl = [j == k] e_il
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j)
      for (std::size_t l = 1; l <= n; ++l)
        a.set_c((i - 1) * n + (j - 1), (j - 1) * n + (l - 1), (i - 1) * n + (l - 1), one);
  return a;
}

Factorization build_triangular_split(std::size_t n, const FieldSpec& f) {
  if (n < 2) throw IndexError("triangular split needs n >= 2");
  Algebra e = build_matrix_algebra(n, f);
  std::vector<std::size_t> lower, upper;
  for (const auto& [k, t] : lower_positions(n)) lower.push_back((k - 1) * n + (t - 1));
  for (const auto& [i, j] : upper_positions(n)) upper.push_back((i - 1) * n + (j - 1));
  return Factorization{std::move(e), coordinate_subspace(f, n * n, lower),
                       coordinate_subspace(f, n * n, upper)};
}

Factorization build_lastrow_split(std::size_t n, const FieldSpec& f) {
  if (n < 2) throw IndexError("last-row split needs n >= 2");
  Algebra e = build_matrix_algebra(n, f);
  std::vector<std::size_t> head, last;
  for (std::size_t idx = 0; idx < n * (n - 1); ++idx) head.push_back(idx);
  for (std::size_t idx = n * (n - 1); idx < n * n; ++idx) last.push_back(idx);
  return Factorization{std::move(e), coordinate_subspace(f, n * n, head),
                       coordinate_subspace(f, n * n, last)};
}

Factorization build_triangular_bimodule(const FieldSpec& f, std::size_t m) {
  if (m < 1) throw IndexError("corner bimodule needs m >= 1");
  std::vector<std::string> names;
  names.push_back("r");
  for (std::size_t i = 1; i <= m; ++i) names.push_back("m" + std::to_string(i));
  names.push_back("s");
  Algebra e(f, std::move(names));
  const Scalar one = Scalar::one(f);
  const std::size_t r = 0, s = m + 1;
  // (r, v, s)(r', v', s') = (r r', r v' + v s', s s')
  e.set_c(r, r, r, one);
  e.set_c(s, s, s, one);
  for (std::size_t i = 1; i <= m; ++i) {
    e.set_c(r, i, i, one);
    e.set_c(i, s, i, one);
  }
  std::vector<std::size_t> diag{r, s}, corner;
  for (std::size_t i = 1; i <= m; ++i) corner.push_back(i);
  return Factorization{std::move(e), coordinate_subspace(f, m + 2, diag),
                       coordinate_subspace(f, m + 2, corner)};
}

ActionTables expected_triangular_actions(std::size_t n, const FieldSpec& f) {
  if (n < 2) throw IndexError("triangular split needs n >= 2");
  const auto lower = lower_positions(n);
  const auto upper = upper_positions(n);
  const std::size_t da = lower.size(), dx = upper.size();
  ActionTables act{BilinearMap(f, dx, da, da), BilinearMap(f, dx, da, dx),
                   BilinearMap(f, da, dx, da), BilinearMap(f, da, dx, dx)};
  const Scalar one = Scalar::one(f);
  for (std::size_t xi = 0; xi < dx; ++xi) {
    const auto [r, s] = upper[xi];
    for (std::size_t ai = 0; ai < da; ++ai) {
      const auto [p, t] = lower[ai];
      // e_rs e_pt = [s == p] e_rt, upper when r <= t
      if (s == p) {
        if (r <= t)
          act.xa_to_x.set(xi, ai, position_index(upper, r, t), one);
        else
          act.xa_to_a.set(xi, ai, position_index(lower, r, t), one);
      }
      // e_pt e_rs = [t == r] e_ps, upper when p <= s
      if (t == r) {
        if (p <= s)
          act.ax_to_x.set(ai, xi, position_index(upper, p, s), one);
        else
          act.ax_to_a.set(ai, xi, position_index(lower, p, s), one);
      }
    }
  }
  return act;
}

ActionTables expected_lastrow_actions(std::size_t n, const FieldSpec& f) {
  if (n < 2) throw IndexError("last-row split needs n >= 2");
  const std::size_t da = n * (n - 1), dx = n;
  ActionTables act{BilinearMap(f, dx, da, da), BilinearMap(f, dx, da, dx),
                   BilinearMap(f, da, dx, da), BilinearMap(f, da, dx, dx)};
  const Scalar one = Scalar::one(f);
  for (std::size_t v = 1; v < n; ++v)
    for (std::size_t t = 1; t <= n; ++t) {
      const std::size_t ai = (v - 1) * n + (t - 1);
      // e_nu e_vt = [u == v] e_nt: stays in the last row
      act.xa_to_x.set(v - 1, ai, t - 1, one);
      // e_vt e_nu = [t == n] e_vu: stays in the head rows
      if (t == n)
        for (std::size_t u = 1; u <= n; ++u)
          act.ax_to_a.set(ai, u - 1, (v - 1) * n + (u - 1), one);
    }
  return act;
}

ActionTables expected_corner_actions(const FieldSpec& f, std::size_t m) {
  if (m < 1) throw IndexError("corner bimodule needs m >= 1");
  ActionTables act{BilinearMap(f, m, 2, 2), BilinearMap(f, m, 2, m),
                   BilinearMap(f, 2, m, 2), BilinearMap(f, 2, m, m)};
  const Scalar one = Scalar::one(f);
  for (std::size_t i = 0; i < m; ++i) {
    act.xa_to_x.set(i, 1, i, one);  // v (r,s)-diag: picks up s
    act.ax_to_x.set(0, i, i, one);  // diag acts on the left through r
  }
  return act;
}

std::vector<std::string> catalog_ids() {
  return {"mn", "triangular-split", "lastrow-split", "bimodule-corner", "m2-split", "m3-lastrow"};
}

CatalogSelection resolve_catalog(const std::string& id, std::size_t n, std::size_t m) {
  if (id == "m2-split") return {"triangular-split", 2, 0};
  if (id == "m3-lastrow") return {"lastrow-split", 3, 0};
  if (id == "mn") {
    if (n < 1) throw UnknownEntry("mn needs n >= 1");
    return {"mn", n, 0};
  }
  if (id == "triangular-split" || id == "lastrow-split") {
    if (n < 2) throw UnknownEntry(id + " needs n >= 2");
    return {id, n, 0};
  }
  if (id == "bimodule-corner") {
    if (m < 1) throw UnknownEntry("bimodule-corner needs m >= 1");
    return {id, 0, m};
  }
  throw UnknownEntry("unknown catalog id '" + id + "'");
}

std::string selection_label(const CatalogSelection& sel) {
  if (sel.family == "bimodule-corner") return sel.family + "(m=" + std::to_string(sel.m) + ")";
  return sel.family + "(n=" + std::to_string(sel.n) + ")";
}

Algebra catalog_ambient(const CatalogSelection& sel, const FieldSpec& f) {
  if (sel.family == "mn") return build_matrix_algebra(sel.n, f);
  if (sel.family == "bimodule-corner") return build_triangular_bimodule(f, sel.m).ambient;
  return build_matrix_algebra(sel.n, f);
}

Factorization catalog_factorization(const CatalogSelection& sel, const FieldSpec& f) {
  if (sel.family == "triangular-split") return build_triangular_split(sel.n, f);
  if (sel.family == "lastrow-split") return build_lastrow_split(sel.n, f);
  if (sel.family == "bimodule-corner") return build_triangular_bimodule(f, sel.m);
  throw UnknownEntry("'" + sel.family + "' carries no distinguished factorization");
}

ActionTables catalog_expected_actions(const CatalogSelection& sel, const FieldSpec& f) {
  if (sel.family == "triangular-split") return expected_triangular_actions(sel.n, f);
  if (sel.family == "lastrow-split") return expected_lastrow_actions(sel.n, f);
  if (sel.family == "bimodule-corner") return expected_corner_actions(f, sel.m);
  throw UnknownEntry("'" + sel.family + "' carries no action tables");
}

std::vector<KnownDeformation> known_deformations(const CatalogSelection& sel, const FieldSpec& f,
                                                 const std::vector<Scalar>& params) {
  std::vector<KnownDeformation> out;
  const Scalar one = Scalar::one(f);
  const MatchedPair pair = canonical_matched_pair(catalog_factorization(sel, f));
  auto push = [&](std::string label, std::string note, Matrix m) {
    out.push_back(KnownDeformation{std::move(label), std::move(note),
                                   DeformationMap::checked(pair, std::move(m))});
  };

  if (sel.family == "triangular-split" && sel.n == 2) {
    const Scalar a = default_params(f, params, 1)[0];
    Matrix m(f, 1, 3);  // r(e11) = a e21, r(e12) = a^2 e21, r(e22) = -a e21
    m.at(0, 0) = a;
    m.at(0, 1) = a * a;
    m.at(0, 2) = -a;
    push("r_a", "one-parameter family, a = " + a.str(), std::move(m));
    return out;
  }

  if (sel.family == "bimodule-corner") {
    const std::vector<Scalar> v = default_params(f, params, sel.m);
    std::string shown;
    for (const Scalar& s : v) shown += (shown.empty() ? "" : ",") + s.str();
    Matrix ma(f, 2, sel.m), mb(f, 2, sel.m);
    for (std::size_t i = 0; i < sel.m; ++i) {
      ma.at(0, i) = v[i];  // r(x_i) = alpha_i r
      mb.at(1, i) = v[i];  // r(x_i) = beta_i s
    }
    push("r^alpha", "alpha = (" + shown + "), beta = 0", std::move(ma));
    push("r_beta", "alpha = 0, beta = (" + shown + ")", std::move(mb));
    return out;
  }

  if (sel.family == "lastrow-split" && sel.n == 3) {
    if (!params.empty()) throw DimensionMismatch("family takes 0 parameter(s)");
    // A-basis order e11,e12,e13,e21,e22,e23; X-basis order e31,e32,e33.
    Matrix m1(f, 6, 3), m2(f, 6, 3), m3(f, 6, 3);
    m1.at(4, 2) = one;                                       // r_1(e33) = e22
    m2.at(0, 2) = m2.at(4, 2) = one;                         // r_2(e33) = e11 + e22
    m3.at(1, 0) = one;                                       // r_3(e31) = e12
    m3.at(0, 2) = m3.at(4, 2) = one;                         // r_3(e33) = e11 + e22
    push("r_1", "deformed algebra isomorphic to As_3^9", std::move(m1));
    push("r_2", "deformed algebra isomorphic to As_3^10", std::move(m2));
    push("r_3", "deformed algebra isomorphic to As_3^12", std::move(m3));
    return out;
  }

  throw UnknownEntry("no recorded deformation maps for '" + selection_label(sel) + "'");
}

Algebra expected_deformed(const CatalogSelection& sel, const std::string& label,
                          const FieldSpec& f, const std::vector<Scalar>& params) {
  const Scalar one = Scalar::one(f);

  if (sel.family == "triangular-split" && sel.n == 2 && label == "r_a") {
    const Scalar a = default_params(f, params, 1)[0];
    Algebra x(f, std::vector<std::string>{"e11", "e12", "e22"});
    x.set_product(0, 0, {one, Scalar::zero(f), Scalar::zero(f)});
    x.set_product(0, 1, {Scalar::zero(f), one, a});
    x.set_product(1, 0, {a, Scalar::zero(f), Scalar::zero(f)});
    x.set_product(1, 1, {a * a, Scalar::zero(f), a * a});
    x.set_product(1, 2, {-a, one, Scalar::zero(f)});
    x.set_product(2, 1, {Scalar::zero(f), Scalar::zero(f), -a});
    x.set_product(2, 2, {Scalar::zero(f), Scalar::zero(f), one});
    return x;
  }

  if (sel.family == "lastrow-split" && sel.n == 3 &&
      (label == "r_1" || label == "r_2" || label == "r_3")) {
    if (!params.empty()) throw DimensionMismatch("family takes 0 parameter(s)");
    Algebra x(f, std::vector<std::string>{"e31", "e32", "e33"});
    x.set_c(2, 1, 1, one);  // e33 e32 = e32
    x.set_c(1, 2, 1, one);  // e32 e33 = e32
    x.set_c(2, 2, 2, one);  // e33 e33 = e33
    x.set_c(2, 0, 0, one);  // e33 e31 = e31
    if (label != "r_1") x.set_c(0, 2, 0, one);  // e31 e33 = e31
    if (label == "r_3") x.set_c(0, 0, 1, one);  // e31 e31 = e32
    return x;
  }

  throw UnknownEntry("no recorded deformed table for '" + label + "' on '" +
                     selection_label(sel) + "'");
}

}  // namespace algfact
