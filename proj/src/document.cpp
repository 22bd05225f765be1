#include "algfact/document.hpp"

#include <fstream>
#include <sstream>

namespace algfact {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

Json doc_shell(const char* kind) {
  Json j = Json::object();
  j["format_version"] = kFormatVersion;
  j["kind"] = kind;
  return j;
}

Json coeff_rows(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix rows_to_matrix(const FieldSpec& f, const Json& rows, const char* what) {
  return guarded(what, [&] {
    if (!rows.is_array() || rows.empty())
      throw ParseError(std::string(what) + ": expected a non-empty array of rows");
    const std::size_t nc = rows.at(0).size();
    Matrix m(f, rows.size(), nc);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Json& row = rows.at(r);
      if (!row.is_array() || row.size() != nc)
        throw ParseError(std::string(what) + ": ragged rows");
      for (std::size_t c = 0; c < nc; ++c)
        m.at(r, c) = Scalar::parse(f, row.at(c).get<std::string>());
    }
    return m;
  });
}

}  // namespace

Json to_doc(const FieldSpec& f) {
  Json j = Json::object();
  if (f.is_prime_field()) {
    j["kind"] = "Fp";
    j["p"] = f.modulus();
  } else {
    j["kind"] = "Q";
  }
  return j;
}

FieldSpec field_from_doc(const Json& j) {
  return guarded("field", [&] {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "Q") return FieldSpec::rationals();
    if (kind == "Fp") return FieldSpec::prime(j.at("p").get<std::uint64_t>());
    throw ParseError("field: unknown kind '" + kind + "'");
  });
}

Json to_doc(const Matrix& m) {
  Json j = doc_shell("matrix");
  j["field"] = to_doc(m.field());
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = coeff_rows(m);
  return j;
}

Matrix matrix_from_doc(const Json& j) {
  expect_kind(j, "matrix");
  return guarded("matrix", [&] {
    Matrix m = rows_to_matrix(field_from_doc(j.at("field")), j.at("entries"), "matrix entries");
    if (m.rows() != j.at("rows").get<std::size_t>() || m.cols() != j.at("cols").get<std::size_t>())
      throw ParseError("matrix: declared shape does not match entries");
    return m;
  });
}

Json to_doc(const Algebra& a) {
  Json j = doc_shell("algebra");
  j["field"] = to_doc(a.field());
  j["dim"] = a.dim();
  j["names"] = a.names();
  Json prod = Json::array();
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t jj = 0; jj < a.dim(); ++jj)
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!a.c(i, jj, k).is_zero()) prod.push_back(Json::array({i, jj, k, a.c(i, jj, k).str()}));
  j["products"] = std::move(prod);
  return j;
}

Algebra algebra_from_doc(const Json& j) {
  expect_kind(j, "algebra");
  return guarded("algebra", [&] {
    const FieldSpec f = field_from_doc(j.at("field"));
    const std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<std::string> names = j.at("names").get<std::vector<std::string>>();
    if (names.size() != dim) throw ParseError("algebra: names do not match dim");
    Algebra a(f, std::move(names));
    for (const Json& e : j.at("products")) {
      if (!e.is_array() || e.size() != 4) throw ParseError("algebra: product entries are [i,j,k,c]");
      a.set_c(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), e.at(2).get<std::size_t>(),
              Scalar::parse(f, e.at(3).get<std::string>()));
    }
    return a;
  });
}

Json to_doc(const Subspace& s) {
  Json j = doc_shell("subspace");
  j["field"] = to_doc(s.field());
  j["ambient_dim"] = s.ambient_dim();
  j["basis"] = coeff_rows(s.basis());
  return j;
}

Subspace subspace_from_doc(const Json& j) {
  expect_kind(j, "subspace");
  return guarded("subspace", [&] {
    const FieldSpec f = field_from_doc(j.at("field"));
    const std::size_t ambient = j.at("ambient_dim").get<std::size_t>();
    if (j.at("basis").empty()) return Subspace::zero(f, ambient);
    Matrix rows = rows_to_matrix(f, j.at("basis"), "subspace basis");
    if (rows.cols() != ambient) throw ParseError("subspace: basis rows do not match ambient_dim");
    return Subspace::span(rows);
  });
}

Json to_doc(const Factorization& f) {
  Json j = doc_shell("factorization");
  j["field"] = to_doc(f.ambient.field());
  j["ambient"] = to_doc(f.ambient);
  j["a_basis"] = coeff_rows(f.a_part.basis());
  j["x_basis"] = coeff_rows(f.x_part.basis());
  return j;
}

Factorization factorization_from_doc(const Json& j) {
  expect_kind(j, "factorization");
  return guarded("factorization", [&] {
    Algebra ambient = algebra_from_doc(j.at("ambient"));
    const FieldSpec f = ambient.field();
    Subspace a = Subspace::span(rows_to_matrix(f, j.at("a_basis"), "a_basis"));
    Subspace x = Subspace::span(rows_to_matrix(f, j.at("x_basis"), "x_basis"));
    if (a.ambient_dim() != ambient.dim() || x.ambient_dim() != ambient.dim())
      throw ParseError("factorization: part bases do not live in the ambient space");
    return Factorization{std::move(ambient), std::move(a), std::move(x)};
  });
}

Json bilinear_to_doc(const BilinearMap& b) {
  Json j = Json::object();
  j["left_dim"] = b.left_dim();
  j["right_dim"] = b.right_dim();
  j["out_dim"] = b.out_dim();
  Json entries = Json::array();
  for (std::size_t i = 0; i < b.left_dim(); ++i)
    for (std::size_t jj = 0; jj < b.right_dim(); ++jj)
      for (std::size_t k = 0; k < b.out_dim(); ++k)
        if (!b.at(i, jj, k).is_zero()) entries.push_back(Json::array({i, jj, k, b.at(i, jj, k).str()}));
  j["entries"] = std::move(entries);
  return j;
}

BilinearMap bilinear_from_doc(const FieldSpec& f, const Json& j) {
  return guarded("bilinear map", [&] {
    BilinearMap b(f, j.at("left_dim").get<std::size_t>(), j.at("right_dim").get<std::size_t>(),
                  j.at("out_dim").get<std::size_t>());
    for (const Json& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 4)
        throw ParseError("bilinear map: entries are [i,j,k,c]");
      b.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), e.at(2).get<std::size_t>(),
            Scalar::parse(f, e.at(3).get<std::string>()));
    }
    return b;
  });
}

Json to_doc(const MatchedPair& p) {
  Json j = doc_shell("matched_pair");
  j["field"] = to_doc(p.field());
  j["algebra_a"] = to_doc(p.a());
  j["algebra_x"] = to_doc(p.x());
  j["xa_to_a"] = bilinear_to_doc(p.xa_to_a());
  j["xa_to_x"] = bilinear_to_doc(p.xa_to_x());
  j["ax_to_a"] = bilinear_to_doc(p.ax_to_a());
  j["ax_to_x"] = bilinear_to_doc(p.ax_to_x());
  return j;
}

MatchedPair pair_from_doc(const Json& j) {
  expect_kind(j, "matched_pair");
  return guarded("matched pair", [&] {
    Algebra a = algebra_from_doc(j.at("algebra_a"));
    Algebra x = algebra_from_doc(j.at("algebra_x"));
    const FieldSpec f = a.field();
    return MatchedPair(std::move(a), std::move(x), bilinear_from_doc(f, j.at("xa_to_a")),
                       bilinear_from_doc(f, j.at("xa_to_x")), bilinear_from_doc(f, j.at("ax_to_a")),
                       bilinear_from_doc(f, j.at("ax_to_x")));
  });
}

Json to_doc(const DeformationMap& r) {
  Json j = doc_shell("deformation_map");
  j["field"] = to_doc(r.matrix().field());
  j["a_dim"] = r.a_dim();
  j["x_dim"] = r.x_dim();
  j["entries"] = coeff_rows(r.matrix());
  return j;
}

DeformationMap map_from_doc(const Json& j) {
  expect_kind(j, "deformation_map");
  return guarded("deformation map", [&] {
    Matrix m =
        rows_to_matrix(field_from_doc(j.at("field")), j.at("entries"), "deformation map entries");
    if (m.rows() != j.at("a_dim").get<std::size_t>() ||
        m.cols() != j.at("x_dim").get<std::size_t>())
      throw ParseError("deformation map: declared shape does not match entries");
    return DeformationMap::unchecked(std::move(m));
  });
}

Json to_doc(const Fingerprint& fp) {
  Json j = doc_shell("fingerprint");
  j["dim"] = fp.dim;
  j["commutative"] = fp.commutative;
  j["unital"] = fp.unital;
  j["product_span_dim"] = fp.product_span_dim;
  j["left_annihilator_dim"] = fp.left_annihilator_dim;
  j["right_annihilator_dim"] = fp.right_annihilator_dim;
  j["square_zero_count"] = fp.square_zero_count ? Json(*fp.square_zero_count) : Json(nullptr);
  j["idempotent_count"] = fp.idempotent_count ? Json(*fp.idempotent_count) : Json(nullptr);
  return j;
}

Fingerprint fingerprint_from_doc(const Json& j) {
  expect_kind(j, "fingerprint");
  return guarded("fingerprint", [&] {
    Fingerprint fp;
    fp.dim = j.at("dim").get<std::size_t>();
    fp.commutative = j.at("commutative").get<bool>();
    fp.unital = j.at("unital").get<bool>();
    fp.product_span_dim = j.at("product_span_dim").get<std::size_t>();
    fp.left_annihilator_dim = j.at("left_annihilator_dim").get<std::size_t>();
    fp.right_annihilator_dim = j.at("right_annihilator_dim").get<std::size_t>();
    if (!j.at("square_zero_count").is_null())
      fp.square_zero_count = j.at("square_zero_count").get<std::uint64_t>();
    if (!j.at("idempotent_count").is_null())
      fp.idempotent_count = j.at("idempotent_count").get<std::uint64_t>();
    return fp;
  });
}

namespace {

const char* reason_name(IsoReason r) {
  switch (r) {
    case IsoReason::identity: return "identity";
    case IsoReason::supplied_witness: return "supplied_witness";
    case IsoReason::search_witness: return "search_witness";
    case IsoReason::fingerprint: return "fingerprint";
    case IsoReason::exhausted_search: return "exhausted_search";
    case IsoReason::search_budget: return "search_budget";
    case IsoReason::field_not_finite: return "field_not_finite";
  }
  return "unknown";
}

}  // namespace

Json to_doc(const IsoVerdict& v) {
  Json j = doc_shell("iso_verdict");
  j["status"] = v.status == IsoStatus::isomorphic
                    ? "isomorphic"
                    : v.status == IsoStatus::not_isomorphic ? "not_isomorphic" : "unknown";
  j["reason"] = reason_name(v.reason);
  j["detail"] = v.detail;
  j["witness"] = v.witness ? to_doc(*v.witness) : Json(nullptr);
  return j;
}

Json maps_to_doc(const FieldSpec& f, std::size_t a_dim, std::size_t x_dim,
                 const std::vector<DeformationMap>& maps) {
  Json j = doc_shell("deformation_map_list");
  j["field"] = to_doc(f);
  j["a_dim"] = a_dim;
  j["x_dim"] = x_dim;
  j["count"] = maps.size();
  Json arr = Json::array();
  for (const DeformationMap& m : maps) arr.push_back(coeff_rows(m.matrix()));
  j["maps"] = std::move(arr);
  return j;
}

std::vector<DeformationMap> maps_from_doc(const Json& j) {
  expect_kind(j, "deformation_map_list");
  return guarded("deformation map list", [&] {
    const FieldSpec f = field_from_doc(j.at("field"));
    std::vector<DeformationMap> out;
    for (const Json& rows : j.at("maps"))
      out.push_back(DeformationMap::unchecked(rows_to_matrix(f, rows, "map entries")));
    return out;
  });
}

Json to_doc(const ClassificationReport& r) {
  Json j = doc_shell("classification_report");
  j["field"] = to_doc(r.field);
  j["pair_id"] = r.pair_id;
  std::size_t a_dim = 0, x_dim = 0;
  if (!r.maps.empty()) {
    a_dim = r.maps.front().a_dim();
    x_dim = r.maps.front().x_dim();
  }
  j["a_dim"] = a_dim;
  j["x_dim"] = x_dim;
  Json arr = Json::array();
  for (const DeformationMap& m : r.maps) arr.push_back(coeff_rows(m.matrix()));
  j["maps"] = std::move(arr);
  Json classes = Json::array();
  for (const ComplementClass& c : r.classes) {
    Json cls = Json::object();
    cls["representative"] = c.representative;
    cls["members"] = c.members;
    cls["fingerprint"] = to_doc(c.fingerprint);
    classes.push_back(std::move(cls));
  }
  j["classes"] = std::move(classes);
  j["factorization_index"] = r.factorization_index();
  return j;
}

void expect_kind(const Json& j, const std::string& kind) {
  guarded("document", [&] {
    if (!j.is_object()) throw ParseError("document: expected a JSON object");
    if (j.at("format_version").get<std::string>() != kFormatVersion)
      throw ParseError("document: unsupported format_version");
    const std::string got = j.at("kind").get<std::string>();
    if (got != kind) throw ParseError("document: expected kind '" + kind + "', got '" + got + "'");
    return 0;
  });
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Json load_document_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

}  // namespace algfact
