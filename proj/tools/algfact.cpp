#include <CLI11.hpp>

#include <functional>
#include <iostream>

#include "algfact/document.hpp"

using namespace algfact;

namespace {

struct Options {
  std::string field_str = "Q";
  std::string catalog;
  std::size_t n = 0, m = 0;
  std::string map_label;
  std::vector<std::string> params;
  std::string input;
  std::string kind;
  std::string complement;
  std::string left, right, witness;
  std::string output = "text";
  std::uint64_t budget = 10'000'000;
  std::uint64_t gl_budget = 1'000'000;
  unsigned workers = 1;
};

FieldSpec parse_field(const std::string& s) {
  std::string digits;
  if (s == "Q") return FieldSpec::rationals();
  if (s.rfind("Fp:", 0) == 0)
    digits = s.substr(3);
  else if (s.size() > 1 && s[0] == 'F')
    digits = s.substr(1);
  else
    throw InvalidField("unknown field '" + s + "' (use Q, F<p>, or Fp:<p>)");
  if (digits.find_first_not_of("0123456789") != std::string::npos)
    throw InvalidField("bad prime in field '" + s + "'");
  try {
    return FieldSpec::prime(std::stoull(digits));
  } catch (const std::out_of_range&) {
    throw InvalidField("prime in '" + s + "' does not fit 64 bits");
  }
}

bool want_doc(const Options& o) {
  if (o.output == "doc") return true;
  if (o.output == "text") return false;
  throw ParseError("--output must be 'text' or 'doc'");
}

std::vector<Scalar> scalar_params(const Options& o, const FieldSpec& f) {
  std::vector<Scalar> out;
  for (const std::string& s : o.params) out.push_back(Scalar::parse(f, s));
  return out;
}

/* ---- input resolution: every command reads a catalog entry or a file ---- */

void require_one_source(const Options& o) {
  if (o.catalog.empty() == o.input.empty())
    throw ParseError("provide exactly one of --catalog or --input");
}

Algebra get_algebra(const Options& o, const FieldSpec& f) {
  require_one_source(o);
  if (!o.catalog.empty()) return catalog_ambient(resolve_catalog(o.catalog, o.n, o.m), f);
  return algebra_from_doc(load_document_file(o.input));
}

Factorization get_factorization(const Options& o, const FieldSpec& f) {
  require_one_source(o);
  if (!o.catalog.empty()) return catalog_factorization(resolve_catalog(o.catalog, o.n, o.m), f);
  return factorization_from_doc(load_document_file(o.input));
}

MatchedPair get_pair(const Options& o, const FieldSpec& f) {
  require_one_source(o);
  if (!o.catalog.empty())
    return canonical_matched_pair(catalog_factorization(resolve_catalog(o.catalog, o.n, o.m), f));
  return pair_from_doc(load_document_file(o.input));
}

std::string pair_label(const Options& o) {
  if (!o.catalog.empty()) return selection_label(resolve_catalog(o.catalog, o.n, o.m));
  return o.input;
}

/* Pair plus a candidate matrix.  Catalog side pulls a named known map;
 * file side reads kind "deformation_input" with an embedded pair, leaving
 * the candidate unvalidated so `check` can report its violation. */
std::pair<MatchedPair, Matrix> get_pair_and_candidate(const Options& o, const FieldSpec& f) {
  require_one_source(o);
  if (!o.catalog.empty()) {
    const CatalogSelection sel = resolve_catalog(o.catalog, o.n, o.m);
    if (o.map_label.empty()) throw ParseError("--catalog input needs --map <label>");
    for (KnownDeformation& k : known_deformations(sel, f, scalar_params(o, f)))
      if (k.label == o.map_label)
        return {canonical_matched_pair(catalog_factorization(sel, f)), k.map.matrix()};
    throw UnknownEntry("no map labeled '" + o.map_label + "' on '" + selection_label(sel) + "'");
  }
  Json d = load_document_file(o.input);
  expect_kind(d, "deformation_input");
  try {
    return {pair_from_doc(d.at("pair")), map_from_doc(d.at("map")).matrix()};
  } catch (const Json::exception& e) {
    throw ParseError(std::string("deformation_input: ") + e.what());
  }
}

/* ---- text rendering ---- */

std::string combo(const Vec& v, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) {
      if (!out.empty()) out += " + ";
      out += v[i].str() + "*" + names[i];
    }
  return out.empty() ? "0" : out;
}

void print_algebra(std::ostream& os, const Algebra& a) {
  os << "algebra dim=" << a.dim() << " field=" << a.field().str() << "\n";
  os << "basis:";
  for (const std::string& n : a.names()) os << " " << n;
  os << "\n";
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Vec p = a.basis_product(i, j);
      if (!vec_is_zero(p))
        os << a.names()[i] << " * " << a.names()[j] << " = " << combo(p, a.names()) << "\n";
    }
}

void print_action(std::ostream& os, const std::string& header, const BilinearMap& b,
                  const std::vector<std::string>& left, const std::vector<std::string>& right,
                  const std::vector<std::string>& out) {
  os << header << "\n";
  bool any = false;
  for (std::size_t i = 0; i < b.left_dim(); ++i)
    for (std::size_t j = 0; j < b.right_dim(); ++j) {
      const Vec v = b.value(i, j);
      if (!vec_is_zero(v)) {
        os << "  " << left[i] << " , " << right[j] << " -> " << combo(v, out) << "\n";
        any = true;
      }
    }
  if (!any) os << "  (zero)\n";
}

void print_pair(std::ostream& os, const MatchedPair& p) {
  os << "matched pair over " << p.field().str() << ": dim A = " << p.a().dim()
     << ", dim X = " << p.x().dim() << "\n";
  os << "A:\n";
  print_algebra(os, p.a());
  os << "X:\n";
  print_algebra(os, p.x());
  const auto &an = p.a().names(), &xn = p.x().names();
  print_action(os, "[x*a]_A:", p.xa_to_a(), xn, an, an);
  print_action(os, "[x*a]_X:", p.xa_to_x(), xn, an, xn);
  print_action(os, "[a*x]_A:", p.ax_to_a(), an, xn, an);
  print_action(os, "[a*x]_X:", p.ax_to_x(), an, xn, xn);
}

void print_matrix(std::ostream& os, const Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << "  [";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c).str();
    os << "]\n";
  }
}

void print_factorization(std::ostream& os, const Factorization& f) {
  os << "factorization of:\n";
  print_algebra(os, f.ambient);
  os << "A part (dim " << f.a_part.dim() << "):\n";
  print_matrix(os, f.a_part.basis());
  os << "X part (dim " << f.x_part.dim() << "):\n";
  print_matrix(os, f.x_part.basis());
}

void print_fingerprint(std::ostream& os, const Fingerprint& fp) {
  os << "dim: " << fp.dim << "\n";
  os << "commutative: " << (fp.commutative ? "yes" : "no") << "\n";
  os << "unital: " << (fp.unital ? "yes" : "no") << "\n";
  os << "product span dim: " << fp.product_span_dim << "\n";
  os << "left annihilator dim: " << fp.left_annihilator_dim << "\n";
  os << "right annihilator dim: " << fp.right_annihilator_dim << "\n";
  os << "square-zero solutions: "
     << (fp.square_zero_count ? std::to_string(*fp.square_zero_count) : "uncounted") << "\n";
  os << "idempotent solutions: "
     << (fp.idempotent_count ? std::to_string(*fp.idempotent_count) : "uncounted") << "\n";
}

void print_verdict(std::ostream& os, const IsoVerdict& v) {
  const char* s = v.status == IsoStatus::isomorphic
                      ? "isomorphic"
                      : v.status == IsoStatus::not_isomorphic ? "not isomorphic" : "unknown";
  os << "verdict: " << s << "\n";
  os << "detail: " << v.detail << "\n";
  if (v.witness) {
    os << "witness (columns = images of basis vectors):\n";
    print_matrix(os, *v.witness);
  }
}

/* Slot letters per axiom, in the checker's tuple order; 'a'/'b' index A's
 * basis, 'x'/'y' index X's.  Final char: space the two sides live in. */
struct AxiomSlots {
  const char* id;
  const char* slots;
  char out;
};
constexpr AxiomSlots kAxiomSlots[] = {
    {"BX1", "abx", 'X'}, {"BX2", "xab", 'X'}, {"BX3", "axb", 'X'}, {"BA1", "xya", 'A'},
    {"BA2", "axy", 'A'}, {"BA3", "xay", 'A'}, {"MP1", "axy", 'X'}, {"MP2", "abx", 'A'},
    {"MP3", "xab", 'A'}, {"MP4", "xya", 'X'}, {"MP5", "axb", 'A'}, {"MP6", "xay", 'X'},
};

std::string pair_violation_line(const MatchedPair& p, const PairViolation& v) {
  const AxiomSlots* slots = nullptr;
  for (const AxiomSlots& s : kAxiomSlots)
    if (v.axiom == s.id) slots = &s;
  std::string where;
  for (int i = 0; i < 3; ++i) {
    const char slot = slots->slots[i];
    const bool in_a = slot == 'a' || slot == 'b';
    const std::string& name =
        (in_a ? p.a().names() : p.x().names())[v.where[static_cast<std::size_t>(i)]];
    where += std::string(i ? ", " : "") + slot + "=" + name;
  }
  const auto& out_names = slots->out == 'A' ? p.a().names() : p.x().names();
  return v.axiom + " violated at (" + where + "): lhs = " + combo(v.lhs, out_names) +
         ", rhs = " + combo(v.rhs, out_names);
}

void print_report(std::ostream& os, const ClassificationReport& r) {
  os << "pair: " << r.pair_id << "\n";
  os << "field: " << r.field.str() << "\n";
  os << "deformation maps found: " << r.maps.size() << "\n";
  for (std::size_t c = 0; c < r.classes.size(); ++c) {
    const ComplementClass& cls = r.classes[c];
    os << "class " << c + 1 << ": representative #" << cls.representative << ", members {";
    for (std::size_t i = 0; i < cls.members.size(); ++i)
      os << (i ? ", " : "") << cls.members[i];
    os << "}, size " << cls.members.size() << "\n";
    os << "  representative map:\n";
    print_matrix(os, r.maps[cls.representative].matrix());
    os << "  fingerprint: dim=" << cls.fingerprint.dim
       << " commutative=" << (cls.fingerprint.commutative ? "yes" : "no")
       << " unital=" << (cls.fingerprint.unital ? "yes" : "no") << "\n";
  }
  os << "factorization index = " << r.factorization_index() << "\n";
}

/* ---- subcommands ---- */

int emit_check(const Options& o, bool pass, const std::string& message) {
  if (want_doc(o)) {
    Json j = Json::object();
    j["format_version"] = kFormatVersion;
    j["kind"] = "check_report";
    j["pass"] = pass;
    j["message"] = message;
    std::cout << render(j);
  } else {
    std::cout << message << "\n";
  }
  return pass ? 0 : 1;
}

int cmd_check(const Options& o) {
  const FieldSpec f = parse_field(o.field_str);
  if (o.kind == "algebra") {
    const Algebra a = get_algebra(o, f);
    if (const auto v = check_associative(a))
      return emit_check(o, false,
                        "associativity violated at (" + a.names()[v->i] + ", " + a.names()[v->j] +
                            ", " + a.names()[v->k] + "): lhs = " + combo(v->lhs, a.names()) +
                            ", rhs = " + combo(v->rhs, a.names()));
    return emit_check(o, true, "ok: associative");
  }
  if (o.kind == "pair") {
    const MatchedPair p = get_pair(o, f);
    if (const auto v = check_matched_pair(p)) return emit_check(o, false, pair_violation_line(p, *v));
    return emit_check(o, true, "ok: matched pair");
  }
  if (o.kind == "factorization") {
    const Factorization fac = get_factorization(o, f);
    if (const auto v = check_factorization(fac))
      return emit_check(o, false, "factorization violated: " + v->detail);
    return emit_check(o, true, "ok: factorization");
  }
  if (o.kind == "deformation") {
    const auto [p, cand] = get_pair_and_candidate(o, f);
    if (const auto v = is_deformation_map(p, cand))
      return emit_check(o, false,
                        "deformation identity violated at (x=" + p.x().names()[v->x_index] +
                            ", y=" + p.x().names()[v->y_index] + "): lhs = " +
                            combo(v->lhs, p.a().names()) + ", rhs = " + combo(v->rhs, p.a().names()));
    return emit_check(o, true, "ok: deformation map");
  }
  throw ParseError("--kind must be algebra, pair, factorization, or deformation");
}

int cmd_bicrossed(const Options& o) {
  const FieldSpec f = parse_field(o.field_str);
  const Algebra e = bicrossed_product(get_pair(o, f));
  if (want_doc(o))
    std::cout << render(to_doc(e));
  else
    print_algebra(std::cout, e);
  return 0;
}

int cmd_canonical(const Options& o) {
  const FieldSpec f = parse_field(o.field_str);
  const MatchedPair p = canonical_matched_pair(get_factorization(o, f));
  if (want_doc(o))
    std::cout << render(to_doc(p));
  else
    print_pair(std::cout, p);
  return 0;
}

int emit_pair(const Options& o, const MatchedPair& p) {
  if (want_doc(o))
    std::cout << render(to_doc(p));
  else
    print_pair(std::cout, p);
  return 0;
}

int cmd_trivial_ext(const Options& o) {
  if (o.input.empty()) throw ParseError("trivial-ext needs --input");
  Json d = load_document_file(o.input);
  expect_kind(d, "trivial_extension_input");
  try {
    const Algebra a = algebra_from_doc(d.at("algebra_a"));
    std::vector<std::string> names;
    if (d.contains("x_names")) names = d.at("x_names").get<std::vector<std::string>>();
    return emit_pair(o, trivial_extension(a, bilinear_from_doc(a.field(), d.at("ax_to_x")),
                                          bilinear_from_doc(a.field(), d.at("xa_to_x")), names));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("trivial_extension_input: ") + e.what());
  }
}

int cmd_semidirect(const Options& o) {
  if (o.input.empty()) throw ParseError("semidirect needs --input");
  Json d = load_document_file(o.input);
  expect_kind(d, "semidirect_input");
  try {
    const Algebra a = algebra_from_doc(d.at("algebra_a"));
    const Algebra x = algebra_from_doc(d.at("algebra_x"));
    return emit_pair(o, semidirect_product(a, x, bilinear_from_doc(a.field(), d.at("ax_to_x")),
                                           bilinear_from_doc(a.field(), d.at("xa_to_x"))));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("semidirect_input: ") + e.what());
  }
}

int cmd_deform(const Options& o) {
  const FieldSpec f = parse_field(o.field_str);
  const auto [p, cand] = get_pair_and_candidate(o, f);
  const Algebra xr = deform(p, DeformationMap::checked(p, cand));
  if (want_doc(o))
    std::cout << render(to_doc(xr));
  else
    print_algebra(std::cout, xr);
  return 0;
}

int cmd_lift(const Options& o) {
  const FieldSpec f = parse_field(o.field_str);
  const auto [p, cand] = get_pair_and_candidate(o, f);
  const Factorization fac = lifted_factorization(p, DeformationMap::checked(p, cand));
  if (want_doc(o))
    std::cout << render(to_doc(fac));
  else
    print_factorization(std::cout, fac);
  return 0;
}

int cmd_extract(const Options& o) {
  const FieldSpec f = parse_field(o.field_str);
  if (o.complement.empty()) throw ParseError("extract needs --complement <subspace file>");
  const Factorization fac = get_factorization(o, f);
  const Subspace other = subspace_from_doc(load_document_file(o.complement));
  const DeformationMap r = extract_deformation(fac, other);
  if (want_doc(o)) {
    std::cout << render(to_doc(r));
  } else {
    std::cout << "deformation map (" << r.a_dim() << " x " << r.x_dim() << "):\n";
    print_matrix(std::cout, r.matrix());
  }
  return 0;
}

int cmd_enumerate(const Options& o) {
  const FieldSpec f = parse_field(o.field_str);
  const MatchedPair p = get_pair(o, f);
  const auto maps = enumerate_deformation_maps(p, {o.budget, o.workers});
  if (want_doc(o)) {
    std::cout << render(maps_to_doc(f, p.a().dim(), p.x().dim(), maps));
  } else {
    std::cout << "deformation maps found: " << maps.size() << "\n";
    for (std::size_t i = 0; i < maps.size(); ++i) {
      std::cout << "#" << i << ":\n";
      print_matrix(std::cout, maps[i].matrix());
    }
  }
  return 0;
}

int cmd_classify(const Options& o) {
  const FieldSpec f = parse_field(o.field_str);
  const MatchedPair p = get_pair(o, f);
  const ClassificationReport rep =
      classify_complements(p, {o.budget, o.gl_budget, o.workers}, pair_label(o));
  if (want_doc(o))
    std::cout << render(to_doc(rep));
  else
    print_report(std::cout, rep);
  return 0;
}

int cmd_fingerprint(const Options& o) {
  const FieldSpec f = parse_field(o.field_str);
  Fingerprint fp;
  if (!o.map_label.empty()) {
    const auto [p, cand] = get_pair_and_candidate(o, f);
    fp = invariant_fingerprint(deform(p, DeformationMap::checked(p, cand)), o.budget);
  } else {
    fp = invariant_fingerprint(get_algebra(o, f), o.budget);
  }
  if (want_doc(o))
    std::cout << render(to_doc(fp));
  else
    print_fingerprint(std::cout, fp);
  return 0;
}

int cmd_iso(const Options& o) {
  if (o.left.empty() || o.right.empty()) throw ParseError("iso needs --left and --right");
  const Algebra a = algebra_from_doc(load_document_file(o.left));
  const Algebra b = algebra_from_doc(load_document_file(o.right));
  std::vector<Matrix> witnesses;
  if (!o.witness.empty()) witnesses.push_back(matrix_from_doc(load_document_file(o.witness)));
  const IsoVerdict v = are_isomorphic(a, b, {o.budget, o.gl_budget, o.workers}, witnesses);
  if (want_doc(o))
    std::cout << render(to_doc(v));
  else
    print_verdict(std::cout, v);
  return 0;
}

int run_guarded(const std::function<int()>& run) {
  try {
    return run();
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const UnresolvedPair& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const InvalidMatchedPair& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const NotAFactorization& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const NotABimodule& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const NotMultiplicativeBimodule& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const NotAComplement& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const InvalidDeformationMap& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const NotASubalgebra& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const NotAnIdeal& e) {
    std::cerr << "check failed: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact-arithmetic toolkit for algebra factorizations, matched pairs, "
               "bicrossed products, and deformation maps"};
  app.require_subcommand(1);

  Options o;
  std::function<int()> run;

  auto add_common = [&](CLI::App* c) {
    c->add_option("--field", o.field_str, "Q, F<p>, or Fp:<p> (default Q)");
    c->add_option("--output", o.output, "text or doc (default text)");
  };
  auto add_source = [&](CLI::App* c) {
    c->add_option("--catalog", o.catalog, "built-in entry id (see ids below)");
    c->add_option("--n", o.n, "size parameter for mn / *-split families");
    c->add_option("--m", o.m, "corner dimension for bimodule-corner");
    c->add_option("--input", o.input, "input document path");
  };
  auto add_map = [&](CLI::App* c) {
    c->add_option("--map", o.map_label, "known deformation map label (r_a, r^alpha, r_beta, r_1..r_3)");
    c->add_option("--a", o.params, "family parameter(s), repeatable");
  };
  auto add_budgets = [&](CLI::App* c) {
    c->add_option("--budget", o.budget, "candidate enumeration budget (default 10^7)");
    c->add_option("--gl-budget", o.gl_budget, "witness search budget on |GL| (default 10^6)");
    c->add_option("--workers", o.workers, "worker threads for enumeration (default 1)");
  };

  CLI::App* c = app.add_subcommand("check", "validate an object; prints the first violation");
  add_common(c);
  add_source(c);
  add_map(c);
  c->add_option("--kind", o.kind, "algebra | pair | factorization | deformation")->required();
  c->callback([&] { run = [&] { return cmd_check(o); }; });

  c = app.add_subcommand("bicrossed", "bicrossed product of a matched pair");
  add_common(c);
  add_source(c);
  c->callback([&] { run = [&] { return cmd_bicrossed(o); }; });

  c = app.add_subcommand("canonical", "canonical matched pair of a factorization");
  add_common(c);
  add_source(c);
  c->callback([&] { run = [&] { return cmd_canonical(o); }; });

  c = app.add_subcommand("trivial-ext", "matched pair of an algebra acting on a bimodule");
  add_common(c);
  c->add_option("--input", o.input, "trivial_extension_input document")->required();
  c->callback([&] { run = [&] { return cmd_trivial_ext(o); }; });

  c = app.add_subcommand("semidirect", "semidirect matched pair of two algebras");
  add_common(c);
  c->add_option("--input", o.input, "semidirect_input document")->required();
  c->callback([&] { run = [&] { return cmd_semidirect(o); }; });

  c = app.add_subcommand("deform", "twisted multiplication on X for a deformation map");
  add_common(c);
  add_source(c);
  add_map(c);
  c->callback([&] { run = [&] { return cmd_deform(o); }; });

  c = app.add_subcommand("lift", "complement of A in the bicrossed product from a map");
  add_common(c);
  add_source(c);
  add_map(c);
  c->callback([&] { run = [&] { return cmd_lift(o); }; });

  c = app.add_subcommand("extract", "read a deformation map off a complement");
  add_common(c);
  add_source(c);
  c->add_option("--complement", o.complement, "subspace document for the other complement");
  c->callback([&] { run = [&] { return cmd_extract(o); }; });

  c = app.add_subcommand("enumerate", "all deformation maps over a prime field");
  add_common(c);
  add_source(c);
  add_budgets(c);
  c->callback([&] { run = [&] { return cmd_enumerate(o); }; });

  c = app.add_subcommand("classify", "equivalence classes of deformation maps and the index");
  add_common(c);
  add_source(c);
  add_budgets(c);
  c->callback([&] { run = [&] { return cmd_classify(o); }; });

  c = app.add_subcommand("fingerprint", "isomorphism invariants of an algebra");
  add_common(c);
  add_source(c);
  add_map(c);
  c->add_option("--budget", o.budget, "solution counting budget (default 10^7)");
  c->callback([&] { run = [&] { return cmd_fingerprint(o); }; });

  c = app.add_subcommand("iso", "isomorphism verdict for two algebra documents");
  add_common(c);
  add_budgets(c);
  c->add_option("--left", o.left, "algebra document")->required();
  c->add_option("--right", o.right, "algebra document")->required();
  c->add_option("--witness", o.witness, "candidate witness matrix document");
  c->callback([&] { run = [&] { return cmd_iso(o); }; });

  app.footer("catalog ids: mn --n N | triangular-split --n N | lastrow-split --n N | "
             "bimodule-corner --m M | m2-split | m3-lastrow");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  return run_guarded(run);
}
