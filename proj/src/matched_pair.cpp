#include "algfact/matched_pair.hpp"

namespace algfact {

BilinearMap::BilinearMap(const FieldSpec& f, std::size_t left_dim, std::size_t right_dim,
                         std::size_t out_dim)
    : field_(f),
      left_(left_dim),
      right_(right_dim),
      out_(out_dim),
      t_(left_dim * right_dim * out_dim, Scalar::zero(f)) {}

const Scalar& BilinearMap::at(std::size_t i, std::size_t j, std::size_t k) const {
  if (i >= left_ || j >= right_ || k >= out_) throw IndexError("action index out of range");
  return t_[(i * right_ + j) * out_ + k];
}

void BilinearMap::set(std::size_t i, std::size_t j, std::size_t k, const Scalar& v) {
  if (i >= left_ || j >= right_ || k >= out_) throw IndexError("action index out of range");
  if (v.field() != field_) throw FieldMismatch("action entry field mismatch");
  t_[(i * right_ + j) * out_ + k] = v;
}

void BilinearMap::set_value(std::size_t i, std::size_t j, const Vec& value) {
  if (value.size() != out_) throw DimensionMismatch("action value size mismatch");
  for (std::size_t k = 0; k < out_; ++k) set(i, j, k, value[k]);
}

Vec BilinearMap::value(std::size_t i, std::size_t j) const {
  if (i >= left_ || j >= right_) throw IndexError("action index out of range");
  const auto* base = &t_[(i * right_ + j) * out_];
  return Vec(base, base + out_);
}

Vec BilinearMap::apply(const Vec& u, const Vec& v) const {
  if (u.size() != left_ || v.size() != right_) throw DimensionMismatch("action apply mismatch");
  Vec r = vec_zero(field_, out_);
  for (std::size_t i = 0; i < left_; ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < right_; ++j) {
      if (v[j].is_zero()) continue;
      const Scalar uv = u[i] * v[j];
      const auto* base = &t_[(i * right_ + j) * out_];
      for (std::size_t k = 0; k < out_; ++k)
        if (!base[k].is_zero()) r[k] += uv * base[k];
    }
  }
  return r;
}

Vec BilinearMap::apply_left_basis(std::size_t i, const Vec& v) const {
  if (i >= left_ || v.size() != right_) throw DimensionMismatch("action apply mismatch");
  Vec r = vec_zero(field_, out_);
  for (std::size_t j = 0; j < right_; ++j) {
    if (v[j].is_zero()) continue;
    const auto* base = &t_[(i * right_ + j) * out_];
    for (std::size_t k = 0; k < out_; ++k)
      if (!base[k].is_zero()) r[k] += v[j] * base[k];
  }
  return r;
}

Vec BilinearMap::apply_right_basis(const Vec& u, std::size_t j) const {
  if (j >= right_ || u.size() != left_) throw DimensionMismatch("action apply mismatch");
  Vec r = vec_zero(field_, out_);
  for (std::size_t i = 0; i < left_; ++i) {
    if (u[i].is_zero()) continue;
    const auto* base = &t_[(i * right_ + j) * out_];
    for (std::size_t k = 0; k < out_; ++k)
      if (!base[k].is_zero()) r[k] += u[i] * base[k];
  }
  return r;
}

bool BilinearMap::is_zero() const {
  for (const auto& s : t_)
    if (!s.is_zero()) return false;
  return true;
}

bool operator==(const BilinearMap& a, const BilinearMap& b) {
  if (a.field_ != b.field_ || a.left_ != b.left_ || a.right_ != b.right_ || a.out_ != b.out_)
    return false;
  for (std::size_t i = 0; i < a.t_.size(); ++i)
    if (a.t_[i] != b.t_[i]) return false;
  return true;
}

MatchedPair::MatchedPair(Algebra a, Algebra x, BilinearMap xa_to_a, BilinearMap xa_to_x,
                         BilinearMap ax_to_a, BilinearMap ax_to_x)
    : a_(std::move(a)),
      x_(std::move(x)),
      xa_to_a_(std::move(xa_to_a)),
      xa_to_x_(std::move(xa_to_x)),
      ax_to_a_(std::move(ax_to_a)),
      ax_to_x_(std::move(ax_to_x)) {
  const std::size_t da = a_.dim(), dx = x_.dim();
  if (a_.field() != x_.field()) throw FieldMismatch("pair algebras over different fields");
  auto shape = [&](const BilinearMap& m, std::size_t l, std::size_t r, std::size_t o,
                   const char* label) {
    if (m.field() != a_.field()) throw FieldMismatch(std::string(label) + ": field mismatch");
    if (m.left_dim() != l || m.right_dim() != r || m.out_dim() != o)
      throw DimensionMismatch(std::string(label) + ": action tensor shape mismatch");
  };
  shape(xa_to_a_, dx, da, da, "xa_to_a");
  shape(xa_to_x_, dx, da, dx, "xa_to_x");
  shape(ax_to_a_, da, dx, da, "ax_to_a");
  shape(ax_to_x_, da, dx, dx, "ax_to_x");
}

MatchedPair MatchedPair::with_trivial_actions(Algebra a, Algebra x) {
  const FieldSpec f = a.field();
  const std::size_t da = a.dim(), dx = x.dim();
  return MatchedPair(std::move(a), std::move(x), BilinearMap(f, dx, da, da),
                     BilinearMap(f, dx, da, dx), BilinearMap(f, da, dx, da),
                     BilinearMap(f, da, dx, dx));
}

BilinearMap& MatchedPair::mutable_action(int which) {
  switch (which) {
    case 0: return xa_to_a_;
    case 1: return xa_to_x_;
    case 2: return ax_to_a_;
    case 3: return ax_to_x_;
  }
  throw IndexError("action selector out of range");
}

namespace {

/* Readable aliases for the axiom formulas.  a,b range over A; x,y over X. */
struct Ops {
  const MatchedPair& p;
  Vec mulA(const Vec& u, const Vec& v) const { return p.a().multiply(u, v); }
  Vec mulX(const Vec& u, const Vec& v) const { return p.x().multiply(u, v); }
  Vec xa_a(const Vec& x, const Vec& a) const { return p.xa_to_a().apply(x, a); }
  Vec xa_x(const Vec& x, const Vec& a) const { return p.xa_to_x().apply(x, a); }
  Vec ax_a(const Vec& a, const Vec& x) const { return p.ax_to_a().apply(a, x); }
  Vec ax_x(const Vec& a, const Vec& x) const { return p.ax_to_x().apply(a, x); }
};

}  // namespace

std::optional<PairViolation> check_matched_pair(const MatchedPair& p) {
  const std::size_t da = p.a().dim(), dx = p.x().dim();
  const FieldSpec f = p.field();
  const Ops o{p};
  auto ea = [&](std::size_t i) { return vec_unit(f, da, i); };
  auto ex = [&](std::size_t i) { return vec_unit(f, dx, i); };

  struct Axiom {
    const char* id;
    std::size_t d1, d2, d3;  // tuple ranges; da/dx resolved by caller
    std::function<Vec(std::size_t, std::size_t, std::size_t)> lhs, rhs;
  };
  std::vector<Axiom> axioms;

  /* one-sided module structure on X */
  axioms.push_back({"BX1", da, da, dx,
                    [&](auto i, auto j, auto k) { return o.ax_x(o.mulA(ea(i), ea(j)), ex(k)); },
                    [&](auto i, auto j, auto k) { return o.ax_x(ea(i), o.ax_x(ea(j), ex(k))); }});
  axioms.push_back({"BX2", dx, da, da,
                    [&](auto i, auto j, auto k) { return o.xa_x(ex(i), o.mulA(ea(j), ea(k))); },
                    [&](auto i, auto j, auto k) { return o.xa_x(o.xa_x(ex(i), ea(j)), ea(k)); }});
  axioms.push_back({"BX3", da, dx, da,
                    [&](auto i, auto j, auto k) { return o.ax_x(ea(i), o.xa_x(ex(j), ea(k))); },
                    [&](auto i, auto j, auto k) { return o.xa_x(o.ax_x(ea(i), ex(j)), ea(k)); }});
  /* one-sided module structure on A */
  axioms.push_back({"BA1", dx, dx, da,
                    [&](auto i, auto j, auto k) { return o.xa_a(o.mulX(ex(i), ex(j)), ea(k)); },
                    [&](auto i, auto j, auto k) { return o.xa_a(ex(i), o.xa_a(ex(j), ea(k))); }});
  axioms.push_back({"BA2", da, dx, dx,
                    [&](auto i, auto j, auto k) { return o.ax_a(ea(i), o.mulX(ex(j), ex(k))); },
                    [&](auto i, auto j, auto k) { return o.ax_a(o.ax_a(ea(i), ex(j)), ex(k)); }});
  axioms.push_back({"BA3", dx, da, dx,
                    [&](auto i, auto j, auto k) { return o.xa_a(ex(i), o.ax_a(ea(j), ex(k))); },
                    [&](auto i, auto j, auto k) { return o.ax_a(o.xa_a(ex(i), ea(j)), ex(k)); }});
  /* compatibility with both multiplications */
  axioms.push_back({"MP1", da, dx, dx,
                    [&](auto i, auto j, auto k) { return o.ax_x(ea(i), o.mulX(ex(j), ex(k))); },
                    [&](auto i, auto j, auto k) {
                      return vec_add(o.mulX(o.ax_x(ea(i), ex(j)), ex(k)),
                                     o.ax_x(o.ax_a(ea(i), ex(j)), ex(k)));
                    }});
  axioms.push_back({"MP2", da, da, dx,
                    [&](auto i, auto j, auto k) { return o.ax_a(o.mulA(ea(i), ea(j)), ex(k)); },
                    [&](auto i, auto j, auto k) {
                      return vec_add(o.mulA(ea(i), o.ax_a(ea(j), ex(k))),
                                     o.ax_a(ea(i), o.ax_x(ea(j), ex(k))));
                    }});
  axioms.push_back({"MP3", dx, da, da,
                    [&](auto i, auto j, auto k) { return o.xa_a(ex(i), o.mulA(ea(j), ea(k))); },
                    [&](auto i, auto j, auto k) {
                      return vec_add(o.mulA(o.xa_a(ex(i), ea(j)), ea(k)),
                                     o.xa_a(o.xa_x(ex(i), ea(j)), ea(k)));
                    }});
  axioms.push_back({"MP4", dx, dx, da,
                    [&](auto i, auto j, auto k) { return o.xa_x(o.mulX(ex(i), ex(j)), ea(k)); },
                    [&](auto i, auto j, auto k) {
                      return vec_add(o.xa_x(ex(i), o.xa_a(ex(j), ea(k))),
                                     o.mulX(ex(i), o.xa_x(ex(j), ea(k))));
                    }});
  axioms.push_back({"MP5", da, dx, da,
                    [&](auto i, auto j, auto k) {
                      return vec_add(o.mulA(ea(i), o.xa_a(ex(j), ea(k))),
                                     o.ax_a(ea(i), o.xa_x(ex(j), ea(k))));
                    },
                    [&](auto i, auto j, auto k) {
                      return vec_add(o.mulA(o.ax_a(ea(i), ex(j)), ea(k)),
                                     o.xa_a(o.ax_x(ea(i), ex(j)), ea(k)));
                    }});
  axioms.push_back({"MP6", dx, da, dx,
                    [&](auto i, auto j, auto k) {
                      return vec_add(o.xa_x(ex(i), o.ax_a(ea(j), ex(k))),
                                     o.mulX(ex(i), o.ax_x(ea(j), ex(k))));
                    },
                    [&](auto i, auto j, auto k) {
                      return vec_add(o.ax_x(o.xa_a(ex(i), ea(j)), ex(k)),
                                     o.mulX(o.xa_x(ex(i), ea(j)), ex(k)));
                    }});

  for (const Axiom& ax : axioms) {
    for (std::size_t i = 0; i < ax.d1; ++i) {
      for (std::size_t j = 0; j < ax.d2; ++j) {
        for (std::size_t k = 0; k < ax.d3; ++k) {
          Vec lhs = ax.lhs(i, j, k);
          Vec rhs = ax.rhs(i, j, k);
          if (lhs != rhs)
            return PairViolation{ax.id, {i, j, k}, std::move(lhs), std::move(rhs)};
        }
      }
    }
  }
  return std::nullopt;
}

Algebra bicrossed_product(const MatchedPair& p) {
  if (auto v = check_matched_pair(p)) {
    throw InvalidMatchedPair("axiom " + v->axiom + " fails at (" +
                             std::to_string(v->where[0]) + "," + std::to_string(v->where[1]) +
                             "," + std::to_string(v->where[2]) + ")");
  }
  const std::size_t da = p.a().dim(), dx = p.x().dim(), n = da + dx;
  Algebra e(p.field(), n);
  {
    std::vector<std::string> names = p.a().names();
    bool clash = false;
    for (const auto& xn : p.x().names())
      for (const auto& an : names)
        if (xn == an) clash = true;
    for (const auto& xn : p.x().names()) names.push_back(xn);
    if (clash) {
      for (std::size_t i = 0; i < da; ++i) names[i] = "a:" + names[i];
      for (std::size_t i = da; i < n; ++i) names[i] = "x:" + names[i];
    }
    e.set_names(std::move(names));
  }
  auto put = [&](std::size_t i, std::size_t j, const Vec& apart, const Vec& xpart) {
    for (std::size_t k = 0; k < da; ++k) e.set_c(i, j, k, apart[k]);
    for (std::size_t k = 0; k < dx; ++k) e.set_c(i, j, da + k, xpart[k]);
  };
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      put(i, j, p.a().basis_product(i, j), vec_zero(p.field(), dx));
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < dx; ++j)
      put(i, da + j, p.ax_to_a().value(i, j), p.ax_to_x().value(i, j));
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < da; ++j)
      put(da + i, j, p.xa_to_a().value(i, j), p.xa_to_x().value(i, j));
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dx; ++j)
      put(da + i, da + j, vec_zero(p.field(), da), p.x().basis_product(i, j));
  return e;
}

MatchedPair canonical_matched_pair(const Factorization& f) {
  if (auto v = check_factorization(f))
    throw NotAFactorization("not a factorization: " + v->detail);
  const Algebra a = subalgebra_on_basis(f.ambient, f.a_part);
  const Algebra x = subalgebra_on_basis(f.ambient, f.x_part);
  const std::size_t da = a.dim(), dx = x.dim();
  const FieldSpec fld = f.ambient.field();
  BilinearMap xa_a(fld, dx, da, da), xa_x(fld, dx, da, dx);
  BilinearMap ax_a(fld, da, dx, da), ax_x(fld, da, dx, dx);
  for (std::size_t i = 0; i < dx; ++i) {
    for (std::size_t j = 0; j < da; ++j) {
      const Vec prod = f.ambient.multiply(f.x_part.basis().row(i), f.a_part.basis().row(j));
      SplitCoords sc = split_along(f, prod);
      xa_a.set_value(i, j, sc.a_coords);
      xa_x.set_value(i, j, sc.x_coords);
    }
  }
  for (std::size_t i = 0; i < da; ++i) {
    for (std::size_t j = 0; j < dx; ++j) {
      const Vec prod = f.ambient.multiply(f.a_part.basis().row(i), f.x_part.basis().row(j));
      SplitCoords sc = split_along(f, prod);
      ax_a.set_value(i, j, sc.a_coords);
      ax_x.set_value(i, j, sc.x_coords);
    }
  }
  return MatchedPair(std::move(a), std::move(x), std::move(xa_a), std::move(xa_x),
                     std::move(ax_a), std::move(ax_x));
}

namespace {

/* the three bimodule identities shared by trivial_extension and
 * semidirect_product; mulX is the zero product in the trivial case */
void require_bimodule(const Algebra& a, const BilinearMap& ax_x, const BilinearMap& xa_x,
                      bool multiplicative_errors) {
  const std::size_t da = a.dim(), dx = ax_x.right_dim();
  const FieldSpec f = a.field();
  auto fail = [&](const char* identity, std::size_t i, std::size_t j, std::size_t k) {
    const std::string msg = std::string(identity) + " fails at (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) + ")";
    if (multiplicative_errors) throw NotMultiplicativeBimodule(msg);
    throw NotABimodule(msg);
  };
  auto ea = [&](std::size_t i) { return vec_unit(f, da, i); };
  auto ex = [&](std::size_t i) { return vec_unit(f, dx, i); };
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < dx; ++k)
        if (ax_x.apply(a.basis_product(i, j), ex(k)) !=
            ax_x.apply_left_basis(i, ax_x.value(j, k)))
          fail("(ab)*x = a*(b*x)", i, j, k);
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k)
        if (xa_x.apply(ex(i), a.basis_product(j, k)) !=
            xa_x.apply(xa_x.value(i, j), ea(k)))
          fail("x*(ab) = (x*a)*b", i, j, k);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < dx; ++j)
      for (std::size_t k = 0; k < da; ++k)
        if (ax_x.apply_left_basis(i, xa_x.value(j, k)) !=
            xa_x.apply(ax_x.value(i, j), ea(k)))
          fail("a*(x*b) = (a*x)*b", i, j, k);
}

}  // namespace

MatchedPair trivial_extension(const Algebra& a, const BilinearMap& ax_to_x,
                              const BilinearMap& xa_to_x, std::vector<std::string> x_names) {
  const std::size_t dx = ax_to_x.right_dim();
  if (ax_to_x.left_dim() != a.dim() || ax_to_x.out_dim() != dx ||
      xa_to_x.left_dim() != dx || xa_to_x.right_dim() != a.dim() || xa_to_x.out_dim() != dx)
    throw DimensionMismatch("action tensor shapes do not match the bimodule");
  require_bimodule(a, ax_to_x, xa_to_x, /*multiplicative_errors=*/false);
  Algebra x(a.field(), dx);
  if (!x_names.empty()) x.set_names(std::move(x_names));
  return MatchedPair(a, std::move(x), BilinearMap(a.field(), dx, a.dim(), a.dim()), xa_to_x,
                     BilinearMap(a.field(), a.dim(), dx, a.dim()), ax_to_x);
}

MatchedPair semidirect_product(const Algebra& a, const Algebra& x, const BilinearMap& ax_to_x,
                               const BilinearMap& xa_to_x) {
  if (a.field() != x.field()) throw FieldMismatch("algebras over different fields");
  const std::size_t da = a.dim(), dx = x.dim();
  if (ax_to_x.left_dim() != da || ax_to_x.right_dim() != dx || ax_to_x.out_dim() != dx ||
      xa_to_x.left_dim() != dx || xa_to_x.right_dim() != da || xa_to_x.out_dim() != dx)
    throw DimensionMismatch("action tensor shapes do not match the pair");
  require_bimodule(a, ax_to_x, xa_to_x, /*multiplicative_errors=*/true);
  const FieldSpec f = a.field();
  auto ea = [&](std::size_t i) { return vec_unit(f, da, i); };
  auto ex = [&](std::size_t i) { return vec_unit(f, dx, i); };
  auto fail = [&](const char* identity, std::size_t i, std::size_t j, std::size_t k) {
    throw NotMultiplicativeBimodule(std::string(identity) + " fails at (" + std::to_string(i) +
                                    "," + std::to_string(j) + "," + std::to_string(k) + ")");
  };
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < dx; ++j)
      for (std::size_t k = 0; k < dx; ++k)
        if (ax_to_x.apply_left_basis(i, x.basis_product(j, k)) !=
            x.multiply(ax_to_x.value(i, j), ex(k)))
          fail("a*(xy) = (a*x)y", i, j, k);
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < dx; ++j)
      for (std::size_t k = 0; k < da; ++k)
        if (xa_to_x.apply(x.basis_product(i, j), ea(k)) !=
            x.multiply(ex(i), xa_to_x.value(j, k)))
          fail("(xy)*a = x(y*a)", i, j, k);
  for (std::size_t i = 0; i < dx; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < dx; ++k)
        if (x.multiply(ex(i), ax_to_x.value(j, k)) !=
            x.multiply(xa_to_x.value(i, j), ex(k)))
          fail("x(a*y) = (x*a)y", i, j, k);
  return MatchedPair(a, x, BilinearMap(f, dx, da, da), xa_to_x, BilinearMap(f, da, dx, da),
                     ax_to_x);
}

}  // namespace algfact
