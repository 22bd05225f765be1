#include "algfact/scalar.hpp"

#include <cctype>

namespace algfact {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

/* Deterministic Miller-Rabin; this witness set decides primality for all
 * 64-bit inputs. */
bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    u64 x = powmod(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(u64 p) {
  if (p >= (u64(1) << 62) || !is_prime_u64(p))
    throw InvalidField("not a usable prime modulus: " + std::to_string(p));
  return FieldSpec(FieldKind::prime, p);
}

u64 FieldSpec::modulus() const {
  if (kind_ != FieldKind::prime) throw InvalidField("rationals have no modulus");
  return p_;
}

std::string FieldSpec::str() const {
  return kind_ == FieldKind::rationals ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& f) {
  if (f.is_prime_field()) return Scalar(f, u64(0));
  return Scalar(f, mpq_class(0));
}

Scalar Scalar::one(const FieldSpec& f) {
  if (f.is_prime_field()) return Scalar(f, u64(1 % f.modulus()));
  return Scalar(f, mpq_class(1));
}

Scalar Scalar::of_int(const FieldSpec& f, long long v) {
  if (!f.is_prime_field()) return Scalar(f, mpq_class(static_cast<long>(v)));
  const auto p = static_cast<long long>(f.modulus());
  long long r = v % p;
  if (r < 0) r += p;
  return Scalar(f, static_cast<u64>(r));
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Scalar Scalar::parse(const FieldSpec& f, std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  if (slash != std::string_view::npos) {
    if (!f.is_prime_field()) {
      std::string_view num = body.substr(0, slash);
      std::string_view den = body.substr(slash + 1);
      if (!all_digits(num) || !all_digits(den))
        throw ParseError("bad rational literal: '" + std::string(text) + "'");
      mpz_class n(std::string(num), 10), d(std::string(den), 10);
      if (d == 0) throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
      mpq_class q(n, d);
      q.canonicalize();
      if (negative) q = -q;
      return Scalar(f, std::move(q));
    }
    throw ParseError("'/' not allowed over " + f.str() + ": '" + std::string(text) + "'");
  }
  if (!all_digits(body)) throw ParseError("bad integer literal: '" + std::string(text) + "'");
  mpz_class n(std::string(body), 10);
  if (negative) n = -n;
  if (!f.is_prime_field()) return Scalar(f, mpq_class(n));
  mpz_class r = n % static_cast<unsigned long>(f.modulus());
  if (r < 0) r += static_cast<unsigned long>(f.modulus());
  return Scalar(f, static_cast<u64>(r.get_ui()));
}

bool Scalar::is_zero() const {
  if (field_.is_prime_field()) return std::get<u64>(v_) == 0;
  return std::get<mpq_class>(v_) == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime_field()) return std::get<u64>(v_) == 1 % field_.modulus();
  return std::get<mpq_class>(v_) == 1;
}

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime_field()) throw InvalidField("residue() needs a prime field");
  return std::get<u64>(v_);
}

std::string Scalar::str() const {
  if (field_.is_prime_field()) return std::to_string(std::get<u64>(v_));
  return std::get<mpq_class>(v_).get_str();
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("mixing " + field_.str() + " with " + o.field_.str());
}

Scalar Scalar::operator-() const {
  if (field_.is_prime_field()) {
    const u64 p = field_.modulus();
    const u64 a = std::get<u64>(v_);
    return Scalar(field_, a == 0 ? 0 : p - a);
  }
  return Scalar(field_, mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (!field_.is_prime_field())
    return Scalar(field_, mpq_class(1 / std::get<mpq_class>(v_)));
  /* extended Euclid on (a, p); p prime so gcd is 1 */
  const auto p = static_cast<long long>(field_.modulus());
  long long a = static_cast<long long>(std::get<u64>(v_)), b = p;
  long long x0 = 1, x1 = 0;
  while (b) {
    const long long q = a / b;
    a -= q * b;
    std::swap(a, b);
    x0 -= q * x1;
    std::swap(x0, x1);
  }
  if (x0 < 0) x0 += p;
  return Scalar(field_, static_cast<u64>(x0));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_prime_field()) {
    u64& a = std::get<u64>(v_);
    a += std::get<u64>(o.v_);
    const u64 p = field_.modulus();
    if (a >= p) a -= p;
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_prime_field()) {
    u64& a = std::get<u64>(v_);
    const u64 b = std::get<u64>(o.v_);
    const u64 p = field_.modulus();
    a = a >= b ? a - b : a + p - b;
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_prime_field()) {
    u64& a = std::get<u64>(v_);
    a = mulmod(a, std::get<u64>(o.v_), field_.modulus());
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (a.field_.is_prime_field()) return std::get<std::uint64_t>(a.v_) == std::get<std::uint64_t>(b.v_);
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

}  // namespace algfact
