#pragma once

#include <cstdint>
#include <gmpxx.h>

#include <string>
#include <string_view>
#include <variant>

#include "algfact/errors.hpp"

namespace algfact {

enum class FieldKind : std::uint8_t { rationals, prime };

bool is_prime_u64(std::uint64_t n);

class FieldSpec {
 public:
  static FieldSpec rationals() { return FieldSpec(FieldKind::rationals, 0); }
  // p must be prime and < 2^62 so residue sums never wrap.
  static FieldSpec prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == FieldKind::prime; }
  std::uint64_t modulus() const;
  std::string str() const;  // "Q" or "F<p>"

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  FieldSpec(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint64_t p_;
};

/* Exact field element.  Rationals are kept canonical (lowest terms, positive
 * denominator); prime-field values are residues in [0, p). */
class Scalar {
 public:
  static Scalar zero(const FieldSpec& f);
  static Scalar one(const FieldSpec& f);
  static Scalar of_int(const FieldSpec& f, long long v);
  // Text grammar: INT for prime fields, INT or INT "/" POSINT for Q.
  static Scalar parse(const FieldSpec& f, std::string_view text);

  const FieldSpec& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;
  std::uint64_t residue() const;  // prime fields only
  std::string str() const;

  Scalar operator-() const;
  Scalar inverse() const;  // DivisionByZero on zero

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a *= b.inverse(); }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Scalar(FieldSpec f, std::uint64_t r) : field_(f), v_(r) {}
  Scalar(FieldSpec f, mpq_class q) : field_(f), v_(std::move(q)) {}
  void require_same_field(const Scalar& o) const;

  FieldSpec field_;
  std::variant<std::uint64_t, mpq_class> v_;
};

}  // namespace algfact
