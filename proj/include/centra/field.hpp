#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace centra {

enum class FieldKind { Prime, Rational };

/// Description of an exact base field: the prime field F_p or the rationals.
class FieldSpec {
 public:
  /// F_p for a prime p. Primality is checked by trial division; p must be
  /// below 2^31 so that all residue arithmetic stays in 64 bits.
  static FieldSpec prime(std::uint64_t p);
  static FieldSpec rationals();

  FieldKind kind() const { return kind_; }
  bool is_prime_field() const { return kind_ == FieldKind::Prime; }
  bool is_rational_field() const { return kind_ == FieldKind::Rational; }

  /// Modulus p; only valid for prime fields.
  std::uint64_t modulus() const;

  bool operator==(const FieldSpec& other) const = default;

  std::string to_string() const;  // "F_5" or "Q"

 private:
  FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

  FieldKind kind_;
  std::uint64_t p_;  // 0 when rational
};

/// Element of an exact field in canonical form: a residue in [0, p) for
/// prime fields, a reduced fraction with positive denominator for Q.
/// Equality is representational equality of the canonical form.
///
/// All arithmetic is exact; operations on elements of different fields
/// throw std::invalid_argument. Division by zero throws std::domain_error.
class FieldElem {
 public:
  static FieldElem zero(const FieldSpec& spec);
  static FieldElem one(const FieldSpec& spec);
  static FieldElem from_int(const FieldSpec& spec, long long value);
  static FieldElem from_mpq(mpq_class value);  // rational field only
  /// Parses "17", "-3", or (rationals only) "num/den".
  static FieldElem parse(const FieldSpec& spec, const std::string& text);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical representative in [0, p); prime fields only.
  std::uint64_t residue() const;
  /// Canonical reduced fraction; rational field only.
  const mpq_class& rational() const;

  FieldElem operator+(const FieldElem& other) const;
  FieldElem operator-(const FieldElem& other) const;
  FieldElem operator*(const FieldElem& other) const;
  FieldElem operator/(const FieldElem& other) const;
  FieldElem operator-() const;
  FieldElem inverse() const;

  FieldElem& operator+=(const FieldElem& other) { return *this = *this + other; }
  FieldElem& operator-=(const FieldElem& other) { return *this = *this - other; }
  FieldElem& operator*=(const FieldElem& other) { return *this = *this * other; }

  bool operator==(const FieldElem& other) const;
  bool operator!=(const FieldElem& other) const { return !(*this == other); }

  std::string to_string() const;

  /// Total order within one field (residue order for F_p, numeric order
  /// for Q); used for canonical sorting of eigenvalues and report keys.
  static int compare(const FieldElem& a, const FieldElem& b);

 private:
  FieldElem(FieldSpec spec, std::uint64_t residue)
      : spec_(spec), value_(residue) {}
  FieldElem(FieldSpec spec, mpq_class value)
      : spec_(spec), value_(std::move(value)) {}

  void require_same_field(const FieldElem& other) const;

  FieldSpec spec_;
  std::variant<std::uint64_t, mpq_class> value_;
};

}  // namespace centra
