#include "centra/field.hpp"

#include <stdexcept>
#include <utility>

namespace centra {

namespace {

constexpr std::uint64_t kMaxPrime = (1ull << 31);

bool is_prime_u64(std::uint64_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  // extended Euclid; a in [1, p), p < 2^31
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = static_cast<std::int64_t>(p);
  std::int64_t new_r = static_cast<std::int64_t>(a);
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= kMaxPrime)
    throw std::invalid_argument("prime modulus must be below 2^31, got " +
                                std::to_string(p));
  if (!is_prime_u64(p))
    throw std::invalid_argument(std::to_string(p) + " is not prime");
  return FieldSpec(FieldKind::Prime, p);
}

FieldSpec FieldSpec::rationals() { return FieldSpec(FieldKind::Rational, 0); }

std::uint64_t FieldSpec::modulus() const {
  if (kind_ != FieldKind::Prime)
    throw std::invalid_argument("modulus() called on the rational field");
  return p_;
}

std::string FieldSpec::to_string() const {
  return kind_ == FieldKind::Prime ? "F_" + std::to_string(p_) : "Q";
}

FieldElem FieldElem::zero(const FieldSpec& spec) {
  if (spec.is_prime_field()) return FieldElem(spec, std::uint64_t{0});
  return FieldElem(spec, mpq_class(0));
}

FieldElem FieldElem::one(const FieldSpec& spec) {
  if (spec.is_prime_field()) return FieldElem(spec, std::uint64_t{1});
  return FieldElem(spec, mpq_class(1));
}

FieldElem FieldElem::from_int(const FieldSpec& spec, long long value) {
  if (spec.is_prime_field()) {
    const auto p = static_cast<long long>(spec.modulus());
    long long r = value % p;
    if (r < 0) r += p;
    return FieldElem(spec, static_cast<std::uint64_t>(r));
  }
  mpq_class q(static_cast<long>(value));
  return FieldElem(spec, std::move(q));
}

FieldElem FieldElem::from_mpq(mpq_class value) {
  value.canonicalize();
  return FieldElem(FieldSpec::rationals(), std::move(value));
}

FieldElem FieldElem::parse(const FieldSpec& spec, const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty field element literal");
  if (spec.is_prime_field()) {
    std::size_t pos = 0;
    const long long v = std::stoll(text, &pos);
    if (pos != text.size())
      throw std::invalid_argument("bad prime field literal: " + text);
    return from_int(spec, v);
  }
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return FieldElem(spec, std::move(q));
}

bool FieldElem::is_zero() const {
  if (spec_.is_prime_field()) return std::get<std::uint64_t>(value_) == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool FieldElem::is_one() const {
  if (spec_.is_prime_field()) return std::get<std::uint64_t>(value_) == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t FieldElem::residue() const {
  if (!spec_.is_prime_field())
    throw std::invalid_argument("residue() called on a rational element");
  return std::get<std::uint64_t>(value_);
}

const mpq_class& FieldElem::rational() const {
  if (!spec_.is_rational_field())
    throw std::invalid_argument("rational() called on a prime field element");
  return std::get<mpq_class>(value_);
}

void FieldElem::require_same_field(const FieldElem& other) const {
  if (spec_ != other.spec_)
    throw std::invalid_argument("mixed-field arithmetic: " + spec_.to_string() +
                                " vs " + other.spec_.to_string());
}

FieldElem FieldElem::operator+(const FieldElem& other) const {
  require_same_field(other);
  if (spec_.is_prime_field()) {
    const std::uint64_t p = spec_.modulus();
    std::uint64_t s = std::get<std::uint64_t>(value_) +
                      std::get<std::uint64_t>(other.value_);
    if (s >= p) s -= p;
    return FieldElem(spec_, s);
  }
  return FieldElem(spec_, mpq_class(std::get<mpq_class>(value_) +
                                    std::get<mpq_class>(other.value_)));
}

FieldElem FieldElem::operator-(const FieldElem& other) const {
  require_same_field(other);
  if (spec_.is_prime_field()) {
    const std::uint64_t p = spec_.modulus();
    const std::uint64_t a = std::get<std::uint64_t>(value_);
    const std::uint64_t b = std::get<std::uint64_t>(other.value_);
    return FieldElem(spec_, a >= b ? a - b : a + p - b);
  }
  return FieldElem(spec_, mpq_class(std::get<mpq_class>(value_) -
                                    std::get<mpq_class>(other.value_)));
}

FieldElem FieldElem::operator*(const FieldElem& other) const {
  require_same_field(other);
  if (spec_.is_prime_field()) {
    const std::uint64_t p = spec_.modulus();
    return FieldElem(spec_, (std::get<std::uint64_t>(value_) *
                             std::get<std::uint64_t>(other.value_)) %
                                p);
  }
  return FieldElem(spec_, mpq_class(std::get<mpq_class>(value_) *
                                    std::get<mpq_class>(other.value_)));
}

FieldElem FieldElem::operator/(const FieldElem& other) const {
  return *this * other.inverse();
}

FieldElem FieldElem::operator-() const {
  if (spec_.is_prime_field()) {
    const std::uint64_t a = std::get<std::uint64_t>(value_);
    return FieldElem(spec_, a == 0 ? 0 : spec_.modulus() - a);
  }
  return FieldElem(spec_, mpq_class(-std::get<mpq_class>(value_)));
}

FieldElem FieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero in " + spec_.to_string());
  if (spec_.is_prime_field())
    return FieldElem(spec_, invmod(std::get<std::uint64_t>(value_), spec_.modulus()));
  return FieldElem(spec_, mpq_class(1 / std::get<mpq_class>(value_)));
}

bool FieldElem::operator==(const FieldElem& other) const {
  if (spec_ != other.spec_) return false;
  if (spec_.is_prime_field())
    return std::get<std::uint64_t>(value_) == std::get<std::uint64_t>(other.value_);
  return std::get<mpq_class>(value_) == std::get<mpq_class>(other.value_);
}

std::string FieldElem::to_string() const {
  if (spec_.is_prime_field())
    return std::to_string(std::get<std::uint64_t>(value_));
  return std::get<mpq_class>(value_).get_str();
}

int FieldElem::compare(const FieldElem& a, const FieldElem& b) {
  a.require_same_field(b);
  if (a.spec_.is_prime_field()) {
    const std::uint64_t x = std::get<std::uint64_t>(a.value_);
    const std::uint64_t y = std::get<std::uint64_t>(b.value_);
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  return cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
}

}  // namespace centra
