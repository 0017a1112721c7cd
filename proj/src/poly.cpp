#include "centra/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace centra {

Poly::Poly(const FieldSpec& spec, std::vector<FieldElem> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (c.spec() != spec_)
      throw std::invalid_argument("polynomial coefficient from wrong field");
  }
  trim();
}

Poly Poly::constant(FieldElem c) {
  Poly p(c.spec());
  if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
  return p;
}

Poly Poly::t(const FieldSpec& spec) {
  return monomial(FieldElem::one(spec), 1);
}

Poly Poly::monomial(FieldElem c, std::size_t i) {
  Poly p(c.spec());
  if (c.is_zero()) return p;
  p.coeffs_.assign(i, FieldElem::zero(c.spec()));
  p.coeffs_.push_back(std::move(c));
  return p;
}

FieldElem Poly::coeff(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return FieldElem::zero(spec_);
}

FieldElem Poly::leading_coeff() const {
  if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
  return coeffs_.back();
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly Poly::operator+(const Poly& other) const {
  if (spec_ != other.spec_)
    throw std::invalid_argument("mixed-field polynomial arithmetic");
  Poly out(spec_);
  const std::size_t n = std::max(coeffs_.size(), other.coeffs_.size());
  out.coeffs_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.coeffs_.push_back(coeff(i) + other.coeff(i));
  out.trim();
  return out;
}

Poly Poly::operator-(const Poly& other) const { return *this + (-other); }

Poly Poly::operator*(const Poly& other) const {
  if (spec_ != other.spec_)
    throw std::invalid_argument("mixed-field polynomial arithmetic");
  Poly out(spec_);
  if (is_zero() || other.is_zero()) return out;
  out.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1,
                     FieldElem::zero(spec_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
      out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  out.trim();
  return out;
}

Poly Poly::operator*(const FieldElem& scalar) const {
  Poly out(spec_);
  if (scalar.is_zero()) return out;
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(c * scalar);
  out.trim();
  return out;
}

Poly Poly::operator-() const {
  Poly out(spec_);
  out.coeffs_.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.coeffs_.push_back(-c);
  return out;
}

bool Poly::operator==(const Poly& other) const {
  return spec_ == other.spec_ && coeffs_ == other.coeffs_;
}

Poly Poly::shifted(std::size_t i) const {
  if (is_zero() || i == 0) {
    Poly out = *this;
    return out;
  }
  Poly out(spec_);
  out.coeffs_.assign(i, FieldElem::zero(spec_));
  out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
  return out;
}

bool Poly::divisible_by_power(std::size_t k) const {
  for (std::size_t i = 0; i < k && i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

FieldElem Poly::evaluate(const FieldElem& x) const {
  FieldElem acc = FieldElem::zero(spec_);
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

Poly Poly::monic() const {
  if (is_zero()) throw std::domain_error("monic() on zero polynomial");
  return *this * coeffs_.back().inverse();
}

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  if (spec_ != divisor.spec_)
    throw std::invalid_argument("mixed-field polynomial arithmetic");
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  Poly rem = *this;
  Poly quot(spec_);
  const int dd = divisor.degree();
  if (rem.degree() >= dd)
    quot.coeffs_.assign(rem.coeffs_.size() - divisor.coeffs_.size() + 1,
                        FieldElem::zero(spec_));
  const FieldElem lead_inv = divisor.leading_coeff().inverse();
  while (!rem.is_zero() && rem.degree() >= dd) {
    const std::size_t shift = static_cast<std::size_t>(rem.degree() - dd);
    const FieldElem q = rem.leading_coeff() * lead_inv;
    quot.coeffs_[shift] = q;
    for (std::size_t j = 0; j < divisor.coeffs_.size(); ++j)
      rem.coeffs_[shift + j] -= q * divisor.coeffs_[j];
    rem.trim();
  }
  quot.trim();
  return {std::move(quot), std::move(rem)};
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const bool unit = coeffs_[i].is_one();
    if (i == 0) {
      out += coeffs_[i].to_string();
    } else {
      if (!unit) out += coeffs_[i].to_string() + "*";
      out += (i == 1) ? "t" : "t^" + std::to_string(i);
    }
  }
  return out;
}

Poly poly_cut(const Poly& f, std::size_t k) {
  if (k < 1) throw std::invalid_argument("poly_cut requires k >= 1");
  const auto& c = f.coeffs();
  std::vector<FieldElem> head(c.begin(),
                              c.begin() + std::min<std::size_t>(k, c.size()));
  return Poly(f.spec(), std::move(head));
}

}  // namespace centra
