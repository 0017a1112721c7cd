#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "centra/poly.hpp"
#include "centra/sampling.hpp"

using namespace centra;

namespace {
const FieldSpec q = FieldSpec::rationals();

Poly make(const FieldSpec& spec, std::initializer_list<long long> coeffs) {
  std::vector<FieldElem> v;
  for (long long c : coeffs) v.push_back(FieldElem::from_int(spec, c));
  return Poly(spec, std::move(v));
}
}  // namespace

TEST_CASE("construction trims trailing zeros") {
  CHECK(make(q, {1, 2, 0, 0}).degree() == 1);
  CHECK(make(q, {0, 0}).is_zero());
  CHECK(Poly(q).degree() == -1);
  CHECK(make(q, {0, 0, 3}).degree() == 2);
}

TEST_CASE("the k-cut") {
  const Poly f = make(q, {1, 2, 3});  // 1 + 2t + 3t^2
  CHECK(poly_cut(f, 2) == make(q, {1, 2}));
  CHECK(poly_cut(make(q, {1, 2}), 5) == make(q, {1, 2}));
  CHECK(poly_cut(Poly(q), 3).is_zero());
  CHECK(poly_cut(make(q, {0, 0, 7}), 2).is_zero());  // cut can re-trim
  CHECK_THROWS_AS(poly_cut(f, 0), std::invalid_argument);
}

TEST_CASE("ring arithmetic") {
  const Poly one_plus_t = make(q, {1, 1});
  CHECK(one_plus_t * one_plus_t == make(q, {1, 2, 1}));
  const FieldSpec f2 = FieldSpec::prime(2);
  CHECK(make(f2, {1, 1}) * make(f2, {1, 1}) == make(f2, {1, 0, 1}));
  CHECK(make(q, {1, 2}) + make(q, {1, -2}) == make(q, {2}));
  CHECK((make(q, {1, 1}) - make(q, {1, 1})).is_zero());
  CHECK(make(q, {1, 1}) * FieldElem::from_int(q, 0) == Poly(q));
}

TEST_CASE("division with remainder") {
  Sampler s(7);
  for (const FieldSpec spec : {FieldSpec::prime(5), FieldSpec::rationals()}) {
    for (int i = 0; i < 50; ++i) {
      const Poly f = s.poly(spec, 6);
      Poly g = s.poly(spec, 3);
      if (g.is_zero()) g = Poly::t(spec);
      const auto [quot, rem] = f.divmod(g);
      CHECK(quot * g + rem == f);
      CHECK(rem.degree() < g.degree());
    }
  }
  CHECK_THROWS_AS(make(q, {1}).divmod(Poly(q)), std::domain_error);
}

TEST_CASE("evaluation, shifting, divisibility") {
  const Poly f = make(q, {1, 0, 2});  // 1 + 2t^2
  CHECK(f.evaluate(FieldElem::from_int(q, 3)) == FieldElem::from_int(q, 19));
  CHECK(f.shifted(2) == make(q, {0, 0, 1, 0, 2}));
  CHECK(make(q, {0, 0, 5}).divisible_by_power(2));
  CHECK_FALSE(make(q, {0, 1}).divisible_by_power(2));
  CHECK(Poly(q).divisible_by_power(100));
}

TEST_CASE("display strings") {
  CHECK(Poly(q).to_string() == "0");
  CHECK(make(q, {0, 0, 1}).to_string() == "t^2");
  CHECK(make(q, {1, 2}).to_string() == "1 + 2*t");
  CHECK(make(q, {0, 1}).to_string() == "t");
  const Poly half_t = Poly(q, {FieldElem::zero(q), FieldElem::parse(q, "-1/2")});
  CHECK(half_t.to_string() == "-1/2*t");
  CHECK(make(q, {2, 0, 1}).to_string() == "2 + t^2");
}

TEST_CASE("monic normalization") {
  CHECK(make(q, {2, 4}).monic() == Poly(q, {FieldElem::parse(q, "1/2"),
                                            FieldElem::one(q)}));
  CHECK_THROWS_AS(Poly(q).monic(), std::domain_error);
}
