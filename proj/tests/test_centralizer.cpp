#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "centra/centralizer.hpp"
#include "centra/sampling.hpp"

using namespace centra;

namespace {
const FieldSpec f5 = FieldSpec::prime(5);
const FieldSpec q = FieldSpec::rationals();

Poly make_poly(const FieldSpec& spec, std::initializer_list<long long> coeffs) {
  std::vector<FieldElem> v;
  for (long long c : coeffs) v.push_back(FieldElem::from_int(spec, c));
  return Poly(spec, std::move(v));
}

// random element of M(Phi) n V: entries t^{max(0,k_g-k_d)} * (random), cut
PolyMatrix random_m_phi(Sampler& s, const FieldSpec& spec,
                        const std::vector<std::size_t>& sizes) {
  const std::size_t m = sizes.size();
  PolyMatrix P(spec, m);
  for (std::size_t delta = 0; delta < m; ++delta)
    for (std::size_t gamma = 0; gamma < m; ++gamma) {
      const std::size_t lo =
          sizes[gamma] > sizes[delta] ? sizes[gamma] - sizes[delta] : 0;
      P.at(delta, gamma) = poly_cut(s.poly(spec, sizes[gamma]).shifted(lo),
                                    sizes[gamma]);
    }
  return P;
}

void enumerate_partitions(std::size_t n, std::size_t cap,
                          std::vector<std::size_t>& current,
                          std::vector<std::vector<std::size_t>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t part = std::min(cap, n); part >= 1; --part) {
    current.push_back(part);
    enumerate_partitions(n - part, part, current, out);
    current.pop_back();
  }
}

std::vector<std::vector<std::size_t>> all_partitions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> current;
  enumerate_partitions(n, n, current, out);
  return out;
}
}  // namespace

TEST_CASE("M(Phi) membership: matrix units") {
  // E_{delta,gamma} lies in M(Phi) exactly when k_delta >= k_gamma
  const std::vector<std::size_t> sizes = {2, 1};  // block 0 size 2, block 1 size 1
  CHECK(in_M_phi(PolyMatrix::unit(f5, 2, 0, 0), sizes));
  CHECK(in_M_phi(PolyMatrix::unit(f5, 2, 0, 1), sizes));  // k_0 >= k_1
  CHECK(in_M_phi(PolyMatrix::unit(f5, 2, 1, 1), sizes));
  CHECK_FALSE(in_M_phi(PolyMatrix::unit(f5, 2, 1, 0), sizes));  // 1 not in (t)
  CHECK(in_M_phi(PolyMatrix::scaled_unit(f5, 2, 1, 0, 1), sizes));  // t E

  // the definitional quantifier over kernel generators agrees
  CHECK_FALSE(in_M_phi_via_kernel_generators(PolyMatrix::unit(f5, 2, 1, 0), sizes));
  CHECK(in_M_phi_via_kernel_generators(
      PolyMatrix::scaled_unit(f5, 2, 1, 0, 1), sizes));
}

TEST_CASE("M(Phi) closed form matches the definitional test on random matrices") {
  Sampler s(41);
  for (int i = 0; i < 60; ++i) {
    const FieldSpec spec = i % 2 ? f5 : q;
    const Matrix A = s.nilpotent(spec, 6);
    const JordanBase base = jordan_base(A);
    PolyMatrix P(spec, base.block_count());
    for (std::size_t d = 0; d < base.block_count(); ++d)
      for (std::size_t g = 0; g < base.block_count(); ++g)
        P.at(d, g) = s.poly(spec, 3);
    CHECK(in_M_phi(P, base.sizes()) ==
          in_M_phi_via_kernel_generators(P, base.sizes()));
  }
}

TEST_CASE("V membership") {
  const std::vector<std::size_t> sizes = {2, 1};
  PolyMatrix constant = PolyMatrix::identity(f5, 2);
  CHECK(in_V(constant, sizes));
  CHECK(in_V(PolyMatrix(f5, 2), sizes));
  PolyMatrix bad(f5, 2);
  bad.at(0, 1) = Poly::t(f5);  // k_1 - 1 = 0 forbids degree 1
  CHECK_FALSE(in_V(bad, sizes));
}

TEST_CASE("psi_from_P on scalar polynomial matrices") {
  Sampler s(43);
  for (const FieldSpec spec : {f5, q}) {
    const Matrix A = s.nilpotent(spec, 6);
    const JordanBase base = jordan_base(A);
    const std::size_t m = base.block_count();
    CHECK(psi_from_P(base, PolyMatrix::identity(spec, m)) ==
          Matrix::identity(spec, A.rows()));
    CHECK(psi_from_P(base, PolyMatrix::scalar(Poly::t(spec), m)) == A);
    const Poly h = s.poly(spec, 4);
    CHECK(psi_from_P(base, PolyMatrix::scalar(h, m)) == poly_eval_matrix(h, A));
  }
}

TEST_CASE("psi_from_P rejects matrices outside M(Phi)") {
  const Matrix A = block_diag(
      {jordan_nilpotent_block(f5, 2), jordan_nilpotent_block(f5, 1)});
  const JordanBase base = jordan_base(A);
  CHECK_THROWS_AS(psi_from_P(base, PolyMatrix::unit(f5, 2, 1, 0)), NotInMPhi);
}

TEST_CASE("psi commutes with the endomorphism") {
  Sampler s(47);
  for (int i = 0; i < 20; ++i) {
    const Matrix A = s.nilpotent(f5, 6);
    const JordanBase base = jordan_base(A);
    const Matrix psi = psi_from_P(base, random_m_phi(s, f5, base.sizes()));
    CHECK(psi * A == A * psi);
  }
}

TEST_CASE("P_from_psi basics and round trip") {
  Sampler s(53);
  const Matrix A = block_diag(
      {jordan_nilpotent_block(q, 2), jordan_nilpotent_block(q, 1)});
  const JordanBase base = jordan_base(A);

  CHECK(P_from_psi(base, Matrix::identity(q, 3)) == PolyMatrix::identity(q, 2));

  // S = phi: t on large-enough blocks, truncated away on size-1 blocks
  PolyMatrix expected(q, 2);
  expected.at(0, 0) = Poly::t(q);
  CHECK(P_from_psi(base, A) == expected);

  CHECK_THROWS_AS(P_from_psi(base, Matrix::from_ints(q, {{0, 1, 0}, {0, 0, 0},
                                                         {0, 0, 0}})),
                  NotInCentralizer);

  for (const FieldSpec spec : {f5, q}) {
    for (int i = 0; i < 10; ++i) {
      const Matrix B = s.nilpotent(spec, 5);
      const JordanBase b = jordan_base(B);
      for (const Matrix& S : commutant_oracle(B)) {
        const PolyMatrix P = P_from_psi(b, S);
        CHECK(in_M_phi(P, b.sizes()));
        CHECK(in_V(P, b.sizes()));
        CHECK(psi_from_P(b, P) == S);
      }
    }
  }
}

TEST_CASE("centralizer basis: single block is polynomials in A") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const Matrix A = jordan_nilpotent_block(f5, n);
    const CentralizerBasis basis = centralizer_basis(jordan_base(A));
    CHECK(basis.dimension() == n);
    std::vector<Matrix> powers;
    Matrix p = Matrix::identity(f5, n);
    for (std::size_t i = 0; i < n; ++i) {
      powers.push_back(p);
      p = p * A;
    }
    CHECK(spans_equal(basis.matrices(), powers));
  }
}

TEST_CASE("centralizer basis: counts") {
  const Matrix a21 = block_diag(
      {jordan_nilpotent_block(q, 2), jordan_nilpotent_block(q, 1)});
  CHECK(centralizer_basis(jordan_base(a21)).dimension() == 5);

  // m blocks of size s: dimension m^2 s, the sharp bound
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t size = 1; size <= 3; ++size) {
      std::vector<Matrix> blocks(m, jordan_nilpotent_block(f5, size));
      const Matrix A = block_diag(blocks);
      CHECK(centralizer_basis(jordan_base(A)).dimension() == m * m * size);
    }
}

TEST_CASE("centralizer basis spans the commutant, across fields") {
  Sampler s(59);
  for (const FieldSpec spec : {FieldSpec::prime(2), f5, q}) {
    for (int i = 0; i < 8; ++i) {
      const Matrix A = s.nilpotent(spec, 6);
      const JordanBase base = jordan_base(A);
      const CentralizerBasis basis = centralizer_basis(base);
      for (const auto& e : basis.elements())
        CHECK(e.matrix * A == A * e.matrix);
      CHECK(span_rank(basis.matrices()) == basis.dimension());
      CHECK(spans_equal(basis.matrices(), commutant_oracle(A)));
      CHECK(basis.dimension() == dim_formula(block_profile(base)));
    }
  }
}

TEST_CASE("anti-homomorphism and linearity of P -> psi_P") {
  Sampler s(61);
  for (int i = 0; i < 15; ++i) {
    const FieldSpec spec = i % 2 ? f5 : q;
    const Matrix A = s.nilpotent(spec, 6);
    const JordanBase base = jordan_base(A);
    const PolyMatrix P = random_m_phi(s, spec, base.sizes());
    const PolyMatrix Q = random_m_phi(s, spec, base.sizes());
    CHECK(psi_from_P(base, P * Q) ==
          psi_from_P(base, Q) * psi_from_P(base, P));
    CHECK(psi_from_P(base, P + Q) ==
          psi_from_P(base, P) + psi_from_P(base, Q));
    CHECK(in_M_phi(P * Q, base.sizes()));
    CHECK(in_M_phi(P + Q, base.sizes()));
  }
}

TEST_CASE("chain coordinates expose the striped shape") {
  // single block: in chain coordinates every centralizer element is a
  // polynomial in the shift, i.e. lower-triangular Toeplitz
  Sampler s(63);
  const Matrix A = s.nilpotent_with_profile(q, {4}, true);
  const JordanBase base = jordan_base(A);
  const CentralizerBasis basis = centralizer_basis(base);
  for (const auto& e : basis.elements()) {
    const Matrix striped = base.to_chain_coordinates(e.matrix);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        if (j > i) CHECK(striped.at(i, j).is_zero());
        if (i + 1 < 4 && j + 1 < 4)
          CHECK(striped.at(i, j) == striped.at(i + 1, j + 1));
      }
  }
  // the chain-coordinate form of the endomorphism itself is the shift
  CHECK(base.to_chain_coordinates(A) == jordan_nilpotent_block(q, 4));
}

TEST_CASE("dimension formula") {
  CHECK(dim_formula({5}) == 5);
  CHECK(dim_formula({2, 1}) == 5);
  CHECK(dim_formula({3, 3, 3}) == 27);  // m^2 s with m = s = 3
  CHECK(dim_formula({4, 2, 1}) == 4 + 3 * 2 + 5 * 1);
  CHECK_THROWS_AS(dim_formula({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(dim_formula({2, 0}), std::invalid_argument);
  CHECK_THROWS_AS(dim_formula(std::vector<std::size_t>{}), std::invalid_argument);
}

TEST_CASE("dimension formula equals the min-sum over all partitions of n <= 12") {
  for (std::size_t n = 1; n <= 12; ++n) {
    for (const auto& partition : all_partitions(n)) {
      CHECK(dim_formula(partition) == min_pair_sum(partition));
    }
  }
}

TEST_CASE("polynomial coefficients") {
  const Matrix J3 = jordan_nilpotent_block(q, 3);
  const Matrix S = J3 * J3 + Matrix::identity(q, 3) * FieldElem::from_int(q, 2);
  const auto h = polynomial_coeffs(J3, S);
  REQUIRE(h.has_value());
  CHECK(*h == make_poly(q, {2, 0, 1}));  // 2 + t^2

  // a matrix that does not commute with J3 cannot be a polynomial in it
  Matrix non_commuting(q, 3, 3);
  non_commuting.at(0, 1) = FieldElem::one(q);
  REQUIRE(non_commuting * J3 != J3 * non_commuting);
  CHECK_FALSE(polynomial_coeffs(J3, non_commuting).has_value());

  CHECK(polynomial_coeffs(J3, Matrix::zero(q, 3, 3))->is_zero());
}

TEST_CASE("single-block bijection between low-degree polynomials and C_A") {
  Sampler s(67);
  for (const FieldSpec spec : {FieldSpec::prime(2), f5, q}) {
    for (std::size_t n = 1; n <= 6; ++n) {
      const Matrix A = s.nilpotent_with_profile(spec, {n}, true);
      const auto oracle = commutant_oracle(A);
      CHECK(oracle.size() == n);
      for (const Matrix& S : oracle) {
        const auto h = polynomial_coeffs(A, S);
        REQUIRE(h.has_value());
        CHECK(h->degree() < static_cast<int>(n));
        CHECK(poly_eval_matrix(*h, A) == S);
      }
      // injectivity: I, A, ..., A^{n-1} independent
      std::vector<Matrix> powers;
      Matrix p = Matrix::identity(spec, n);
      for (std::size_t i = 0; i < n; ++i) {
        powers.push_back(p);
        p = p * A;
      }
      CHECK(span_rank(powers) == n);
    }
  }
}

TEST_CASE("containment") {
  const Matrix A = jordan_nilpotent_block(q, 4);

  const Containment squares = containment(A, A * A);
  CHECK(squares.contained);
  REQUIRE(squares.certificate.has_value());
  CHECK(*squares.certificate == make_poly(q, {0, 0, 1}));
  CHECK(squares.certificate->to_string() == "t^2");

  const Containment id = containment(A, Matrix::identity(q, 4));
  CHECK(id.contained);
  CHECK(*id.certificate == make_poly(q, {1}));

  // C_0 is everything; C_{E11} is not
  const Matrix zero2 = Matrix::zero(q, 2, 2);
  const Matrix e11 = Matrix::from_ints(q, {{1, 0}, {0, 0}});
  const Containment neg = containment(zero2, e11);
  CHECK_FALSE(neg.contained);
  CHECK_FALSE(neg.certificate.has_value());

  CHECK_THROWS_AS(containment(Matrix::identity(q, 2), zero2), NotNilpotent);
}

TEST_CASE("containment routes agree on seeded pairs") {
  Sampler s(71);
  std::size_t positives = 0;
  for (int i = 0; i < 60; ++i) {
    const FieldSpec spec = i % 2 ? f5 : q;
    const Matrix A = s.nilpotent(spec, 5);
    const std::size_t d = A.rows();
    const Matrix B = (i % 3 == 0) ? s.matrix(spec, d, d)
                                  : poly_eval_matrix(s.poly(spec, d), A);
    const Containment result = containment(A, B);  // throws if routes disagree
    if (result.contained) {
      ++positives;
      CHECK(poly_eval_matrix(*result.certificate, A) == B);
    }
  }
  CHECK(positives >= 30);
}

TEST_CASE("bound check") {
  const Matrix a21 = block_diag(
      {jordan_nilpotent_block(f5, 2), jordan_nilpotent_block(f5, 1)});
  const BoundCheck b21 = bound_check(jordan_base(a21));
  CHECK(b21.dim == 5);
  CHECK(b21.bound == 6);

  const BoundCheck single = bound_check(jordan_base(jordan_nilpotent_block(q, 4)));
  CHECK(single.dim == 4);
  CHECK(single.bound == 4);

  std::vector<Matrix> blocks(3, jordan_nilpotent_block(f5, 2));
  const BoundCheck sharp = bound_check(jordan_base(block_diag(blocks)));
  CHECK(sharp.dim == sharp.bound);
  CHECK(sharp.dim == 3 * 3 * 2);
}
