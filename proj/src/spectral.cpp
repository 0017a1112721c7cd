#include "centra/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace centra {

namespace {

constexpr std::uint64_t kMaxEigenvalueScan = 1'000'000;
constexpr unsigned long kTrialDivisionBound = 1'000'000;

Poly characteristic_polynomial_leverrier(const Matrix& A) {
  const std::size_t d = A.rows();
  const FieldSpec& spec = A.spec();
  std::vector<FieldElem> coeffs(d + 1, FieldElem::zero(spec));
  coeffs[d] = FieldElem::one(spec);
  Matrix M = Matrix::identity(spec, d);
  for (std::size_t k = 1; k <= d; ++k) {
    const Matrix AM = A * M;
    const FieldElem c =
        -(AM.trace() / FieldElem::from_int(spec, static_cast<long long>(k)));
    coeffs[d - k] = c;
    M = AM + Matrix::identity(spec, d) * c;
  }
  return Poly(spec, std::move(coeffs));
}

// Factor |n| by trial division; a cofactor above the bound is kept as a
// single (possibly composite) factor. Candidate roots built from these
// divisors are always verified by exact evaluation, so a missed divisor can
// only ever hide an eigenvalue with a huge prime factor, far beyond desk
// scale.
std::vector<mpz_class> divisors_of(const mpz_class& n_in) {
  mpz_class n = abs(n_in);
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (unsigned long p = 2;
       n > 1 && p <= kTrialDivisionBound && mpz_class(p) * p <= n;
       p += (p == 2 ? 1 : 2)) {
    if (mpz_class(n % p) != 0) continue;
    unsigned mult = 0;
    while (mpz_class(n % p) == 0) {
      n /= p;
      ++mult;
    }
    factors.emplace_back(p, mult);
  }
  if (n > 1) factors.emplace_back(n, 1);

  std::vector<mpz_class> divisors = {1};
  for (const auto& [prime, mult] : factors) {
    const std::size_t base_count = divisors.size();
    mpz_class power = 1;
    for (unsigned e = 1; e <= mult; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base_count; ++i)
        divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

// One pass of rational-root search on a monic rational polynomial; returns
// a root if some candidate evaluates to zero.
std::optional<FieldElem> find_rational_root(const Poly& chi) {
  const FieldSpec& spec = chi.spec();
  if (chi.coeff(0).is_zero()) return FieldElem::zero(spec);
  if (chi.degree() == 1) return -chi.coeff(0);  // monic: t + c0

  // Scale to integer coefficients: candidates a/b with a | g_0, b | g_deg.
  mpz_class denom_lcm = 1;
  for (const auto& c : chi.coeffs())
    mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(),
            c.rational().get_den().get_mpz_t());
  const mpq_class scaled = chi.coeff(0).rational() * denom_lcm;  // integral
  const std::vector<mpz_class> numerators = divisors_of(scaled.get_num());
  const std::vector<mpz_class> denominators = divisors_of(denom_lcm);

  for (const mpz_class& b : denominators) {
    for (const mpz_class& a : numerators) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        const FieldElem cand = FieldElem::from_mpq(mpq_class(sign * a, b));
        if (chi.evaluate(cand).is_zero()) return cand;
      }
    }
  }
  return std::nullopt;
}

std::optional<FieldElem> find_prime_field_root(const Poly& chi) {
  const FieldSpec& spec = chi.spec();
  const std::uint64_t p = spec.modulus();
  if (p > kMaxEigenvalueScan)
    throw std::invalid_argument(
        "modulus exceeds the exhaustive eigenvalue scan bound");
  for (std::uint64_t r = 0; r < p; ++r) {
    const FieldElem cand = FieldElem::from_int(spec, static_cast<long long>(r));
    if (chi.evaluate(cand).is_zero()) return cand;
  }
  return std::nullopt;
}

}  // namespace

std::vector<FieldElem> SpectralDecomposition::eigenvalues() const {
  std::vector<FieldElem> out;
  out.reserve(components_.size());
  for (const auto& c : components_) out.push_back(c.eigenvalue);
  return out;
}

Poly characteristic_polynomial_berkowitz(const Matrix& A) {
  if (!A.is_square())
    throw std::invalid_argument("characteristic polynomial of non-square matrix");
  const FieldSpec& spec = A.spec();
  const std::size_t n = A.rows();

  // C holds the coefficients of the leading principal submatrix's
  // characteristic polynomial, highest degree first.
  std::vector<FieldElem> C = {FieldElem::one(spec)};
  for (std::size_t r = 0; r < n; ++r) {
    // first column of the Samuelson-Berkowitz Toeplitz matrix
    std::vector<FieldElem> t;
    t.reserve(r + 2);
    t.push_back(FieldElem::one(spec));
    t.push_back(-A.at(r, r));
    if (r >= 1) {
      Vector w = Vector::zero(spec, r);
      for (std::size_t i = 0; i < r; ++i) w[i] = A.at(i, r);
      for (std::size_t k = 2; k <= r + 1; ++k) {
        FieldElem dot = FieldElem::zero(spec);
        for (std::size_t i = 0; i < r; ++i) dot += A.at(r, i) * w[i];
        t.push_back(-dot);
        if (k == r + 1) break;
        Vector next = Vector::zero(spec, r);
        for (std::size_t i = 0; i < r; ++i) {
          FieldElem acc = FieldElem::zero(spec);
          for (std::size_t j = 0; j < r; ++j) acc += A.at(i, j) * w[j];
          next[i] = acc;
        }
        w = next;
      }
    }
    std::vector<FieldElem> next(r + 2, FieldElem::zero(spec));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j < C.size() && j <= i; ++j)
        next[i] += t[i - j] * C[j];
    C = std::move(next);
  }

  // C[i] is the coefficient of t^{n-i}.
  std::vector<FieldElem> coeffs(n + 1, FieldElem::zero(spec));
  for (std::size_t i = 0; i <= n; ++i) coeffs[n - i] = C[i];
  return Poly(spec, std::move(coeffs));
}

Poly characteristic_polynomial(const Matrix& A) {
  if (!A.is_square())
    throw std::invalid_argument("characteristic polynomial of non-square matrix");
  if (A.spec().is_prime_field() && A.spec().modulus() <= A.rows())
    return characteristic_polynomial_berkowitz(A);
  return characteristic_polynomial_leverrier(A);
}

std::size_t fitting_exponent(const Matrix& A) {
  if (!A.is_square()) throw std::invalid_argument("fitting exponent of non-square matrix");
  Matrix power = A;
  std::size_t prev_rank = power.rank();
  for (std::size_t r = 1;; ++r) {
    power = power * A;
    const std::size_t next_rank = power.rank();
    if (next_rank == prev_rank) return r;
    prev_rank = next_rank;
  }
}

std::vector<FieldElem> split_eigenvalues(const Matrix& A) {
  const Poly chi_full = characteristic_polynomial(A);
  const FieldSpec& spec = A.spec();

  std::vector<FieldElem> roots;
  Poly chi = chi_full;
  while (chi.degree() >= 1) {
    const auto root = spec.is_prime_field() ? find_prime_field_root(chi)
                                            : find_rational_root(chi);
    if (!root) break;
    roots.push_back(*root);
    const Poly linear(spec, {-*root, FieldElem::one(spec)});
    // peel the root to full multiplicity
    while (true) {
      auto [q, rem] = chi.divmod(linear);
      if (!rem.is_zero()) break;
      chi = std::move(q);
      if (chi.degree() < 1) break;
    }
  }
  if (chi.degree() >= 1)
    throw NotSplit("characteristic polynomial does not split over " +
                       spec.to_string() + "; rootless factor " +
                       chi.to_string(),
                   chi.monic());

  std::sort(roots.begin(), roots.end(), [](const FieldElem& a, const FieldElem& b) {
    return FieldElem::compare(a, b) < 0;
  });
  return roots;
}

SpectralDecomposition decompose(const Matrix& A) {
  const std::vector<FieldElem> eigenvalues = split_eigenvalues(A);
  const FieldSpec& spec = A.spec();
  const std::size_t d = A.rows();

  std::vector<SpectralComponent> components;
  std::size_t total_dim = 0;
  for (const FieldElem& lambda : eigenvalues) {
    const Matrix B = A - Matrix::identity(spec, d) * lambda;
    const std::size_t r = fitting_exponent(B);
    const std::vector<Vector> space_basis = kernel_basis(B.pow(r));
    if (space_basis.empty())
      throw std::logic_error("empty generalized eigenspace for an eigenvalue");
    const Matrix space = Matrix::from_columns(space_basis);
    const Matrix restricted = solve_exact(space, B * space);
    const std::size_t geom = kernel_basis(B).size();
    components.push_back({lambda, space, restricted, geom, r});
    total_dim += space_basis.size();
  }
  if (total_dim != d)
    throw std::logic_error("generalized eigenspaces do not fill the space");
  return SpectralDecomposition(A, std::move(components));
}

std::size_t centralizer_dim_total(const SpectralDecomposition& dec) {
  std::size_t total = 0;
  for (const auto& comp : dec.components())
    total += dim_formula(block_profile(jordan_base(comp.restricted_nilpotent)));
  return total;
}

std::size_t pi_degree_bound(const SpectralDecomposition& dec) {
  std::size_t max_geom = 0;
  for (const auto& comp : dec.components())
    max_geom = std::max(max_geom, comp.geometric_mult);
  return 2 * max_geom;
}

}  // namespace centra
