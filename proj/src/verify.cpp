#include "centra/verify.hpp"

#include <functional>

#include "centra/centralizer.hpp"
#include "centra/pi_check.hpp"
#include "centra/sampling.hpp"
#include "centra/spectral.hpp"

namespace centra {

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : text) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

FieldSpec spec_for(std::size_t i) {
  switch (i % 4) {
    case 0: return FieldSpec::prime(2);
    case 1: return FieldSpec::prime(5);
    case 2: return FieldSpec::prime(13);
    default: return FieldSpec::rationals();
  }
}

class Harness {
 public:
  Harness(std::uint64_t seed, std::size_t count) : seed_(seed), count_(count) {}

  void run(const std::string& name,
           const std::function<bool(Sampler&, const FieldSpec&)>& check) {
    CheckResult result;
    result.name = name;
    result.instances = count_;
    for (std::size_t i = 0; i < count_; ++i) {
      Sampler sampler(seed_, fnv1a(name) ^ i);
      const FieldSpec spec = spec_for(i);
      bool ok = false;
      std::string why;
      try {
        ok = check(sampler, spec);
        if (!ok) why = "predicate failed";
      } catch (const std::exception& e) {
        why = e.what();
      }
      if (!ok) {
        ++result.failures;
        if (result.detail.empty())
          result.detail = "instance " + std::to_string(i) + " over " +
                          spec.to_string() + ": " + why;
      }
    }
    results_.push_back(std::move(result));
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::uint64_t seed_;
  std::size_t count_;
  std::vector<CheckResult> results_;
};

// random element of M(Phi) n V for the given sizes: entry (delta, gamma) is
// t^{max(0, k_gamma - k_delta)} times a random polynomial, truncated to
// degree < k_gamma
PolyMatrix random_m_phi(Sampler& sampler, const FieldSpec& spec,
                        const std::vector<std::size_t>& sizes) {
  const std::size_t m = sizes.size();
  PolyMatrix P(spec, m);
  for (std::size_t delta = 0; delta < m; ++delta)
    for (std::size_t gamma = 0; gamma < m; ++gamma) {
      const std::size_t lo =
          sizes[gamma] > sizes[delta] ? sizes[gamma] - sizes[delta] : 0;
      const Poly raw = sampler.poly(spec, sizes[gamma]);
      P.at(delta, gamma) = poly_cut(raw.shifted(lo), sizes[gamma]);
    }
  return P;
}

PolyVector random_poly_vector(Sampler& sampler, const FieldSpec& spec,
                              const std::vector<std::size_t>& sizes,
                              std::size_t slack) {
  std::vector<Poly> entries;
  entries.reserve(sizes.size());
  for (std::size_t k : sizes) entries.push_back(sampler.poly(spec, k + slack));
  return PolyVector(spec, std::move(entries));
}

}  // namespace

std::vector<CheckResult> verify_all(std::uint64_t seed, std::size_t count) {
  Harness h(seed, count);

  h.run("field.distributivity", [](Sampler& s, const FieldSpec& spec) {
    const FieldElem a = s.field_elem(spec), b = s.field_elem(spec),
                    c = s.field_elem(spec);
    if (a * (b + c) != a * b + a * c) return false;
    if ((a + b) * c != a * c + b * c) return false;
    const FieldElem nz = s.nonzero_field_elem(spec);
    return nz * nz.inverse() == FieldElem::one(spec);
  });

  h.run("exactalg.poly_action_composition", [](Sampler& s, const FieldSpec& spec) {
    const std::size_t d = 1 + s.below(5);
    const Matrix A = s.matrix(spec, d, d);
    const Vector u = s.vector(spec, d);
    const Poly f = s.poly(spec, 4), g = s.poly(spec, 4);
    return poly_apply(f * g, A, u) == poly_apply(f, A, poly_apply(g, A, u));
  });

  h.run("exactalg.commutant_oracle_exact", [](Sampler& s, const FieldSpec& spec) {
    const std::size_t d = 1 + s.below(5);
    const Matrix A = s.matrix(spec, d, d);
    const std::vector<Matrix> basis = commutant_oracle(A);
    for (const Matrix& X : basis) {
      if (A * X != X * A) return false;
    }
    return span_rank(basis) == basis.size();
  });

  h.run("exactalg.minimal_polynomial_annihilates",
        [](Sampler& s, const FieldSpec& spec) {
          const std::size_t d = 1 + s.below(5);
          const Matrix A = s.matrix(spec, d, d);
          return poly_eval_matrix(minimal_polynomial(A), A).is_zero();
        });

  h.run("jordan.base_invariants", [](Sampler& s, const FieldSpec& spec) {
    const Matrix A = s.nilpotent(spec, 7);
    const JordanBase base = jordan_base(A);
    std::size_t total = 0;
    for (std::size_t g = 0; g < base.block_count(); ++g) {
      const std::size_t k = base.sizes()[g];
      total += k;
      for (std::size_t i = 0; i + 1 < k; ++i) {
        if (A * base.chain_vector(g, i) != base.chain_vector(g, i + 1))
          return false;
      }
      if (!(A * base.chain_vector(g, k - 1)).is_zero()) return false;
    }
    if (total != base.dimension()) return false;
    // ker A is spanned by the chain tails
    RowSpan tails(spec, base.dimension());
    for (std::size_t g = 0; g < base.block_count(); ++g)
      tails.try_add(base.chain_vector(g, base.sizes()[g] - 1));
    if (tails.dimension() != base.block_count()) return false;
    const auto kernel = kernel_basis(A);
    if (kernel.size() != base.block_count()) return false;
    for (const auto& v : kernel) {
      if (!tails.contains(v)) return false;
    }
    return true;
  });

  h.run("jordan.profile_conjugation_invariant",
        [](Sampler& s, const FieldSpec& spec) {
          const Matrix A = s.nilpotent(spec, 6);
          const Matrix Q = s.invertible(spec, A.rows());
          return block_profile(jordan_base(Q * A * Q.inverse())) ==
                 block_profile(jordan_base(A));
        });

  h.run("jordan.indecomposable_iff_single_block",
        [](Sampler& s, const FieldSpec& spec) {
          const Matrix A = s.nilpotent(spec, 6);
          return is_indecomposable(A) ==
                 (jordan_base(A).block_count() == 1);
        });

  h.run("jordan.block_projections", [](Sampler& s, const FieldSpec& spec) {
    const Matrix A = s.nilpotent(spec, 6);
    const JordanBase base = jordan_base(A);
    Matrix sum = Matrix::zero(spec, A.rows(), A.cols());
    for (std::size_t delta = 0; delta < base.block_count(); ++delta) {
      const Matrix e = block_projection(base, delta);
      if (e * e != e) return false;
      if (e * A != A * e) return false;
      if (base.block_count() >= 2 && (e.is_zero() || e.is_identity()))
        return false;
      sum = sum + e;
    }
    return sum.is_identity();
  });

  h.run("phi.linearity_and_intertwining", [](Sampler& s, const FieldSpec& spec) {
    const Matrix A = s.nilpotent(spec, 6);
    const JordanBase base = jordan_base(A);
    const PolyVector f = random_poly_vector(s, spec, base.sizes(), 2);
    const Poly g = s.poly(spec, 3);
    if (phi_map(base, g * f) != poly_apply(g, A, phi_map(base, f))) return false;
    const Poly t = Poly::t(spec);
    return A * phi_map(base, f) == phi_map(base, t * f);
  });

  h.run("phi.kernel_exactness", [](Sampler& s, const FieldSpec& spec) {
    const Matrix A = s.nilpotent(spec, 6);
    const JordanBase base = jordan_base(A);
    const PolyVector f = random_poly_vector(s, spec, base.sizes(), 2);
    return in_ker_phi(f, base.sizes()) == phi_map(base, f).is_zero();
  });

  h.run("phi.cut_and_preimage", [](Sampler& s, const FieldSpec& spec) {
    const Matrix A = s.nilpotent(spec, 6);
    const JordanBase base = jordan_base(A);
    const PolyVector f = random_poly_vector(s, spec, base.sizes(), 2);
    if (phi_map(base, f) != phi_map(base, vector_cut(f, base.sizes())))
      return false;
    const Vector u = s.vector(spec, base.dimension());
    const PolyVector pre = phi_preimage(base, u);
    for (std::size_t g = 0; g < base.block_count(); ++g) {
      if (pre[g].degree() > static_cast<int>(base.sizes()[g]) - 1) return false;
    }
    return phi_map(base, pre) == u;
  });

  h.run("centralizer.anti_homomorphism", [](Sampler& s, const FieldSpec& spec) {
    const Matrix A = s.nilpotent(spec, 6);
    const JordanBase base = jordan_base(A);
    const PolyMatrix P = random_m_phi(s, spec, base.sizes());
    const PolyMatrix Q = random_m_phi(s, spec, base.sizes());
    const Matrix psi_p = psi_from_P(base, P);
    const Matrix psi_q = psi_from_P(base, Q);
    if (psi_from_P(base, P * Q) != psi_q * psi_p) return false;
    if (psi_from_P(base, P + Q) != psi_p + psi_q) return false;
    const FieldElem c = s.field_elem(spec);
    return psi_from_P(base, P * Poly::constant(c)) == psi_p * c;
  });

  h.run("centralizer.mphi_is_algebra_and_generator_test",
        [](Sampler& s, const FieldSpec& spec) {
          const Matrix A = s.nilpotent(spec, 6);
          const JordanBase base = jordan_base(A);
          const auto& sizes = base.sizes();
          const PolyMatrix P = random_m_phi(s, spec, sizes);
          const PolyMatrix Q = random_m_phi(s, spec, sizes);
          if (!in_M_phi(P + Q, sizes) || !in_M_phi(P * Q, sizes)) return false;
          if (!in_M_phi(P * Poly::constant(s.field_elem(spec)), sizes))
            return false;
          // arbitrary polynomial matrix: closed form vs definitional test
          PolyMatrix R(spec, sizes.size());
          for (std::size_t i = 0; i < sizes.size(); ++i)
            for (std::size_t j = 0; j < sizes.size(); ++j)
              R.at(i, j) = s.poly(spec, 3);
          return in_M_phi(R, sizes) ==
                 in_M_phi_via_kernel_generators(R, sizes);
        });

  h.run("centralizer.span_equals_oracle", [](Sampler& s, const FieldSpec& spec) {
    const Matrix A = s.nilpotent(spec, 6);
    const JordanBase base = jordan_base(A);
    const CentralizerBasis basis = centralizer_basis(base);
    for (const auto& e : basis.elements()) {
      if (e.matrix * A != A * e.matrix) return false;
    }
    const std::vector<Matrix> oracle = commutant_oracle(A);
    if (!spans_equal(basis.matrices(), oracle)) return false;
    const std::size_t dim = dim_formula(block_profile(base));
    return basis.dimension() == dim && oracle.size() == dim;
  });

  h.run("centralizer.p_from_psi_round_trip", [](Sampler& s, const FieldSpec& spec) {
    const Matrix A = s.nilpotent(spec, 5);
    const JordanBase base = jordan_base(A);
    for (const Matrix& S : commutant_oracle(A)) {
      const PolyMatrix P = P_from_psi(base, S);
      if (!in_M_phi(P, base.sizes()) || !in_V(P, base.sizes())) return false;
      if (psi_from_P(base, P) != S) return false;
    }
    return true;
  });

  h.run("centralizer.containment_routes_agree",
        [](Sampler& s, const FieldSpec& spec) {
          const Matrix A = s.nilpotent(spec, 5);
          const std::size_t d = A.rows();
          const bool planted = s.below(2) == 0;
          const Matrix B = planted
                               ? poly_eval_matrix(s.poly(spec, d), A)
                               : s.matrix(spec, d, d);
          const Containment result = containment(A, B);  // throws on disagreement
          if (result.contained) {
            if (!result.certificate) return false;
            if (poly_eval_matrix(*result.certificate, A) != B) return false;
          }
          return !planted || result.contained;
        });

  h.run("centralizer.single_block_bijection",
        [](Sampler& s, const FieldSpec& spec) {
          const std::size_t n = 1 + s.below(6);
          const Matrix A = s.nilpotent_with_profile(spec, {n}, true);
          const std::vector<Matrix> oracle = commutant_oracle(A);
          if (oracle.size() != n) return false;
          for (const Matrix& S : oracle) {
            const auto h_poly = polynomial_coeffs(A, S);
            if (!h_poly) return false;
            if (poly_eval_matrix(*h_poly, A) != S) return false;
            if (h_poly->degree() >= static_cast<int>(n)) return false;
          }
          return true;
        });

  h.run("spectral.fitting_direct_sum", [](Sampler& s, const FieldSpec& spec) {
    const std::size_t d = 1 + s.below(5);
    const Matrix A = s.matrix(spec, d, d);
    const std::size_t r = fitting_exponent(A);
    const Matrix power = A.pow(r);
    // ker (+) im: column spaces meet trivially and dimensions add up
    const auto kernel = kernel_basis(power);
    if (kernel.size() + power.rank() != d) return false;
    std::vector<Matrix> cols;
    for (std::size_t j = 0; j < d; ++j)
      cols.emplace_back(spec, d, 1, power.column(j).entries());
    for (const auto& v : kernel) cols.emplace_back(spec, d, 1, v.entries());
    return span_rank(cols) == d;
  });

  h.run("spectral.eigenspaces_invariant_under_commutant",
        [](Sampler& s, const FieldSpec& spec) {
          const Matrix A = s.split_matrix(spec, 6);
          const SpectralDecomposition dec = decompose(A);
          for (const Matrix& S : commutant_oracle(A)) {
            for (const auto& comp : dec.components()) {
              const Matrix mapped = S * comp.space;
              std::vector<Matrix> cols;
              for (std::size_t j = 0; j < comp.space.cols(); ++j) {
                cols.emplace_back(spec, A.rows(), 1,
                                  comp.space.column(j).entries());
              }
              const std::size_t base_rank = span_rank(cols);
              for (std::size_t j = 0; j < mapped.cols(); ++j)
                cols.emplace_back(spec, A.rows(), 1, mapped.column(j).entries());
              if (span_rank(cols) != base_rank) return false;
            }
          }
          return true;
        });

  h.run("spectral.dim_total_equals_oracle", [](Sampler& s, const FieldSpec& spec) {
    const Matrix A = s.split_matrix(spec, 6);
    return centralizer_dim_total(decompose(A)) == commutant_oracle(A).size();
  });

  h.run("pi.standard_polynomial_alternating",
        [](Sampler& s, const FieldSpec& spec) {
          const std::size_t d = 1 + s.below(3);
          const std::size_t n = 2 + s.below(2);
          std::vector<Matrix> args;
          for (std::size_t i = 0; i < n; ++i) args.push_back(s.matrix(spec, d, d));
          const Matrix value = standard_polynomial(args);
          std::swap(args[0], args[1]);
          if (standard_polynomial(args) != -value) return false;
          args[0] = args[1];
          return standard_polynomial(args).is_zero();
        });

  h.run("pi.centralizer_standard_identity", [](Sampler& s, const FieldSpec& spec) {
    // modest block counts keep the factorial term small here
    std::vector<std::size_t> sizes = s.partition(1 + s.below(5));
    while (sizes.size() > 3) sizes.pop_back();
    const Matrix A = s.nilpotent_with_profile(spec, sizes, true);
    const JordanBase base = jordan_base(A);
    const IdentityReport report =
        fuzz_identity(centralizer_basis(base).matrices(),
                      2 * base.block_count(), 5, s.next_u64());
    return report.violations == 0;
  });

  h.run("pi.split_matrix_standard_identity",
        [](Sampler& s, const FieldSpec& spec) {
          // redraw until the degree bound fits the evaluation cap
          for (int attempt = 0; attempt < 50; ++attempt) {
            const Matrix A = s.split_matrix(spec, 6);
            const SpectralDecomposition dec = decompose(A);
            const std::size_t degree = pi_degree_bound(dec);
            if (degree > kDefaultDegreeCap) continue;
            const IdentityReport report =
                fuzz_identity(commutant_oracle(A), degree, 5, s.next_u64());
            return report.violations == 0;
          }
          return false;
        });

  h.run("pi.negative_control_full_matrix_algebra",
        [](Sampler& s, const FieldSpec& spec) {
          std::vector<Matrix> basis;
          for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) {
              Matrix e(spec, 2, 2);
              e.at(i, j) = FieldElem::one(spec);
              basis.push_back(std::move(e));
            }
          const IdentityReport report = fuzz_identity(basis, 2, 20, s.next_u64());
          return report.violations > 0 && report.first_witness.has_value();
        });

  return h.take();
}

}  // namespace centra
