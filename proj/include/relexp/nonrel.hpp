#pragma once

namespace relexp {

/// ⟨nℓ| r^k |nℓ'⟩ request, canonicalised so that delta = ℓ − ℓ' ≥ 0.
struct VKParams {
  int n = 1;
  int ell = 0;
  int ell_prime = 0;
  int k = 0;
  int delta = 0;
};

/// Builds VKParams, swapping ℓ and ℓ' when ℓ < ℓ' (the element is symmetric).
VKParams make_vk_params(int n, int ell, int ell_prime, int k);

/// Leading ε-behaviour c·ε^order of a factorial expression continued with
/// a common shift of all arguments.
struct RegularizedValue {
  double coefficient;
  double eps_order;
};

/// f = √[(k+1−Δ)!(k+1+Δ)!(ℓ+ℓ'+k+2)! / ((k+1)!² (ℓ+ℓ'−k−1)!)]
RegularizedValue vk_factor(const VKParams& p);

struct VKElement {
  double value;      // radial integral in the usual convention (R_nℓ > 0 near the origin)
  int formula_sign;  // sign of the coupling-coefficient expression before that convention is applied
  int delta;
};

/// Radial matrix element from a continued Clebsch–Gordan coefficient; Z scales as Z^{−k}.
VKElement vk_matrix_element(const VKParams& p, double Z);

/// ∫ R_nℓ r^k R_nℓ' r² dr by exact monomial integration.
double schrodinger_expectation(int n, int ell, int ell_prime, int k, double Z);

}  // namespace relexp
