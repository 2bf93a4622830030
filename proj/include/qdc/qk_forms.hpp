#pragma once

#include <array>
#include <vector>

#include "qdc/form.hpp"
#include "qdc/qform.hpp"
#include "qdc/sp1.hpp"
#include "qdc/space.hpp"

namespace qdc {

/// Kähler forms, fundamental 4-form and quaternionic 2-form of flat H^n.
struct StructuralForms {
  int n = 0;
  Form omega_I;
  Form omega_J;
  Form omega_K;
  Form Omega;
  /// Ψ = i ω_I + j ω_J + k ω_K.
  QForm Psi;
};

/// ω_g(X, Y) = <gX, Y> in the standard frame, e.g.
/// ω_I = Σ_a e^{4a,4a+1} + e^{4a+2,4a+3}.
Form kahler_form(int n, Generator g);

/// Builds the structural forms and checks Ω = Σ ω_g ∧ ω_g, C(Ω) = 0 and
/// Ψ ∧ Ψ = -Ω; throws InvariantViolation if any check fails.
StructuralForms structural_forms(int n);

/// Ω ∧ *μ = 0. Requires constant μ with k <= 2n + 2 (DomainError otherwise).
bool is_effective(const Form& mu);
/// Kernel of μ ↦ Ω ∧ *μ on Λ^k; cached.
const SpaceBasis& effective_basis(int n, int k);

struct BonanPart {
  int j;    // power of Ω
  Form mu;  // effective (k - 4j)-form
};

/// φ = Σ_j Ω^j ∧ μ_{k-4j} with every μ effective. Throws InvariantViolation
/// if the stacked system is not of full rank or does not span Λ^k.
std::vector<BonanPart> kraines_bonan_decompose(const Form& phi);
Form kraines_bonan_recompose(int n, int k, const std::vector<BonanPart>& parts);

struct BonanSystemReport {
  int n;
  int k;
  int ambient;                // C(4n, k)
  std::vector<int> effective_dims;  // dim effective_{k-4j}, j = 0, 1, ...
  int stacked_rank;
  bool unique() const { return stacked_rank == static_cast<int>(stacked_columns()); }
  bool exists() const { return stacked_rank == ambient; }
  std::size_t stacked_columns() const;
};
BonanSystemReport kraines_bonan_system(int n, int k);

/// Real part [[Λ^{k,0}]] for the complex structure L = aI + bJ + cK
/// (a^2 + b^2 + c^2 = 1): the kernel of L^2 + k^2 on Λ^k.
SpaceBasis real_holomorphic_part(int n, int k, const Rational& a, const Rational& b, const Rational& c);

/// Rational points of S^2 used to sample complex structures.
std::vector<std::array<Rational, 3>> sphere_sample_points();

}  // namespace qdc
