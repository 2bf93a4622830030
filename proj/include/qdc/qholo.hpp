#pragma once

#include <array>
#include <string>
#include <vector>

#include "qdc/form.hpp"
#include "qdc/linalg.hpp"
#include "qdc/qform.hpp"
#include "qdc/sp1.hpp"

namespace qdc {

/// f = f_0 + f_1 i + f_2 j + f_3 k with polynomial components on R^{4n}.
struct QFunction {
  int n = 1;
  std::array<Poly, 4> components;
  friend bool operator==(const QFunction&, const QFunction&) = default;
};

/// df as a quaternion-valued 1-form.
QForm qdifferential(const QFunction& f);
/// df_0 + I(df_1) + J(df_2) + K(df_3).
Form cauchy_riemann(const QFunction& f);
bool is_q_holomorphic(const QFunction& f);

/// 𝓘(α) = I(α) - α i, and likewise for J, K.
QForm script_act(Generator g, const QForm& a);
/// 𝓘² + 𝓙² + 𝓚².
QForm script_casimir(const QForm& a);

/// Matrices on H ⊗ Λ^k in coordinates (unit, position) ↦ unit * C(4n,k) +
/// position; cached.
const SparseMatrix& script_action_matrix(int n, int k, Generator g);
const SparseMatrix& script_casimir_matrix(int n, int k);
/// Projector onto the -s(s+2)-eigenspace of the script Casimir on H ⊗ Λ^k.
const SparseMatrix& script_projector(int n, int k, int s);
/// Script weights s that occur in H ⊗ Λ^k, descending.
std::vector<int> script_weights(int n, int k);

Vector qform_coords(const QForm& a);
QForm qform_from_coords(int n, int k, const Vector& coords);

/// H ⊗ E_{k,r} = V_1 ⊗ ε (V_{r+1} ⊕ V_{r-1}) under the diagonal action.
struct HqSplit {
  int n;
  int k;
  int r;
  long long total = 0;  // 4 (r+1) ε
  long long upper = 0;  // eigenvalue -(r+1)(r+3)
  long long lower = 0;  // eigenvalue -(r-1)(r+1)
  long long predicted_upper = 0;  // 2 (r+2) ε
  long long predicted_lower = 0;  // 2 r ε
  bool matches() const {
    return upper == predicted_upper && lower == predicted_lower && upper + lower == total;
  }
};
/// Eigenspace dimensions of the script Casimir restricted to H ⊗ E_{k,r}.
HqSplit hq_split(int n, int k, int r);

/// Compares, on the space of quaternion-valued polynomials of degree <=
/// max_degree, the kernel of f ↦ cauchy_riemann(f) with the kernel of
/// f ↦ script_casimir(df) + 8 df (df in the V_2 part).
struct QholoEquivalence {
  int n = 0;
  int max_degree = 0;
  int functions = 0;
  int cr_kernel = 0;
  int v2_kernel = 0;
  bool same_kernel = false;
};
QholoEquivalence qholo_equivalence(int n, int max_degree);

/// Symbol sequences of the quaternion-valued complex F_{k,s} → F_{k+1,s+1}
/// (F_{k,s} the script weight-s part of H ⊗ Λ^k), direction e^0.
struct QNodeVerdict {
  int k;
  int s;
  long long dim = 0;
  long long rank_in = 0;
  long long rank_out = 0;
  bool exact = false;
};
struct QholoEllipticityReport {
  int n = 0;
  std::vector<QNodeVerdict> nodes;
  bool all_exact() const;
};
QholoEllipticityReport qholo_symbol_ellipticity(int n = 1);

}  // namespace qdc
