#pragma once

#include <string>
#include <vector>

#include "qdc/form.hpp"
#include "qdc/linalg.hpp"
#include "qdc/sp1.hpp"
#include "qdc/space.hpp"

namespace qdc {

/// Node (k, r) of the double complex: degree k, highest weight r.
struct GridNode {
  int k = 0;
  int r = 0;
  friend bool operator==(const GridNode&, const GridNode&) = default;
  friend auto operator<=>(const GridNode&, const GridNode&) = default;
};

/// 0 <= r <= k and r = k mod 2.
bool is_valid_node(int k, int r);
/// Throws DomainError unless is_valid_node(k, r).
void require_valid_node(int k, int r);

/// C(p, q/2), zero when q is odd or q/2 is out of range.
long long binomial_half(int p, int twice_q);
/// Number of weight-r vectors in Λ^k(2n V_1).
long long weight_multiplicity(int n, int k, int r);
/// Multiplicity of V_r in Λ^k(R^{4n}).
long long epsilon(int n, int k, int r);
/// -r(r+2), the Casimir eigenvalue on V_r.
inline long casimir_eigenvalue(int r) { return -static_cast<long>(r) * (r + 2); }

/// Largest weight that can occur in Λ^k(R^{4n}): min(k, 4n - k).
int max_weight(int n, int k);
/// Weights r with r <= max_weight(n, k) and r = k mod 2, in descending order.
std::vector<int> weights_in_degree(int n, int k);

/// Projector onto the -r(r+2)-eigenspace of the Casimir built from the
/// generators acting on `blocks`. Built blockwise over the block-degree
/// grading as a Lagrange polynomial in the Casimir; cached.
const SparseMatrix& projector_matrix(int n, int k, int r, BlockSet blocks = kAllBlocks);

/// Trace of the projector, i.e. dim E_{k,r}.
long long eigenspace_dim(int n, int k, int r, BlockSet blocks = kAllBlocks);

/// Basis of E_{k,r} = ker(C + r(r+2)) on constant k-forms; cached.
const SpaceBasis& eigenspace_basis(int n, int k, int r);

/// Basis of ker(C + r(r+2)) computed directly from the Casimir matrix by
/// elimination, without the projector. Slower; used as a cross-check.
SpaceBasis casimir_kernel_basis(int n, int k, int r);

/// π_{k,r}(a), acting coefficient-wise on polynomial coefficients.
Form project(const Form& a, int r, BlockSet blocks = kAllBlocks);

/// Highest weights in V_m ⊗ V_n: m+n, m+n-2, ..., |m-n|.
std::vector<int> clebsch_gordon(int m, int n);

struct DecompositionRow {
  int k;
  int r;
  long long epsilon;
  long long dim;
};

/// One row per node (k, r) with r <= max_weight(n, k), k ascending then r
/// descending; dim = (r+1) ε.
std::vector<DecompositionRow> decomposition_table(int n);
std::string decomposition_table_csv(const std::vector<DecompositionRow>& rows);

}  // namespace qdc
