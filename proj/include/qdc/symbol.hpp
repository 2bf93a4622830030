#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdc/decomposition.hpp"
#include "qdc/form.hpp"
#include "qdc/space.hpp"

namespace qdc {

/// A constant covector ξ = Σ ξ_i e^i on R^{4n}.
using Covector = std::vector<Rational>;

/// Parses "1,0,0,0,..." (integers or p/q) with exactly 4n entries, not all
/// zero; throws InputError otherwise.
Covector parse_covector(std::string_view text, int n);
Covector basis_covector(int n, int i);
Form covector_form(int n, const Covector& xi);

/// σ(α) = 1/(2(r+1)) ((r+2) α e^0 - I(α) e^1 - J(α) e^2 - K(α) e^3) for
/// constant α ∈ E_{k,r}. Throws DomainError if α is not in E_{k,r}.
Form symbol_up(const Form& alpha, int r);
/// π_{k+1,r+1}(α ∧ ξ): the symbol in an arbitrary direction.
Form symbol_projected(const Form& alpha, int r, const Covector& xi);

/// Fine summand E^{l,m}_{k,r}: l differentials in the block H_0 = span(e^0..e^3)
/// and weight m on the remaining blocks. For l = 2, m = r a nonzero sign
/// selects the self-dual (+1) or anti-self-dual (-1) part of Λ^2 H_0.
struct FineNode {
  int k = 0;
  int r = 0;
  int l = 0;
  int m = 0;
  int sign = 0;
  friend bool operator==(const FineNode&, const FineNode&) = default;
  std::string label() const;
};

bool is_admissible(const FineNode& node);
/// All admissible fine nodes of (k, r), with E^{2,r} listed as its + and -
/// parts.
std::vector<FineNode> fine_nodes(int k, int r);
/// Basis of E^{l,m}_{k,r}; zero basis if the node lies outside Λ(R^{4n}).
/// Throws DomainError for inadmissible nodes.
SpaceBasis fine_space_basis(int n, const FineNode& node);
/// Dimension predicted in terms of ε^{n-1}.
long long fine_dimension_formula(int n, const FineNode& node);

/// Membership test for E^{l,m}_{k,r} using the projectors directly.
bool fine_space_contains(int n, const FineNode& node, const Form& f);

/// Hodge star on the Λ H_0 factor only.
Form star_block_zero(const Form& a);
/// Number of indices of a constant form in block 0 (-1 if mixed or zero).
int block_zero_degree(const Form& a);

enum class LieInCase { one_up, one_down, two_up, two_mid, two_down };
std::string_view name(LieInCase c);
LieInCase parse_lie_in_case(std::string_view text);

struct LieInSolution {
  LieInCase which;
  int k;
  int r;
  int l;
  /// Basis of E^0_{k,r}: forms of weight r without H_0 differentials.
  SpaceBasis base;
  /// Solution tuples (α_0..α_3 or β_1..β_3), each component in coordinates
  /// of Λ^k, stacked.
  std::vector<Vector> tuples;
  /// The assembled forms Σ α_j ∧ f_j.
  SpaceBasis forms;
  /// Fine space the solutions should span.
  FineNode target;
};

/// Solves the lie in conditions for tuples of base forms of degree k and
/// weight r. For one_up / one_down, l selects the 1-form (l = 1) or the
/// 3-form (l = 3) frame of H_0; two_* use ω_1^+, ω_2^+, ω_3^+.
LieInSolution lie_in_solution_space(int n, int k, int r, LieInCase c, int l = 1);
/// Scalar coefficient c of the system: c α_0 - I α_1 - ... for one_*, and
/// c β_1 = J β_3 - K β_2 (cyclically) for two_*.
Rational lie_in_coefficient(LieInCase c, int r);
/// Same system with an arbitrary scalar coefficient.
LieInSolution lie_in_solution_space_with(int n, int k, int r, LieInCase c, int l, const Rational& coefficient);
/// Stacked tuples (I β_0, J β_0, K β_0) for β_0 in the base.
std::vector<Vector> two_mid_generated_tuples(const LieInSolution& s);

/// Rank of σ_ξ : E_{k,r} → Λ^{k+1}; ξ = e^0 when xi is empty.
long long symbol_rank(int n, int k, int r, const std::optional<Covector>& xi = std::nullopt);
/// Rank of σ_ξ restricted to a subspace of E_{k,r}.
long long symbol_rank_on(const SpaceBasis& domain, int r, const std::optional<Covector>& xi = std::nullopt);

/// Kernel of σ on E^1_{k-1,r-1} (the part with one H_0 differential) next to
/// the span of α_0 e^0 - (1/r) Σ g_j(α_0) e^j, α_0 ∈ E^0_{k-2,r-2}.
struct KernelCharacterization {
  int n;
  int k;
  int r;
  SpaceBasis kernel;
  SpaceBasis predicted;
  bool equal() const { return kernel.same_span(predicted); }
};
/// Requires n >= 2, r >= 1, (k-1, r-1) a valid node.
KernelCharacterization kernel_characterization(int n, int k, int r);

struct CounterexampleCheck {
  std::string name;
  bool passed;
  std::string detail;
};
/// Symbol kernels α e^{0123} at E_{2k,0}, α e^{123} at E_{2k+1,1} (not in the
/// image of σ from E_{2k,0}), injectivity of σ on E_{0,0} and E_{2,0}, and
/// exactness at E_{1,1}.
std::vector<CounterexampleCheck> counterexample_checks(int n);

/// Exactness of the three short sequences of fine spaces.
struct ShortSequence {
  std::string name;  // "top", "middle", "bottom"
  std::array<FineNode, 3> nodes;
  std::array<long long, 3> dims{};
  long long rank_ab = 0;
  long long rank_bc = 0;
  /// σ maps A into B and B into C, and σ∘σ = 0.
  bool well_defined = true;
  std::array<bool, 3> exact_at{};
  long long alternating_sum() const { return dims[0] - dims[1] + dims[2]; }
  bool exact() const { return exact_at[0] && exact_at[1] && exact_at[2]; }
};

struct FiveSequenceReport {
  int n;
  int k;
  int r;
  std::vector<ShortSequence> sequences;  // top, middle, bottom
};

/// Requires n >= 2, k >= 2, k = r mod 2.
FiveSequenceReport five_sequence_report(int n, int k, int r);

struct NodeVerdict {
  int k0;
  int k;
  int r;
  long long dim = 0;
  long long rank_in = 0;   // rank of σ: E_{k-1,r-1} → E_{k,r}
  long long rank_out = 0;  // rank of σ: E_{k,r} → E_{k+1,r+1}
  bool exact = false;
  bool predicted = false;
  bool match() const { return exact == predicted; }
};

struct EllipticityReport {
  int n;
  Covector xi;
  std::vector<NodeVerdict> nodes;
  bool all_match() const;
};

/// Exactness predicted for node (k, r) on the diagonal starting at
/// E_{2 k0, 0}: never fails for k0 = 0; fails only at E_{3,1} for k0 = 1;
/// fails exactly at E_{2k0,0} and E_{2k0+1,1} for k0 >= 2.
bool predicted_exact(int k0, int k, int r);
/// Every node of every diagonal, ordered by (k0, k).
EllipticityReport ellipticity_report(int n, const std::optional<Covector>& xi = std::nullopt);

}  // namespace qdc
