#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qdc/form.hpp"
#include "qdc/linalg.hpp"
#include "qdc/space.hpp"
#include "qdc/symbol.hpp"

namespace qdc {

// Real forms on C^{2n} = R^{4n} with the complex structure I alone
// (e^{4a+1} = I e^{4a}, e^{4a+3} = I e^{4a+2}). n = 1 is C^2.

/// [[Λ^{p,q}]] with p >= q; w = p - q.
struct U1Node {
  int p = 0;
  int q = 0;
  int k() const { return p + q; }
  int w() const { return p - q; }
  friend bool operator==(const U1Node&, const U1Node&) = default;
  std::string label() const;
};

struct U1Space {
  U1Node node;
  SpaceBasis basis;
};

/// The spaces [[Λ^{p,q}]], p + q = k, p >= q, p <= 2n, as the w^2-eigenspaces
/// of -I∘I on real Λ^k (I acting as a derivation). Ordered by descending p.
std::vector<U1Space> u1_decompose(int n, int k);

/// Projector onto [[Λ^{p,q}]] inside Λ^k (w = p - q); cached.
const SparseMatrix& u1_projector(int n, int k, int w);
/// Coefficient-wise projection of a polynomial form.
Form u1_project(const Form& a, int w);

/// [∂] = π_{w+1} ∘ d and [∂̄] = π_{w-1} ∘ d on sections of [[Ω^{p,q}]]
/// (w = p - q); [∂̄] = 0 when w = 0. Throw DomainError if a is not a section.
Form real_partial(const Form& a, int w);
Form real_partial_bar(const Form& a, int w);

struct RealDolbeaultIdentityReport {
  int n = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  int sections = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

/// d = [∂] + [∂̄], [∂]^2 = 0, [∂][∂̄] + [∂̄][∂] = 0, [∂̄]^2 = 0 on random
/// polynomial sections of every [[Ω^{p,q}]].
RealDolbeaultIdentityReport verify_real_dolbeault_identities(int n, int max_degree, int trials, std::uint64_t seed);

/// Exactness of the symbol sequence of the upward complex with fixed q at
/// [[Λ^{p,q}]], direction e^0.
struct U1Verdict {
  int q;
  int p;
  long long dim = 0;
  long long rank_in = 0;
  long long rank_out = 0;
  bool exact = false;
  bool predicted = false;
  bool match() const { return exact == predicted; }
};

/// q > 0: fails exactly at [Λ^{q,q}] and [[Λ^{q+1,q}]]; q = 0: fails only at
/// [[Λ^{1,0}]].
bool real_dolbeault_predicted_exact(int p, int q);

struct RealDolbeaultReport {
  int n = 0;
  std::vector<CounterexampleCheck> checks;
  std::vector<U1Verdict> nodes;
  bool passed() const;
};

/// Counterexamples (e^{01} in the kernel on [Λ^{1,1}], e^{123} outside the
/// image in [[Λ^{2,1}]], failure at [[Λ^{1,0}]]), exactness at every
/// p >= q + 2 node, and the full verdict table against the predicate.
RealDolbeaultReport real_dolbeault_report(int n = 1);

}  // namespace qdc
