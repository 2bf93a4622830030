#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qdc/decomposition.hpp"
#include "qdc/form.hpp"

namespace qdc {

/// A polynomial section of E_{k,r}. Membership is checked on construction.
class GradedSection {
 public:
  /// Throws DomainError if the node is invalid or π_{k,r}(form) != form.
  GradedSection(GridNode node, Form form);
  /// The zero section at a node.
  static GradedSection zero(int n, GridNode node);

  const GridNode& node() const { return node_; }
  const Form& form() const { return form_; }
  int max_poly_degree() const { return form_.poly_degree(); }

 private:
  GradedSection(GridNode node, Form form, bool);
  GridNode node_;
  Form form_;

  friend GradedSection D_up(const GradedSection&);
  friend GradedSection D_down(const GradedSection&);
  friend GradedSection D_up_closed_form(const GradedSection&);
  friend GradedSection D_down_closed_form(const GradedSection&);
  friend GradedSection random_section(std::mt19937_64&, int, GridNode, int);
};

/// D' = π_{k+1,r+1} ∘ d.
GradedSection D_up(const GradedSection& s);
/// D̄ = π_{k+1,r-1} ∘ d. For r = 0 there is no target summand and the result
/// is the zero section at the formal node (k+1, -1).
GradedSection D_down(const GradedSection& s);
/// D'α = -1/4 ((r-1) + C/(r+1)) dα.
GradedSection D_up_closed_form(const GradedSection& s);
/// D̄α = 1/4 ((r+3) + C/(r+1)) dα.
GradedSection D_down_closed_form(const GradedSection& s);

/// Casimir applied coefficient-wise to a polynomial form.
Form casimir_polynomial(const Form& a);

/// Random polynomial k-form: a few terms e^I * monomial with coefficients in
/// {-2, -1, 1, 2}, monomial degree <= max_degree.
Form random_polynomial_form(std::mt19937_64& rng, int n, int k, int max_degree, int terms = 4);
/// Random nonzero section of E_{k,r}; throws DomainError if E_{k,r} = 0.
GradedSection random_section(std::mt19937_64& rng, int n, GridNode node, int max_degree);

/// Nodes (k, r) with ε^n_{k,r} > 0, k ascending then r descending.
std::vector<GridNode> grid_nodes(int n);

struct NodeCheck {
  GridNode node;
  int trials = 0;
  int violations = 0;
};

struct ComplexCheckReport {
  int n = 0;
  int max_degree = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<NodeCheck> nodes;
  /// Human-readable description of each violation, in node order.
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

/// For `trials` random sections at every node checks d = D' + D̄, D'^2 = 0,
/// D̄^2 = 0, D'D̄ + D̄D' = 0 and, if requested, that the closed forms agree
/// with the projector forms.
ComplexCheckReport verify_double_complex(int n, int max_degree, int trials, std::uint64_t seed,
                                         bool check_closed_forms = true);

struct CohomologyDims {
  long long kernel = 0;
  long long image = 0;
  long long cohomology = 0;
};

/// dim ker D'_{k,r} - dim im D'_{k-1,r-1} on sections with coefficients of
/// degree <= max_degree.
CohomologyDims cohomology_dims(int n, int k, int r, int max_degree);

}  // namespace qdc
