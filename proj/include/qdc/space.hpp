#pragma once

#include <functional>
#include <vector>

#include "qdc/exterior_basis.hpp"
#include "qdc/form.hpp"
#include "qdc/linalg.hpp"

namespace qdc {

/// Basis of a subspace of constant k-forms on R^{4n}.
class SpaceBasis {
 public:
  SpaceBasis() = default;
  /// Vectors must be constant k-forms; independence is not checked here
  /// (see is_independent).
  SpaceBasis(int n, int k, std::vector<Form> vectors);

  static SpaceBasis from_coords(int n, int k, const std::vector<Vector>& coords);
  /// The standard basis of all of Λ^k.
  static SpaceBasis whole(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(vectors_.size()); }
  bool empty() const { return vectors_.empty(); }
  const std::vector<Form>& vectors() const { return vectors_; }
  const Form& operator[](int i) const { return vectors_[i]; }

  /// Coordinates of each vector in ExteriorBasis(n, k).
  const std::vector<Vector>& coords() const { return coords_; }
  Matrix coord_matrix() const;
  int ambient_dim() const { return ExteriorBasis::get(n_, k_).size(); }

  bool is_independent() const;
  bool contains(const Form& f) const;
  bool same_span(const SpaceBasis& other) const;
  bool contains_span(const SpaceBasis& other) const;

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Form> vectors_;
  std::vector<Vector> coords_;
};

/// A matrix with labelled domain and codomain bases; column j holds the
/// codomain coordinates of the image of domain vector j.
struct LinearMap {
  SpaceBasis domain;
  SpaceBasis codomain;
  Matrix matrix;

  std::size_t rank() const;
  std::size_t nullity() const { return domain.size() - rank(); }
  /// Kernel as forms in the domain's ambient space.
  SpaceBasis kernel() const;
  /// Image as forms in the codomain's ambient space.
  SpaceBasis image() const;
};

using FormOperator = std::function<Form(const Form&)>;

/// Exact matrix of f : span(domain) → span(codomain). Throws
/// ContainmentError naming the first image outside span(codomain).
LinearMap matrix_of_map(const FormOperator& f, const SpaceBasis& domain, const SpaceBasis& codomain);

}  // namespace qdc
