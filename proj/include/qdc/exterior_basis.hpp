#pragma once

#include <map>
#include <unordered_map>
#include <vector>

#include "qdc/form.hpp"
#include "qdc/linalg.hpp"

namespace qdc {

/// Ordered basis {e^I : |I| = k} of constant k-forms on R^{4n}, with the
/// grading by block degrees (how many indices fall in each H-block).
class ExteriorBasis {
 public:
  using Grading = std::vector<int>;  // length n, entries 0..4

  /// Shared, lazily built instance; safe for concurrent callers.
  static const ExteriorBasis& get(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  int size() const { return static_cast<int>(elements_.size()); }
  MultiIndex element(int pos) const { return elements_[pos]; }
  const std::vector<MultiIndex>& elements() const { return elements_; }
  /// Position of idx, or -1 if idx is not a k-subset of [0, 4n).
  int position(MultiIndex idx) const;

  Grading grading_of(MultiIndex idx) const;
  /// Positions grouped by block-degree vector, in lexicographic grading order.
  const std::map<Grading, std::vector<int>>& blocks() const { return blocks_; }

  /// Coordinates of a constant k-form; throws DomainError on Poly
  /// coefficients.
  Vector coords(const Form& f) const;
  Form form(const Vector& coords) const;

 private:
  ExteriorBasis(int n, int k);

  int n_;
  int k_;
  std::vector<MultiIndex> elements_;
  std::unordered_map<std::uint64_t, int> position_;
  std::map<Grading, std::vector<int>> blocks_;
};

/// Matrix of a linear operator on constant forms, Λ^k → Λ^{k'}, in the
/// ExteriorBasis coordinates.
template <typename Op>
SparseMatrix operator_matrix(int n, int k, int k_out, Op&& op) {
  const ExteriorBasis& dom = ExteriorBasis::get(n, k);
  const ExteriorBasis& cod = ExteriorBasis::get(n, k_out);
  SparseMatrix m(cod.size(), dom.size());
  for (int j = 0; j < dom.size(); ++j) {
    const Form image = op(Form::basis(n, dom.element(j)));
    SparseMatrix::Column col;
    for (const auto& [idx, c] : image.terms()) col.emplace_back(cod.position(idx), c.constant_term());
    m.set_column(j, std::move(col));
  }
  return m;
}

/// Applies a coordinate-space matrix on Λ^k to a form with polynomial
/// coefficients, acting coefficient-wise.
Form apply_coefficientwise(const SparseMatrix& m, const Form& f, int k_out);

}  // namespace qdc
