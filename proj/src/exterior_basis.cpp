#include "qdc/exterior_basis.hpp"

#include <memory>
#include <mutex>

#include "qdc/errors.hpp"

namespace qdc {

ExteriorBasis::ExteriorBasis(int n, int k) : n_(n), k_(k) {
  elements_ = all_subsets(4 * n, k);
  for (int pos = 0; pos < size(); ++pos) {
    position_.emplace(elements_[pos].mask(), pos);
    blocks_[grading_of(elements_[pos])].push_back(pos);
  }
}

const ExteriorBasis& ExteriorBasis::get(int n, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<ExteriorBasis>> cache;
  if (n < 0 || 4 * n > MultiIndex::kMaxIndex || k < 0) throw DomainError("invalid exterior basis request");
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, k}];
  if (!slot) slot.reset(new ExteriorBasis(n, k));
  return *slot;
}

int ExteriorBasis::position(MultiIndex idx) const {
  auto it = position_.find(idx.mask());
  return it == position_.end() ? -1 : it->second;
}

ExteriorBasis::Grading ExteriorBasis::grading_of(MultiIndex idx) const {
  Grading g(n_, 0);
  for (int i : idx.indices()) ++g[i / 4];
  return g;
}

Vector ExteriorBasis::coords(const Form& f) const {
  if (f.n() != n_ || (f.k() != k_ && !f.is_zero())) throw DomainError("form does not live in this exterior power");
  Vector v(size());
  for (const auto& [idx, c] : f.terms()) {
    if (!c.is_constant()) throw DomainError("coordinates requested for a non-constant form");
    v[position(idx)] = c.constant_term();
  }
  return v;
}

Form ExteriorBasis::form(const Vector& coords) const {
  if (static_cast<int>(coords.size()) != size()) throw DomainError("coordinate vector has wrong length");
  Form f(n_, k_);
  for (int pos = 0; pos < size(); ++pos) {
    if (coords[pos] != 0) f.add_term(elements_[pos], Poly(coords[pos]));
  }
  return f;
}

Form apply_coefficientwise(const SparseMatrix& m, const Form& f, int k_out) {
  const ExteriorBasis& dom = ExteriorBasis::get(f.n(), f.k());
  const ExteriorBasis& cod = ExteriorBasis::get(f.n(), k_out);
  if (m.cols() != dom.size() || m.rows() != cod.size()) throw DomainError("operator does not match form degree");
  std::vector<Poly> acc(cod.size());
  std::vector<bool> touched(cod.size(), false);
  for (const auto& [idx, c] : f.terms()) {
    for (const auto& [i, a] : m.column(dom.position(idx))) {
      acc[i] += c * a;
      touched[i] = true;
    }
  }
  Form out(f.n(), k_out);
  for (int i = 0; i < cod.size(); ++i) {
    if (touched[i] && !acc[i].is_zero()) out.add_term(cod.element(i), acc[i]);
  }
  return out;
}

}  // namespace qdc
