#include "qdc/form.hpp"

#include <algorithm>
#include <sstream>

#include "qdc/errors.hpp"

namespace qdc {

Form::Form(int n, int k) : n_(n), k_(k) {
  if (n < 0 || 4 * n > MultiIndex::kMaxIndex) throw InputError("block count out of range");
  if (k < 0) throw InputError("form degree out of range");
}

Form Form::basis(int n, MultiIndex idx, const Poly& c) {
  Form f(n, idx.degree());
  f.add_term(idx, c);
  return f;
}

Form Form::function(int n, const Poly& f) { return basis(n, MultiIndex{}, f); }

bool Form::is_constant() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second.is_constant(); });
}

Poly Form::coefficient(MultiIndex idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? Poly() : it->second;
}

int Form::poly_degree() const {
  int d = -1;
  for (const auto& [idx, c] : terms_) d = std::max(d, c.degree());
  return d;
}

void Form::add_term(MultiIndex idx, const Poly& c) {
  if (idx.degree() != k_) throw InputError("term degree does not match form degree");
  if (idx.max_index() >= 4 * n_) throw InputError("index exceeds 4n-1");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(idx, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Form::add_unsorted(std::span<const int> indices, const Poly& c) {
  std::vector<int> sorted(indices.begin(), indices.end());
  int sign = 1;
  // insertion sort, counting transpositions
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    for (std::size_t j = i; j > 0 && sorted[j - 1] > sorted[j]; --j) {
      std::swap(sorted[j - 1], sorted[j]);
      sign = -sign;
    }
  }
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return;
  add_term(MultiIndex::from_indices(sorted), sign > 0 ? c : -c);
}

Form Form::map_coefficients(const std::function<Poly(const Poly&)>& f) const {
  Form out(n_, k_);
  for (const auto& [idx, c] : terms_) out.add_term(idx, f(c));
  return out;
}

void Form::check_compatible(const Form& other) const {
  if (n_ != other.n_) throw InputError("forms live on different R^{4n}");
  if (k_ != other.k_) throw InputError("cannot add forms of different degree");
}

Form& Form::operator+=(const Form& other) {
  check_compatible(other);
  for (const auto& [idx, c] : other.terms_) add_term(idx, c);
  return *this;
}

Form& Form::operator-=(const Form& other) {
  check_compatible(other);
  for (const auto& [idx, c] : other.terms_) add_term(idx, -c);
  return *this;
}

Form& Form::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [idx, p] : terms_) p *= c;
  return *this;
}

Form Form::operator-() const {
  Form out(*this);
  return out *= Rational(-1);
}

Form operator*(const Poly& p, const Form& a) {
  Form out(a.n_, a.k_);
  for (const auto& [idx, c] : a.terms_) out.add_term(idx, p * c);
  return out;
}

bool operator==(const Form& a, const Form& b) {
  return a.n_ == b.n_ && a.k_ == b.k_ && a.terms_ == b.terms_;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : terms_) {
    std::ostringstream coeff;
    bool first_mono = true;
    for (const auto& [m, value] : c.terms()) {
      if (!first_mono) coeff << (value < 0 ? " - " : " + ");
      else if (value < 0) coeff << "-";
      first_mono = false;
      Rational mag = abs(value);
      std::string mono;
      for (int v = 0; v < m.length(); ++v) {
        if (m.exponent(v) == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += "x" + std::to_string(v);
        if (m.exponent(v) > 1) mono += "^" + std::to_string(m.exponent(v));
      }
      if (mono.empty()) coeff << mag.get_str();
      else if (mag == 1) coeff << mono;
      else coeff << mag.get_str() << "*" << mono;
    }
    if (!first) os << " + ";
    first = false;
    os << (c.terms().size() > 1 ? "(" + coeff.str() + ")" : coeff.str());
    if (k_ > 0) {
      os << "*e^{";
      const char* sep = "";
      for (int i : idx.indices()) {
        os << sep << i;
        if (4 * n_ > 10) sep = ",";
      }
      os << "}";
    }
  }
  return os.str();
}

Form wedge(const Form& a, const Form& b) {
  if (a.n() != b.n()) throw InputError("wedge of forms on different R^{4n}");
  Form out(a.n(), a.k() + b.k());
  for (const auto& [ia, ca] : a.terms()) {
    for (const auto& [ib, cb] : b.terms()) {
      const int sign = merge_sign(ia, ib);
      if (sign == 0) continue;
      Poly c = ca * cb;
      if (sign < 0) c = -c;
      out.add_term(MultiIndex::from_mask(ia.mask() | ib.mask()), c);
    }
  }
  return out;
}

Form exterior_d(const Form& a) {
  Form out(a.n(), a.k() + 1);
  for (const auto& [idx, c] : a.terms()) {
    const int span = c.variable_span();
    for (int v = 0; v < span; ++v) {
      if (idx.contains(v)) continue;
      Poly dc = c.derivative(v);
      if (dc.is_zero()) continue;
      const MultiIndex single = MultiIndex::from_mask(std::uint64_t{1} << v);
      if (merge_sign(single, idx) < 0) dc = -dc;
      out.add_term(idx.with(v), dc);
    }
  }
  return out;
}

Form hodge_star(const Form& a) {
  const int dim = 4 * a.n();
  if (a.k() > dim) return Form(a.n(), 0);
  const std::uint64_t full = dim == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << dim) - 1;
  Form out(a.n(), dim - a.k());
  for (const auto& [idx, c] : a.terms()) {
    const MultiIndex complement = MultiIndex::from_mask(full & ~idx.mask());
    out.add_term(complement, merge_sign(idx, complement) > 0 ? c : -c);
  }
  return out;
}

Form one_form(int n, int i) {
  if (i < 0 || i >= 4 * n) throw InputError("1-form index out of range");
  return Form::basis(n, MultiIndex::from_mask(std::uint64_t{1} << i));
}

Form basis_form(int n, std::initializer_list<int> indices) {
  Form out(n, static_cast<int>(indices.size()));
  out.add_unsorted(std::span<const int>(indices.begin(), indices.size()), Poly(1));
  return out;
}

}  // namespace qdc
