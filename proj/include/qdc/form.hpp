#pragma once

#include <functional>
#include <map>
#include <string>

#include "qdc/multi_index.hpp"
#include "qdc/poly.hpp"

namespace qdc {

/// Homogeneous degree-k exterior form on R^{4n} with polynomial
/// coefficients. Coordinates are x_{4a+b} with e^{4a+b} = dx_{4a+b}, so block
/// a spans indices 4a..4a+3.
class Form {
 public:
  using Terms = std::map<MultiIndex, Poly>;

  Form() = default;
  Form(int n, int k);

  /// c * e^{idx}
  static Form basis(int n, MultiIndex idx, const Poly& c = Poly(1));
  /// The 0-form f.
  static Form function(int n, const Poly& f);

  int n() const { return n_; }
  int k() const { return k_; }
  int dim() const { return 4 * n_; }
  const Terms& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Poly coefficient(MultiIndex idx) const;
  /// Largest polynomial degree among coefficients (-1 for zero).
  int poly_degree() const;

  /// Adds c * e^{idx}; idx must have length k and lie in [0, 4n).
  void add_term(MultiIndex idx, const Poly& c);
  /// Adds c * e^{i_1} ^ ... ^ e^{i_k} for an arbitrary index list, folding the
  /// permutation sign (repeated indices contribute nothing).
  void add_unsorted(std::span<const int> indices, const Poly& c);

  /// Applies f to every coefficient, dropping zeros.
  Form map_coefficients(const std::function<Poly(const Poly&)>& f) const;

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(const Rational& c);
  Form operator-() const;

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator*(Form a, const Rational& c) { return a *= c; }
  friend Form operator*(const Rational& c, Form a) { return a *= c; }
  friend Form operator*(const Poly& p, const Form& a);
  friend bool operator==(const Form& a, const Form& b);

  /// Compact human-readable rendering, e.g. "x0*e^{12} - 2*e^{03}".
  std::string to_string() const;

 private:
  void check_compatible(const Form& other) const;

  int n_ = 0;
  int k_ = 0;
  Terms terms_;
};

Form wedge(const Form& a, const Form& b);
Form exterior_d(const Form& a);
/// Hodge star for the flat metric with orientation e^0 ^ ... ^ e^{4n-1}.
Form hodge_star(const Form& a);

/// The constant 1-form e^i on R^{4n}.
Form one_form(int n, int i);
/// Constant basis form e^{i_1...i_k} from an index list (any order).
Form basis_form(int n, std::initializer_list<int> indices);

}  // namespace qdc
