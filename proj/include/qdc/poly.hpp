#pragma once

#include <map>
#include <vector>

#include "qdc/rational.hpp"

namespace qdc {

/// Exponent vector of a monomial. Trailing zeros are trimmed so that a
/// monomial has one representation regardless of the ambient variable count.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<unsigned> exps);

  static Monomial variable(int var, unsigned power = 1);

  unsigned exponent(int var) const {
    return var < static_cast<int>(exps_.size()) ? exps_[var] : 0u;
  }
  unsigned degree() const;
  /// Number of stored exponents (index of last nonzero + 1).
  int length() const { return static_cast<int>(exps_.size()); }
  const std::vector<unsigned>& exponents() const { return exps_; }
  /// Exponents padded with zeros to `nvars` entries.
  std::vector<unsigned> padded(int nvars) const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  void trim();
  std::vector<unsigned> exps_;
};

/// Graded-lexicographic term order: total degree, then larger leading
/// exponent first.
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with exact rational coefficients. No zero
/// coefficients are stored; the empty polynomial is zero.
class Poly {
 public:
  using Terms = std::map<Monomial, Rational, GradedLex>;

  Poly() = default;
  Poly(const Rational& c);  // NOLINT: constants convert implicitly
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT

  static Poly monomial(const Monomial& m, const Rational& c = 1);
  static Poly variable(int var) { return monomial(Monomial::variable(var)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  /// Largest variable index used + 1.
  int variable_span() const;

  void add_term(const Monomial& m, const Rational& c);

  Poly derivative(int var) const;

  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly& operator*=(const Rational& c);
  Poly operator-() const;

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
  friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }

 private:
  Terms terms_;
};

/// All monomials in `nvars` variables of total degree exactly `degree`.
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

}  // namespace qdc
