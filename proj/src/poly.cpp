#include "qdc/poly.hpp"

#include <algorithm>
#include <numeric>

namespace qdc {

Monomial::Monomial(std::vector<unsigned> exps) : exps_(std::move(exps)) { trim(); }

Monomial Monomial::variable(int var, unsigned power) {
  std::vector<unsigned> exps(var + 1, 0u);
  exps[var] = power;
  return Monomial(std::move(exps));
}

void Monomial::trim() {
  while (!exps_.empty() && exps_.back() == 0) exps_.pop_back();
}

unsigned Monomial::degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0u); }

std::vector<unsigned> Monomial::padded(int nvars) const {
  std::vector<unsigned> out(exps_);
  if (static_cast<int>(out.size()) < nvars) out.resize(nvars, 0u);
  return out;
}

Monomial Monomial::operator*(const Monomial& other) const {
  std::vector<unsigned> exps(std::max(exps_.size(), other.exps_.size()), 0u);
  for (std::size_t i = 0; i < exps_.size(); ++i) exps[i] += exps_[i];
  for (std::size_t i = 0; i < other.exps_.size(); ++i) exps[i] += other.exps_[i];
  return Monomial(std::move(exps));
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.degree();
  const unsigned db = b.degree();
  if (da != db) return da < db;
  const int len = std::max(a.length(), b.length());
  for (int v = 0; v < len; ++v) {
    const unsigned ea = a.exponent(v);
    const unsigned eb = b.exponent(v);
    if (ea != eb) return ea > eb;
  }
  return false;
}

Poly::Poly(const Rational& c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.length() == 0);
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly::degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.rbegin()->first.degree());
}

int Poly::variable_span() const {
  int span = 0;
  for (const auto& [m, c] : terms_) span = std::max(span, m.length());
  return span;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::derivative(int var) const {
  Poly out;
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(var);
    if (e == 0) continue;
    std::vector<unsigned> exps = m.exponents();
    exps[var] -= 1;
    out.add_term(Monomial(std::move(exps)), c * e);
  }
  return out;
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, value] : terms_) value *= c;
  return *this;
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& [m, value] : out.terms_) value = -value;
  return out;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

namespace {

void fill(int var, int nvars, int remaining, std::vector<unsigned>& exps, std::vector<Monomial>& out) {
  if (var == nvars - 1) {
    exps[var] = remaining;
    out.emplace_back(exps);
    exps[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    exps[var] = e;
    fill(var + 1, nvars, remaining - e, exps, out);
  }
  exps[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  std::vector<unsigned> exps(nvars, 0u);
  fill(0, nvars, degree, exps, out);
  return out;
}

}  // namespace qdc
