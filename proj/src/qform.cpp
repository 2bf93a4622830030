#include "qdc/qform.hpp"

#include "qdc/errors.hpp"

namespace qdc {

namespace {

constexpr UnitProduct kProducts[4][4] = {
    {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
    {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
    {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
};

void check_unit(int u) {
  if (u < 0 || u > 3) throw DomainError("quaternion unit out of range");
}

}  // namespace

UnitProduct unit_product(int a, int b) {
  check_unit(a);
  check_unit(b);
  return kProducts[a][b];
}

QForm::QForm(int n, int k) : n_(n), k_(k) {
  for (Form& c : components_) c = Form(n, k);
}

QForm::QForm(Form c0, Form c1, Form c2, Form c3)
    : n_(c0.n()), k_(c0.k()), components_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {
  for (const Form& c : components_) {
    if (c.n() != n_ || c.k() != k_) throw InputError("quaternion form components differ in (n, k)");
  }
}

QForm QForm::times_unit(const Form& a, int unit) {
  check_unit(unit);
  QForm out(a.n(), a.k());
  out.components_[unit] = a;
  return out;
}

bool QForm::is_zero() const {
  for (const Form& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

QForm& QForm::operator+=(const QForm& other) {
  for (int i = 0; i < 4; ++i) components_[i] += other.components_[i];
  return *this;
}

QForm& QForm::operator-=(const QForm& other) {
  for (int i = 0; i < 4; ++i) components_[i] -= other.components_[i];
  return *this;
}

QForm& QForm::operator*=(const Rational& c) {
  for (Form& f : components_) f *= c;
  return *this;
}

std::string QForm::to_string() const {
  static const char* kNames[] = {"", "i", "j", "k"};
  std::string out;
  for (int u = 0; u < 4; ++u) {
    if (components_[u].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + components_[u].to_string() + ")" + kNames[u];
  }
  return out.empty() ? "0" : out;
}

QForm right_multiply(const QForm& a, int unit) {
  QForm out(a.n(), a.k());
  for (int p = 0; p < 4; ++p) {
    const UnitProduct prod = unit_product(p, unit);
    out[prod.unit] += prod.sign > 0 ? a[p] : -a[p];
  }
  return out;
}

QForm left_multiply(int unit, const QForm& a) {
  QForm out(a.n(), a.k());
  for (int p = 0; p < 4; ++p) {
    const UnitProduct prod = unit_product(unit, p);
    out[prod.unit] += prod.sign > 0 ? a[p] : -a[p];
  }
  return out;
}

QForm qwedge(const QForm& a, const QForm& b) {
  QForm out(a.n(), a.k() + b.k());
  for (int p = 0; p < 4; ++p) {
    if (a[p].is_zero()) continue;
    for (int q = 0; q < 4; ++q) {
      if (b[q].is_zero()) continue;
      const UnitProduct prod = unit_product(p, q);
      const Form w = wedge(a[p], b[q]);
      out[prod.unit] += prod.sign > 0 ? w : -w;
    }
  }
  return out;
}

}  // namespace qdc
