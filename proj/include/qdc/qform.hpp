#pragma once

#include <array>

#include "qdc/form.hpp"

namespace qdc {

/// Quaternion units in the order 1, i, j, k.
enum QuaternionUnit { kOne = 0, kI = 1, kJ = 2, kK = 3 };

struct UnitProduct {
  int sign;
  int unit;
  friend bool operator==(const UnitProduct&, const UnitProduct&) = default;
};

/// u_a * u_b in the quaternions (ij = k, ji = -k, i^2 = -1, ...).
UnitProduct unit_product(int a, int b);

/// Quaternion-valued k-form α_0 + α_1 i + α_2 j + α_3 k.
class QForm {
 public:
  QForm() = default;
  QForm(int n, int k);
  QForm(Form c0, Form c1, Form c2, Form c3);
  /// a * u for a real form a.
  static QForm times_unit(const Form& a, int unit);

  int n() const { return n_; }
  int k() const { return k_; }
  const Form& operator[](int i) const { return components_[i]; }
  Form& operator[](int i) { return components_[i]; }
  const std::array<Form, 4>& components() const { return components_; }
  bool is_zero() const;

  QForm& operator+=(const QForm& other);
  QForm& operator-=(const QForm& other);
  QForm& operator*=(const Rational& c);
  friend QForm operator+(QForm a, const QForm& b) { return a += b; }
  friend QForm operator-(QForm a, const QForm& b) { return a -= b; }
  friend QForm operator*(QForm a, const Rational& c) { return a *= c; }
  friend bool operator==(const QForm& a, const QForm& b) = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  int k_ = 0;
  std::array<Form, 4> components_;
};

/// α · u: quaternion multiplication by a unit on the right. For u = i the
/// components become (-α_1, α_0, α_3, -α_2).
QForm right_multiply(const QForm& a, int unit);
/// u · α.
QForm left_multiply(int unit, const QForm& a);

/// Wedge of form parts combined with the quaternion product of the units.
QForm qwedge(const QForm& a, const QForm& b);

}  // namespace qdc
