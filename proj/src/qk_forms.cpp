#include "qdc/qk_forms.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "qdc/errors.hpp"
#include "qdc/exterior_basis.hpp"

namespace qdc {

namespace {

Form omega_power(const Form& omega, int j) {
  Form out = Form::function(omega.n(), Poly(1));
  for (int i = 0; i < j; ++i) out = wedge(out, omega);
  return out;
}

const Form& fundamental_form(int n) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<Form>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    Form omega(n, 4);
    for (Generator g : kGenerators) {
      const Form w = kahler_form(n, g);
      omega += wedge(w, w);
    }
    slot = std::make_unique<Form>(std::move(omega));
  }
  return *slot;
}

void require_bonan_range(int n, int k) {
  if (k < 0 || k > 2 * n + 2) {
    throw DomainError("Kraines-Bonan decomposition needs k <= 2n + 2 (k=" + std::to_string(k) +
                      ", n=" + std::to_string(n) + ")");
  }
}

}  // namespace

Form kahler_form(int n, Generator g) {
  Form out(n, 2);
  for (int a = 0; a < n; ++a) {
    const int base = 4 * a;
    switch (g) {
      case Generator::I:
        out += basis_form(n, {base, base + 1}) + basis_form(n, {base + 2, base + 3});
        break;
      case Generator::J:
        out += basis_form(n, {base, base + 2}) - basis_form(n, {base + 1, base + 3});
        break;
      case Generator::K:
        out += basis_form(n, {base, base + 3}) + basis_form(n, {base + 1, base + 2});
        break;
    }
  }
  return out;
}

StructuralForms structural_forms(int n) {
  StructuralForms s;
  s.n = n;
  s.omega_I = kahler_form(n, Generator::I);
  s.omega_J = kahler_form(n, Generator::J);
  s.omega_K = kahler_form(n, Generator::K);
  s.Omega = fundamental_form(n);
  s.Psi = QForm::times_unit(s.omega_I, kI) + QForm::times_unit(s.omega_J, kJ) + QForm::times_unit(s.omega_K, kK);

  if (s.Omega != wedge(s.omega_I, s.omega_I) + wedge(s.omega_J, s.omega_J) + wedge(s.omega_K, s.omega_K)) {
    throw InvariantViolation("fundamental 4-form does not match its definition");
  }
  if (!casimir(s.Omega).is_zero()) throw InvariantViolation("fundamental 4-form is not Sp(1)-invariant");
  // The cross terms cancel (2-forms commute, distinct imaginary units
  // anticommute) and each unit squares to -1.
  const QForm square = qwedge(s.Psi, s.Psi);
  if (square != QForm::times_unit(-s.Omega, kOne)) throw InvariantViolation("Psi ^ Psi != -Omega");
  return s;
}

bool is_effective(const Form& mu) {
  require_bonan_range(mu.n(), mu.k());
  if (!mu.is_constant()) throw DomainError("effectiveness is defined here for constant forms");
  return wedge(fundamental_form(mu.n()), hodge_star(mu)).is_zero();
}

const SpaceBasis& effective_basis(int n, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<SpaceBasis>> cache;
  require_bonan_range(n, k);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, k});
    if (it != cache.end()) return *it->second;
  }
  const Form& omega = fundamental_form(n);
  const int target = 4 * n - k + 4;
  std::unique_ptr<SpaceBasis> result;
  if (target > 4 * n) {
    result = std::make_unique<SpaceBasis>(SpaceBasis::whole(n, k));
  } else {
    const SparseMatrix m =
        operator_matrix(n, k, target, [&](const Form& f) { return wedge(omega, hodge_star(f)); });
    result = std::make_unique<SpaceBasis>(SpaceBasis::from_coords(n, k, kernel_basis(m.to_dense())));
  }
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, k}];
  if (!slot) slot = std::move(result);
  return *slot;
}

std::size_t BonanSystemReport::stacked_columns() const {
  std::size_t total = 0;
  for (int d : effective_dims) total += d;
  return total;
}

namespace {

struct StackedSystem {
  std::vector<Vector> columns;
  std::vector<std::pair<int, int>> origin;  // (j, index into effective basis)
};

StackedSystem stacked_system(int n, int k) {
  const Form& omega = fundamental_form(n);
  const ExteriorBasis& ambient = ExteriorBasis::get(n, k);
  StackedSystem sys;
  for (int j = 0; 4 * j <= k; ++j) {
    const Form power = omega_power(omega, j);
    const SpaceBasis& eff = effective_basis(n, k - 4 * j);
    for (int i = 0; i < eff.size(); ++i) {
      const Form v = wedge(power, eff[i]);
      sys.columns.push_back(v.is_zero() ? Vector(ambient.size()) : ambient.coords(v));
      sys.origin.emplace_back(j, i);
    }
  }
  return sys;
}

}  // namespace

BonanSystemReport kraines_bonan_system(int n, int k) {
  require_bonan_range(n, k);
  BonanSystemReport report{n, k, ExteriorBasis::get(n, k).size(), {}, 0};
  for (int j = 0; 4 * j <= k; ++j) report.effective_dims.push_back(effective_basis(n, k - 4 * j).size());
  const StackedSystem sys = stacked_system(n, k);
  report.stacked_rank =
      sys.columns.empty() ? 0 : static_cast<int>(rank(Matrix::from_columns(report.ambient, sys.columns)));
  return report;
}

std::vector<BonanPart> kraines_bonan_decompose(const Form& phi) {
  const int n = phi.n();
  const int k = phi.k();
  require_bonan_range(n, k);
  if (!phi.is_constant()) throw DomainError("Kraines-Bonan decomposition needs constant coefficients");
  const ExteriorBasis& ambient = ExteriorBasis::get(n, k);
  const StackedSystem sys = stacked_system(n, k);
  const Matrix a = Matrix::from_columns(ambient.size(), sys.columns);
  if (rank(a) != sys.columns.size()) throw InvariantViolation("Kraines-Bonan system is not of full column rank");
  const SpanSolution sol = solve_in_span(a, Matrix::from_columns(ambient.size(), {ambient.coords(phi)}));
  if (!sol.ok) throw InvariantViolation("form is outside the span of the Kraines-Bonan summands");
  std::vector<BonanPart> parts;
  for (int j = 0; 4 * j <= k; ++j) parts.push_back({j, Form(n, k - 4 * j)});
  for (std::size_t c = 0; c < sys.columns.size(); ++c) {
    const auto [j, i] = sys.origin[c];
    const Rational& coeff = sol.coefficients(c, 0);
    if (coeff != 0) parts[j].mu += effective_basis(n, k - 4 * j)[i] * coeff;
  }
  return parts;
}

Form kraines_bonan_recompose(int n, int k, const std::vector<BonanPart>& parts) {
  const Form& omega = fundamental_form(n);
  Form out(n, k);
  for (const BonanPart& part : parts) {
    if (part.mu.k() + 4 * part.j != k) throw InputError("Kraines-Bonan part has the wrong degree");
    out += wedge(omega_power(omega, part.j), part.mu);
  }
  return out;
}

SpaceBasis real_holomorphic_part(int n, int k, const Rational& a, const Rational& b, const Rational& c) {
  if (a * a + b * b + c * c != 1) throw DomainError("complex structure coefficients must lie on the unit sphere");
  const SparseMatrix l = combined_action_matrix(n, k, a, b, c);
  const SparseMatrix op = (l * l).shifted(Rational(k * k));
  return SpaceBasis::from_coords(n, k, kernel_basis(op.to_dense()));
}

std::vector<std::array<Rational, 3>> sphere_sample_points() {
  auto q = [](int p, int d) { return Rational(p, d); };
  return {
      {q(1, 1), q(0, 1), q(0, 1)},  {q(0, 1), q(1, 1), q(0, 1)},  {q(0, 1), q(0, 1), q(1, 1)},
      {q(3, 5), q(4, 5), q(0, 1)},  {q(0, 1), q(3, 5), q(4, 5)},  {q(4, 5), q(0, 1), q(3, 5)},
      {q(2, 3), q(2, 3), q(1, 3)},  {q(2, 3), q(1, 3), q(2, 3)},  {q(1, 3), q(2, 3), q(2, 3)},
      {q(-2, 3), q(2, 3), q(1, 3)}, {q(2, 7), q(3, 7), q(6, 7)},  {q(6, 7), q(-2, 7), q(3, 7)},
  };
}

}  // namespace qdc
