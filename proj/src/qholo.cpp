#include "qdc/qholo.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "qdc/decomposition.hpp"
#include "qdc/errors.hpp"
#include "qdc/exterior_basis.hpp"

namespace qdc {

namespace {

int unit_of(Generator g) { return static_cast<int>(g) + 1; }

SparseMatrix build_script_action(int n, int k, Generator g) {
  const int dim = ExteriorBasis::get(n, k).size();
  const SparseMatrix& a = action_matrix(n, k, g);
  SparseMatrix m(4 * dim, 4 * dim);
  for (int p = 0; p < 4; ++p) {
    // α_p u_p · u_g = sign u_q
    const UnitProduct prod = unit_product(p, unit_of(g));
    for (int j = 0; j < dim; ++j) {
      SparseMatrix::Column col;
      for (const auto& [row, c] : a.column(j)) col.emplace_back(p * dim + row, c);
      col.emplace_back(prod.unit * dim + j, Rational(-prod.sign));
      m.set_column(p * dim + j, std::move(col));
    }
  }
  return m;
}

template <typename Key, typename Build>
const SparseMatrix& cached(std::map<Key, SparseMatrix>& cache, std::mutex& mutex, const Key& key, Build&& build) {
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  SparseMatrix m = build();
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(m)).first->second;
}

}  // namespace

QForm qdifferential(const QFunction& f) {
  return QForm(exterior_d(Form::function(f.n, f.components[0])), exterior_d(Form::function(f.n, f.components[1])),
               exterior_d(Form::function(f.n, f.components[2])), exterior_d(Form::function(f.n, f.components[3])));
}

Form cauchy_riemann(const QFunction& f) {
  if (f.n < 1) throw DomainError("n must be positive");
  const QForm df = qdifferential(f);
  Form out = df[0];
  for (int j = 0; j < 3; ++j) out += act(kGenerators[j], df[j + 1]);
  return out;
}

bool is_q_holomorphic(const QFunction& f) { return cauchy_riemann(f).is_zero(); }

QForm script_act(Generator g, const QForm& a) {
  QForm out(act(g, a[0]), act(g, a[1]), act(g, a[2]), act(g, a[3]));
  out -= right_multiply(a, unit_of(g));
  return out;
}

QForm script_casimir(const QForm& a) {
  QForm out(a.n(), a.k());
  for (Generator g : kGenerators) out += script_act(g, script_act(g, a));
  return out;
}

const SparseMatrix& script_action_matrix(int n, int k, Generator g) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, SparseMatrix> cache;
  return cached(cache, mutex, std::make_tuple(n, k, static_cast<int>(g)), [&] { return build_script_action(n, k, g); });
}

const SparseMatrix& script_casimir_matrix(int n, int k) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, SparseMatrix> cache;
  return cached(cache, mutex, std::make_pair(n, k), [&] {
    const int dim = 4 * ExteriorBasis::get(n, k).size();
    SparseMatrix c(dim, dim);
    for (Generator g : kGenerators) {
      const SparseMatrix& s = script_action_matrix(n, k, g);
      c += s * s;
    }
    return c;
  });
}

std::vector<int> script_weights(int n, int k) {
  if (k < 0 || k > 4 * n) throw DomainError("degree out of range");
  std::vector<int> out;
  for (int s = max_weight(n, k) + 1; s >= 0; s -= 2) out.push_back(s);
  return out;
}

const SparseMatrix& script_projector(int n, int k, int s) {
  const std::vector<int> weights = script_weights(n, k);
  if (std::find(weights.begin(), weights.end(), s) == weights.end()) {
    throw DomainError("script weight " + std::to_string(s) + " does not occur in degree " + std::to_string(k));
  }
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, SparseMatrix> cache;
  return cached(cache, mutex, std::make_tuple(n, k, s), [&] {
    const SparseMatrix& c = script_casimir_matrix(n, k);
    SparseMatrix p = SparseMatrix::identity(c.rows());
    SparseMatrix annihilator = SparseMatrix::identity(c.rows());
    for (int t : weights) {
      const SparseMatrix factor = c.shifted(Rational(t * (t + 2)));
      annihilator = annihilator * factor;
      if (t == s) continue;
      p = p * factor;
      p *= Rational(1) / Rational(t * (t + 2) - s * (s + 2));
    }
    if (!annihilator.is_zero()) throw InvariantViolation("script Casimir has an unexpected eigenvalue");
    return p;
  });
}

Vector qform_coords(const QForm& a) {
  const ExteriorBasis& basis = ExteriorBasis::get(a.n(), a.k());
  Vector out;
  out.reserve(4 * basis.size());
  for (int p = 0; p < 4; ++p) {
    const Vector c = basis.coords(a[p]);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

QForm qform_from_coords(int n, int k, const Vector& coords) {
  const ExteriorBasis& basis = ExteriorBasis::get(n, k);
  const int dim = basis.size();
  if (static_cast<int>(coords.size()) != 4 * dim) throw DomainError("coordinate vector has the wrong length");
  QForm out(n, k);
  for (int p = 0; p < 4; ++p) out[p] = basis.form(Vector(coords.begin() + p * dim, coords.begin() + (p + 1) * dim));
  return out;
}

HqSplit hq_split(int n, int k, int r) {
  require_valid_node(k, r);
  if (n < 1 || k > 4 * n) throw DomainError("degree out of range");
  HqSplit out{n, k, r};
  const long long e = epsilon(n, k, r);
  out.predicted_upper = 2LL * (r + 2) * e;
  out.predicted_lower = 2LL * r * e;
  const SpaceBasis& base = eigenspace_basis(n, k, r);
  const int dim = ExteriorBasis::get(n, k).size();
  std::vector<Vector> columns;
  for (int p = 0; p < 4; ++p) {
    for (const Vector& v : base.coords()) {
      Vector c(4 * dim);
      std::copy(v.begin(), v.end(), c.begin() + p * dim);
      columns.push_back(std::move(c));
    }
  }
  out.total = static_cast<long long>(columns.size());
  const SparseMatrix& c = script_casimir_matrix(n, k);
  // Nullity of (C + λ) on the invariant subspace spanned by the columns.
  const auto nullity = [&](long lambda) {
    std::vector<Vector> images;
    for (const Vector& v : columns) {
      Vector w = c.apply(v);
      for (std::size_t i = 0; i < w.size(); ++i) w[i] += Rational(lambda) * v[i];
      images.push_back(std::move(w));
    }
    return out.total - static_cast<long long>(independent_subset(4 * dim, images).size());
  };
  out.upper = nullity(static_cast<long>(r + 1) * (r + 3));
  out.lower = r >= 1 ? nullity(static_cast<long>(r - 1) * (r + 1)) : 0;
  return out;
}

namespace {

// Flattens polynomial (quaternion-valued) forms into coordinate vectors over
// (unit, basis index, monomial), assigning indices on first sight.
class Flattener {
 public:
  std::map<std::tuple<int, std::uint64_t, std::vector<unsigned>>, int> index;

  std::vector<std::pair<int, Rational>> flatten(const QForm& a) {
    std::vector<std::pair<int, Rational>> out;
    for (int p = 0; p < 4; ++p) {
      for (const auto& [idx, poly] : a[p].terms()) {
        for (const auto& [mono, c] : poly.terms()) {
          auto key = std::make_tuple(p, idx.mask(), mono.padded(4 * a.n()));
          auto it = index.find(key);
          if (it == index.end()) it = index.emplace(key, static_cast<int>(index.size())).first;
          out.emplace_back(it->second, c);
        }
      }
    }
    return out;
  }
};

Matrix assemble(const std::vector<std::vector<std::pair<int, Rational>>>& columns, std::size_t rows) {
  Matrix m(std::max<std::size_t>(rows, 1), columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (const auto& [row, c] : columns[j]) m(row, j) += c;
  }
  return m;
}

}  // namespace

QholoEquivalence qholo_equivalence(int n, int max_degree) {
  if (n < 1 || max_degree < 0) throw DomainError("need n >= 1 and max_degree >= 0");
  QholoEquivalence out;
  out.n = n;
  out.max_degree = max_degree;
  Flattener cr_flat;
  Flattener v2_flat;
  std::vector<std::vector<std::pair<int, Rational>>> cr_columns;
  std::vector<std::vector<std::pair<int, Rational>>> v2_columns;
  for (int p = 0; p < 4; ++p) {
    for (int d = 0; d <= max_degree; ++d) {
      for (const Monomial& m : monomials_of_degree(4 * n, d)) {
        QFunction f{n, {}};
        f.components[p] = Poly::monomial(m);
        const Form residual = cauchy_riemann(f);
        cr_columns.push_back(cr_flat.flatten(QForm(residual, Form(n, 1), Form(n, 1), Form(n, 1))));
        const QForm df = qdifferential(f);
        v2_columns.push_back(v2_flat.flatten(script_casimir(df) + df * Rational(8)));
        ++out.functions;
      }
    }
  }
  const std::vector<Vector> cr_kernel = kernel_basis(assemble(cr_columns, cr_flat.index.size()));
  const std::vector<Vector> v2_kernel = kernel_basis(assemble(v2_columns, v2_flat.index.size()));
  out.cr_kernel = static_cast<int>(cr_kernel.size());
  out.v2_kernel = static_cast<int>(v2_kernel.size());
  out.same_kernel = same_span(static_cast<std::size_t>(out.functions), cr_kernel, v2_kernel);
  return out;
}

bool QholoEllipticityReport::all_exact() const {
  for (const QNodeVerdict& v : nodes) {
    if (!v.exact) return false;
  }
  return true;
}

namespace {

long long script_symbol_rank(int n, int k, int s) {
  if (k + 1 > 4 * n) return 0;
  const std::vector<int> next = script_weights(n, k + 1);
  if (std::find(next.begin(), next.end(), s + 1) == next.end()) return 0;
  const SparseMatrix& p = script_projector(n, k, s);
  const SparseMatrix& q = script_projector(n, k + 1, s + 1);
  const int dim = ExteriorBasis::get(n, k).size();
  const Form e0 = one_form(n, 0);
  const SparseMatrix w = operator_matrix(n, k, k + 1, [&](const Form& f) { return wedge(f, e0); });
  const int out_dim = ExteriorBasis::get(n, k + 1).size();
  SparseMatrix wedge4(4 * out_dim, 4 * dim);
  for (int u = 0; u < 4; ++u) {
    for (int j = 0; j < dim; ++j) {
      SparseMatrix::Column col;
      for (const auto& [row, c] : w.column(j)) col.emplace_back(u * out_dim + row, c);
      wedge4.set_column(u * dim + j, std::move(col));
    }
  }
  return static_cast<long long>(rank(q * wedge4 * p));
}

long long script_dim(int n, int k, int s) {
  const SparseMatrix& p = script_projector(n, k, s);
  return static_cast<long long>(rank(p));
}

}  // namespace

QholoEllipticityReport qholo_symbol_ellipticity(int n) {
  if (n < 1) throw DomainError("n must be positive");
  QholoEllipticityReport report;
  report.n = n;
  for (int k = 0; k <= 4 * n; ++k) {
    for (int s : script_weights(n, k)) {
      QNodeVerdict v{k, s};
      v.dim = script_dim(n, k, s);
      if (v.dim == 0) continue;
      const std::vector<int> previous = k >= 1 ? script_weights(n, k - 1) : std::vector<int>{};
      v.rank_in = std::find(previous.begin(), previous.end(), s - 1) != previous.end()
                      ? script_symbol_rank(n, k - 1, s - 1)
                      : 0;
      v.rank_out = script_symbol_rank(n, k, s);
      v.exact = v.dim - v.rank_out == v.rank_in;
      report.nodes.push_back(v);
    }
  }
  return report;
}

}  // namespace qdc
