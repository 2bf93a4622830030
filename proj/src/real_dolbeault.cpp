#include "qdc/real_dolbeault.hpp"

#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <tuple>

#include "qdc/errors.hpp"
#include "qdc/exterior_basis.hpp"
#include "qdc/operators.hpp"
#include "qdc/sp1.hpp"

namespace qdc {

std::string U1Node::label() const {
  std::ostringstream os;
  os << (p == q ? "[L^{" : "[[L^{") << p << "," << q << (p == q ? "}]" : "}]]");
  return os.str();
}

namespace {

int max_u1_weight(int n, int k) { return std::max(0, std::min(k, 4 * n - k)); }

bool u1_weight_exists(int n, int k, int w) {
  return k >= 0 && k <= 4 * n && w >= 0 && w <= max_u1_weight(n, k) && (k - w) % 2 == 0;
}

void require_u1_weight(int n, int k, int w) {
  if (!u1_weight_exists(n, k, w)) {
    throw DomainError("no space [[L^{p,q}]] with p+q=" + std::to_string(k) + ", p-q=" + std::to_string(w));
  }
}

SparseMatrix build_u1_projector(int n, int k, int w) {
  const SparseMatrix& i = action_matrix(n, k, Generator::I);
  const SparseMatrix l = i * i;
  const int dim = ExteriorBasis::get(n, k).size();
  SparseMatrix p = SparseMatrix::identity(dim);
  SparseMatrix annihilator = SparseMatrix::identity(dim);
  for (int v = k % 2; v <= max_u1_weight(n, k); v += 2) {
    const SparseMatrix factor = l.shifted(Rational(v * v));
    annihilator = annihilator * factor;
    if (v == w) continue;
    p = p * factor;
    p *= Rational(1) / Rational(v * v - w * w);
  }
  if (!annihilator.is_zero()) throw InvariantViolation("-I^2 has an eigenvalue outside {w^2}");
  return p;
}

Vector symbol_image(int n, int k, int w_target, const Vector& coords) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, SparseMatrix> wedges;
  const SparseMatrix* wedge_e0;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = wedges.find({n, k});
    if (it == wedges.end()) {
      const Form e0 = one_form(n, 0);
      it = wedges.emplace(std::make_pair(n, k), operator_matrix(n, k, k + 1, [&](const Form& f) { return wedge(f, e0); }))
               .first;
    }
    wedge_e0 = &it->second;
  }
  return u1_projector(n, k + 1, w_target).apply(wedge_e0->apply(coords));
}

// Rank of α ↦ π_{w+1}(α ∧ e^0) on [[Λ^{p,q}]] → [[Λ^{p+1,q}]].
long long upward_symbol_rank(int n, const U1Node& node, std::vector<Vector>* images = nullptr) {
  const int k = node.k();
  if (node.p + 1 > 2 * n || k + 1 > 4 * n) return 0;
  const std::vector<U1Space> spaces = u1_decompose(n, k);
  const SpaceBasis& domain = spaces.at(static_cast<std::size_t>((max_u1_weight(n, k) - node.w()) / 2)).basis;
  std::vector<Vector> columns;
  for (const Vector& v : domain.coords()) columns.push_back(symbol_image(n, k, node.w() + 1, v));
  const long long rk = static_cast<long long>(independent_subset(ExteriorBasis::get(n, k + 1).size(), columns).size());
  if (images) *images = std::move(columns);
  return rk;
}

}  // namespace

const SparseMatrix& u1_projector(int n, int k, int w) {
  require_u1_weight(n, k, w);
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, SparseMatrix> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find({n, k, w});
  if (it == cache.end()) it = cache.emplace(std::make_tuple(n, k, w), build_u1_projector(n, k, w)).first;
  return it->second;
}

Form u1_project(const Form& a, int w) {
  if (!u1_weight_exists(a.n(), a.k(), w)) return Form(a.n(), a.k());
  return apply_coefficientwise(u1_projector(a.n(), a.k(), w), a, a.k());
}

std::vector<U1Space> u1_decompose(int n, int k) {
  if (n < 1) throw DomainError("n must be positive");
  if (k < 0 || k > 4 * n) throw DomainError("degree out of range");
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<U1Space>> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, k});
    if (it != cache.end()) return it->second;
  }
  std::vector<U1Space> out;
  for (int w = max_u1_weight(n, k); w >= 0; w -= 2) {
    const U1Node node{(k + w) / 2, (k - w) / 2};
    const SparseMatrix& p = u1_projector(n, k, w);
    out.push_back({node, SpaceBasis::from_coords(n, k, image_basis(p.to_dense()))});
  }
  std::lock_guard<std::mutex> lock(mutex);
  cache.emplace(std::make_pair(n, k), out);
  return out;
}

Form real_partial(const Form& a, int w) {
  require_u1_weight(a.n(), a.k(), w);
  if (u1_project(a, w) != a) throw DomainError("form is not a section of [[L^{p,q}]] with p-q=" + std::to_string(w));
  return u1_project(exterior_d(a), w + 1);
}

Form real_partial_bar(const Form& a, int w) {
  require_u1_weight(a.n(), a.k(), w);
  if (u1_project(a, w) != a) throw DomainError("form is not a section of [[L^{p,q}]] with p-q=" + std::to_string(w));
  if (w == 0) return Form(a.n(), a.k() + 1);
  return u1_project(exterior_d(a), w - 1);
}

RealDolbeaultIdentityReport verify_real_dolbeault_identities(int n, int max_degree, int trials, std::uint64_t seed) {
  if (n < 1) throw DomainError("n must be positive");
  if (max_degree < 0 || trials < 0) throw DomainError("degree and trial count must be non-negative");
  RealDolbeaultIdentityReport report{n, trials, seed, 0, {}};
  std::mt19937_64 rng(seed);
  for (int k = 0; k <= 4 * n; ++k) {
    for (int w = max_u1_weight(n, k); w >= 0; w -= 2) {
      for (int t = 0; t < trials; ++t) {
        Form a = u1_project(random_polynomial_form(rng, n, k, max_degree), w);
        if (a.is_zero()) continue;
        ++report.sections;
        const Form up = real_partial(a, w);
        const Form down = real_partial_bar(a, w);
        std::vector<std::string> failed;
        if (exterior_d(a) != up + down) failed.push_back("d != [del] + [delbar]");
        if (k + 1 <= 4 * n) {
          const bool has_up = u1_weight_exists(n, k + 1, w + 1);
          const bool has_down = w >= 1;
          if (has_up && !real_partial(up, w + 1).is_zero()) failed.push_back("[del]^2 != 0");
          if (has_down && !real_partial_bar(down, w - 1).is_zero()) failed.push_back("[delbar]^2 != 0");
          Form mixed(n, k + 2);
          if (has_up) mixed += real_partial_bar(up, w + 1);
          if (has_down) mixed += real_partial(down, w - 1);
          if (!mixed.is_zero()) failed.push_back("[del][delbar] + [delbar][del] != 0");
        }
        for (const std::string& what : failed) {
          report.violations.push_back("k=" + std::to_string(k) + " w=" + std::to_string(w) + ": " + what + " for " +
                                      a.to_string());
        }
      }
    }
  }
  return report;
}

bool real_dolbeault_predicted_exact(int p, int q) {
  if (q == 0) return p != 1;
  return p != q && p != q + 1;
}

bool RealDolbeaultReport::passed() const {
  for (const CounterexampleCheck& c : checks) {
    if (!c.passed) return false;
  }
  for (const U1Verdict& v : nodes) {
    if (!v.match()) return false;
  }
  return true;
}

RealDolbeaultReport real_dolbeault_report(int n) {
  if (n < 1) throw DomainError("n must be positive");
  RealDolbeaultReport report;
  report.n = n;

  for (int q = 0; q <= 2 * n; ++q) {
    long long rank_in = 0;
    for (int p = q; p <= 2 * n; ++p) {
      const U1Node node{p, q};
      U1Verdict v{q, p};
      v.dim = u1_decompose(n, node.k()).at(static_cast<std::size_t>((max_u1_weight(n, node.k()) - node.w()) / 2))
                  .basis.size();
      v.rank_in = rank_in;
      v.rank_out = upward_symbol_rank(n, node);
      v.exact = v.dim - v.rank_out == v.rank_in;
      v.predicted = real_dolbeault_predicted_exact(p, q);
      rank_in = v.rank_out;
      report.nodes.push_back(v);
    }
  }

  const Form e01 = basis_form(n, {0, 1});
  const bool e01_in = u1_project(e01, 0) == e01;
  const Form e01_image = u1_project(wedge(e01, one_form(n, 0)), 1);
  report.checks.push_back({"e^{01} in [L^{1,1}] with sigma_d(e^0) e^{01} = 0", e01_in && e01_image.is_zero(),
                           e01_in ? "e^{01} ^ e^0 = 0" : "e^{01} is not in [L^{1,1}]"});

  const Form e123 = basis_form(n, {1, 2, 3});
  const bool e123_in = u1_project(e123, 1) == e123;
  const bool closed = u1_project(wedge(e123, one_form(n, 0)), 2).is_zero();
  std::vector<Vector> images;
  upward_symbol_rank(n, U1Node{1, 1}, &images);
  const ExteriorBasis& three = ExteriorBasis::get(n, 3);
  const bool outside = !span_contains(three.size(), images, {three.coords(e123)});
  report.checks.push_back({"e^{123} in [[L^{2,1}]] is sigma-closed and not an image", e123_in && closed && outside,
                           std::string(e123_in ? "" : "not in [[L^{2,1}]]; ") + (closed ? "closed" : "not closed") +
                               (outside ? ", outside the image of [L^{1,1}]" : ", in the image")});

  bool leading_fails = false;
  bool high_exact = true;
  int high_nodes = 0;
  for (const U1Verdict& v : report.nodes) {
    if (v.q == 0 && v.p == 1) leading_fails = !v.exact;
    if (v.p >= v.q + 2) {
      ++high_nodes;
      high_exact = high_exact && v.exact;
    }
  }
  report.checks.push_back({"leading edge fails at [[L^{1,0}]]", leading_fails, "kernel larger than image of d"});
  report.checks.push_back({"exact at every [[L^{p,q}]] with p >= q+2", high_exact,
                           std::to_string(high_nodes) + " nodes checked"});
  return report;
}

}  // namespace qdc
