#include "qdc/decomposition.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <tuple>

#include "qdc/errors.hpp"
#include "qdc/exterior_basis.hpp"

namespace qdc {

namespace {

long long binomial(int p, int q) {
  if (q < 0 || q > p) return 0;
  long long out = 1;
  for (int i = 1; i <= q; ++i) out = out * (p - q + i) / i;
  return out;
}

// Casimir restricted to one grading block, in local coordinates.
SparseMatrix local_block(const SparseMatrix& m, const std::vector<int>& positions) {
  std::map<int, int> local;
  for (int i = 0; i < static_cast<int>(positions.size()); ++i) local.emplace(positions[i], i);
  const int size = static_cast<int>(positions.size());
  SparseMatrix out(size, size);
  for (int j = 0; j < size; ++j) {
    SparseMatrix::Column col;
    for (const auto& [row, value] : m.column(positions[j])) {
      auto it = local.find(row);
      if (it == local.end()) throw InvariantViolation("Casimir does not preserve the block grading");
      col.emplace_back(it->second, value);
    }
    out.set_column(j, std::move(col));
  }
  return out;
}

// Weights that can occur in a grading block under the generators acting on
// `blocks`: a block of degree g carries weights up to min(g, 4 - g), all of
// the parity of the total degree seen by those generators.
std::vector<int> block_weights(const ExteriorBasis::Grading& g, BlockSet blocks) {
  int top = 0;
  int degree = 0;
  for (std::size_t a = 0; a < g.size(); ++a) {
    if ((blocks >> a) & 1u) {
      top += std::min(g[a], 4 - g[a]);
      degree += g[a];
    }
  }
  std::vector<int> out;
  for (int s = top; s >= 0; s -= 2) out.push_back(s);
  if (top % 2 != degree % 2) throw InvariantViolation("weight bound has the wrong parity");
  return out;
}

// Projector onto the -r(r+2) eigenspace of `c` (local block), given the
// candidate weights the block can carry.
Matrix block_projector(const SparseMatrix& c, int r, const std::vector<int>& weights) {
  const int size = c.rows();
  if (std::find(weights.begin(), weights.end(), r) == weights.end()) return Matrix(size, size);
  Matrix p = Matrix::identity(size);
  Rational denominator = 1;
  for (int s : weights) {
    if (s == r) continue;
    p = c.shifted(Rational(-casimir_eigenvalue(s))).apply(p);
    denominator *= Rational(casimir_eigenvalue(r) - casimir_eigenvalue(s));
  }
  // The minimal polynomial of c must divide the product over all weights.
  if (!c.shifted(Rational(-casimir_eigenvalue(r))).apply(p).is_zero()) {
    throw InvariantViolation("Casimir spectrum is not contained in the expected weight set");
  }
  p *= 1 / denominator;
  return p;
}

struct ProjectorEntry {
  SparseMatrix global;
  long long trace = 0;
  std::map<ExteriorBasis::Grading, Matrix> blocks;
};

const ProjectorEntry& projector_entry(int n, int k, int r, BlockSet blocks) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, BlockSet>, std::unique_ptr<ProjectorEntry>> cache;
  const auto key = std::make_tuple(n, k, r, blocks);
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  const ExteriorBasis& basis = ExteriorBasis::get(n, k);
  const SparseMatrix& c = casimir_matrix(n, k, blocks);
  auto entry = std::make_unique<ProjectorEntry>();
  entry->global = SparseMatrix(basis.size(), basis.size());
  std::vector<SparseMatrix::Column> columns(basis.size());
  for (const auto& [grading, positions] : basis.blocks()) {
    Matrix p = block_projector(local_block(c, positions), r, block_weights(grading, blocks));
    for (std::size_t j = 0; j < positions.size(); ++j) {
      for (std::size_t i = 0; i < positions.size(); ++i) {
        if (p(i, j) != 0) columns[positions[j]].emplace_back(positions[i], p(i, j));
      }
    }
    Rational trace = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) trace += p(j, j);
    if (trace.get_den() != 1) throw InvariantViolation("projector trace is not an integer");
    entry->trace += trace.get_num().get_si();
    if (trace != 0) entry->blocks[grading] = std::move(p);
  }
  for (int j = 0; j < basis.size(); ++j) entry->global.set_column(j, std::move(columns[j]));
  std::lock_guard lock(mutex);
  auto& slot = cache[key];
  if (!slot) slot = std::move(entry);
  return *slot;
}

}  // namespace

bool is_valid_node(int k, int r) { return k >= 0 && r >= 0 && r <= k && (k - r) % 2 == 0; }

void require_valid_node(int k, int r) {
  if (!is_valid_node(k, r)) {
    throw DomainError("invalid node (k=" + std::to_string(k) + ", r=" + std::to_string(r) + ")");
  }
}

long long binomial_half(int p, int twice_q) {
  if (twice_q % 2 != 0) return 0;
  return binomial(p, twice_q / 2);
}

long long weight_multiplicity(int n, int k, int r) {
  return binomial_half(2 * n, k + r) * binomial_half(2 * n, k - r);
}

long long epsilon(int n, int k, int r) {
  return weight_multiplicity(n, k, r) - weight_multiplicity(n, k, r + 2);
}

int max_weight(int n, int k) { return std::max(0, std::min(k, 4 * n - k)); }

std::vector<int> weights_in_degree(int n, int k) {
  std::vector<int> out;
  if (k < 0 || k > 4 * n) return out;
  for (int r = max_weight(n, k); r >= 0; --r) {
    if ((k - r) % 2 == 0) out.push_back(r);
  }
  return out;
}

const SparseMatrix& projector_matrix(int n, int k, int r, BlockSet blocks) {
  return projector_entry(n, k, r, blocks).global;
}

long long eigenspace_dim(int n, int k, int r, BlockSet blocks) { return projector_entry(n, k, r, blocks).trace; }

const SpaceBasis& eigenspace_basis(int n, int k, int r) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<SpaceBasis>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, k, r});
    if (it != cache.end()) return *it->second;
  }
  const ExteriorBasis& basis = ExteriorBasis::get(n, k);
  std::vector<Vector> coords;
  if (r >= 0 && (k - r) % 2 == 0) {
    const ProjectorEntry& entry = projector_entry(n, k, r, kAllBlocks);
    for (const auto& [grading, p] : entry.blocks) {
      const std::vector<int>& positions = basis.blocks().at(grading);
      for (const Vector& local : image_basis(p)) {
        Vector v(basis.size());
        for (std::size_t i = 0; i < positions.size(); ++i) v[positions[i]] = local[i];
        coords.push_back(std::move(v));
      }
    }
  }
  auto result = std::make_unique<SpaceBasis>(SpaceBasis::from_coords(n, k, coords));
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, k, r}];
  if (!slot) slot = std::move(result);
  return *slot;
}

SpaceBasis casimir_kernel_basis(int n, int k, int r) {
  const ExteriorBasis& basis = ExteriorBasis::get(n, k);
  const SparseMatrix& c = casimir_matrix(n, k);
  std::vector<Vector> coords;
  for (const auto& [grading, positions] : basis.blocks()) {
    const Matrix shifted = local_block(c, positions).shifted(Rational(-casimir_eigenvalue(r))).to_dense();
    for (const Vector& local : kernel_basis(shifted)) {
      Vector v(basis.size());
      for (std::size_t i = 0; i < positions.size(); ++i) v[positions[i]] = local[i];
      coords.push_back(std::move(v));
    }
  }
  return SpaceBasis::from_coords(n, k, coords);
}

Form project(const Form& a, int r, BlockSet blocks) {
  if (a.k() > a.dim() || r < 0) return Form(a.n(), a.k());
  return apply_coefficientwise(projector_matrix(a.n(), a.k(), r, blocks), a, a.k());
}

std::vector<int> clebsch_gordon(int m, int n) {
  if (m < 0 || n < 0) throw DomainError("negative highest weight");
  if (m < n) std::swap(m, n);
  std::vector<int> out;
  for (int w = m + n; w >= m - n; w -= 2) out.push_back(w);
  return out;
}

std::vector<DecompositionRow> decomposition_table(int n) {
  std::vector<DecompositionRow> rows;
  for (int k = 0; k <= 4 * n; ++k) {
    for (int r : weights_in_degree(n, k)) {
      const long long e = epsilon(n, k, r);
      rows.push_back({k, r, e, (r + 1) * e});
    }
  }
  return rows;
}

std::string decomposition_table_csv(const std::vector<DecompositionRow>& rows) {
  std::ostringstream os;
  os << "k,r,epsilon,dim\n";
  for (const auto& row : rows) os << row.k << ',' << row.r << ',' << row.epsilon << ',' << row.dim << '\n';
  return os.str();
}

}  // namespace qdc
