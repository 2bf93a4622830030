#include "qdc/symbol.hpp"

#include <map>
#include <sstream>

#include "qdc/errors.hpp"
#include "qdc/exterior_basis.hpp"
#include "qdc/sp1.hpp"

namespace qdc {

namespace {

void require_constant(const Form& a) {
  if (!a.is_constant()) throw DomainError("symbol maps act on constant forms");
}

bool in_eigenspace(const Form& a, int r) {
  if (a.k() > a.dim()) return a.is_zero();
  return project(a, r) == a;
}

ExteriorBasis::Grading grading_of_form(const Form& a) {
  return ExteriorBasis::get(a.n(), a.k()).grading_of(a.terms().begin()->first);
}

// Independent subset of `forms` (constant k-forms, each homogeneous in the
// block grading), computed grading block by grading block.
SpaceBasis independent_by_grading(int n, int k, const std::vector<Form>& forms) {
  const ExteriorBasis& basis = ExteriorBasis::get(n, k);
  std::map<ExteriorBasis::Grading, std::vector<Vector>> groups;
  for (const Form& f : forms) {
    if (f.is_zero()) continue;
    groups[grading_of_form(f)].push_back(basis.coords(f));
  }
  std::vector<Vector> out;
  for (auto& [grading, vectors] : groups) {
    const std::vector<int>& positions = basis.blocks().at(grading);
    std::vector<Vector> restricted;
    for (const Vector& v : vectors) {
      Vector w;
      w.reserve(positions.size());
      for (int p : positions) w.push_back(v[p]);
      restricted.push_back(std::move(w));
    }
    for (std::size_t i : independent_subset(positions.size(), restricted)) out.push_back(vectors[i]);
  }
  return SpaceBasis::from_coords(n, k, out);
}

const SparseMatrix& wedge_matrix(int n, int k, const Covector& xi) {
  static std::map<std::pair<std::pair<int, int>, std::vector<Rational>>, SparseMatrix> cache;
  auto key = std::make_pair(std::make_pair(n, k), xi);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const Form x = covector_form(n, xi);
  return cache.emplace(key, operator_matrix(n, k, k + 1, [&](const Form& f) { return wedge(f, x); })).first->second;
}

// Coordinates in Λ^{k+1} of π_{k+1,r+1}(v ∧ ξ) for each vector of the domain.
SparseMatrix symbol_columns(const SpaceBasis& domain, int r, const Covector& xi) {
  const int n = domain.n();
  const int k = domain.k();
  const int rows = ExteriorBasis::get(n, k + 1).size();
  SparseMatrix m(rows, domain.size());
  if (k + 1 > 4 * n || domain.empty()) return m;
  const SparseMatrix& w = wedge_matrix(n, k, xi);
  const SparseMatrix& p = projector_matrix(n, k + 1, r + 1);
  for (int j = 0; j < domain.size(); ++j) {
    const Vector image = p.apply(w.apply(domain.coords()[j]));
    SparseMatrix::Column col;
    for (int i = 0; i < rows; ++i) {
      if (image[i] != 0) col.emplace_back(i, image[i]);
    }
    m.set_column(j, std::move(col));
  }
  return m;
}

}  // namespace

Covector parse_covector(std::string_view text, int n) {
  if (n < 1) throw InputError("n must be positive");
  Covector xi;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw InputError("empty entry in covector");
    xi.push_back(parse_rational(item));
    start = end + 1;
  }
  if (static_cast<int>(xi.size()) != 4 * n) {
    throw InputError("covector needs " + std::to_string(4 * n) + " entries, got " + std::to_string(xi.size()));
  }
  bool nonzero = false;
  for (const Rational& c : xi) nonzero = nonzero || c != 0;
  if (!nonzero) throw InputError("covector must be nonzero");
  return xi;
}

Covector basis_covector(int n, int i) {
  Covector xi(4 * n);
  xi.at(i) = 1;
  return xi;
}

Form covector_form(int n, const Covector& xi) {
  if (static_cast<int>(xi.size()) != 4 * n) throw DomainError("covector length must be 4n");
  Form f(n, 1);
  for (int i = 0; i < 4 * n; ++i) {
    if (xi[i] != 0) f.add_term(MultiIndex{i}, Poly(xi[i]));
  }
  return f;
}

Form symbol_up(const Form& alpha, int r) {
  require_constant(alpha);
  require_valid_node(alpha.k(), r);
  if (!in_eigenspace(alpha, r)) throw DomainError("form is not in E_{k,r}");
  const int n = alpha.n();
  Form out = wedge(alpha, one_form(n, 0)) * Rational(r + 2);
  for (int j = 0; j < 3; ++j) out -= wedge(act(kGenerators[j], alpha), one_form(n, j + 1));
  out *= Rational(1, 2 * (r + 1));
  if (!in_eigenspace(out, r + 1)) throw InvariantViolation("symbol image left E_{k+1,r+1}");
  return out;
}

Form symbol_projected(const Form& alpha, int r, const Covector& xi) {
  require_constant(alpha);
  require_valid_node(alpha.k(), r);
  if (!in_eigenspace(alpha, r)) throw DomainError("form is not in E_{k,r}");
  const Form w = wedge(alpha, covector_form(alpha.n(), xi));
  if (w.k() > w.dim()) return w;
  return project(w, r + 1);
}

std::string FineNode::label() const {
  std::ostringstream os;
  os << "E^{" << l << "," << m;
  if (sign > 0) os << "+";
  if (sign < 0) os << "-";
  os << "}_{" << k << "," << r << "}";
  return os.str();
}

bool is_admissible(const FineNode& node) {
  if (!is_valid_node(node.k, node.r) || node.l < 0 || node.l > 4 || node.m < 0) return false;
  const int d = node.m - node.r;
  bool ok = false;
  switch (node.l) {
    case 0:
    case 4:
      ok = d == 0;
      break;
    case 1:
    case 3:
      ok = d == 1 || d == -1;
      break;
    case 2:
      ok = d == 2 || d == 0 || d == -2;
      break;
  }
  if (!ok) return false;
  if (node.sign != 0) return node.l == 2 && d == 0 && (node.sign == 1 || node.sign == -1);
  return true;
}

std::vector<FineNode> fine_nodes(int k, int r) {
  require_valid_node(k, r);
  std::vector<FineNode> out;
  const auto add = [&](int l, int m, int sign) {
    const FineNode node{k, r, l, m, sign};
    if (k - l >= m && is_admissible(node)) out.push_back(node);
  };
  add(0, r, 0);
  add(1, r + 1, 0);
  add(1, r - 1, 0);
  add(2, r + 2, 0);
  add(2, r, 1);
  add(2, r, -1);
  add(2, r - 2, 0);
  add(3, r + 1, 0);
  add(3, r - 1, 0);
  add(4, r, 0);
  return out;
}

Form star_block_zero(const Form& a) {
  require_constant(a);
  if (a.is_zero()) return a;
  const int d = block_zero_degree(a);
  if (d < 0) throw DomainError("star on H_0 needs a fixed number of H_0 differentials");
  const std::uint64_t block0 = 0xF;
  Form out(a.n(), a.k() + 4 - 2 * d);
  for (const auto& [idx, c] : a.terms()) {
    const MultiIndex inner = MultiIndex::from_mask(idx.mask() & block0);
    const MultiIndex complement = MultiIndex::from_mask(block0 & ~idx.mask());
    const std::uint64_t outer = idx.mask() & ~block0;
    out.add_term(MultiIndex::from_mask(complement.mask() | outer), c * Rational(merge_sign(inner, complement)));
  }
  return out;
}

int block_zero_degree(const Form& a) {
  int degree = -1;
  for (const auto& [idx, c] : a.terms()) {
    const int d = __builtin_popcountll(idx.mask() & 0xF);
    if (degree >= 0 && d != degree) return -1;
    degree = d;
  }
  return degree;
}

SpaceBasis fine_space_basis(int n, const FineNode& node) {
  if (!is_admissible(node)) throw DomainError("inadmissible fine node " + node.label());
  if (n < 1) throw DomainError("n must be positive");
  if (node.k > 4 * n || node.k - node.l > 4 * (n - 1)) return SpaceBasis(n, node.k, {});
  const ExteriorBasis& basis = ExteriorBasis::get(n, node.k);
  const SparseMatrix& partial = projector_matrix(n, node.k, node.m, kOffBlockZero);
  std::vector<Form> candidates;
  for (const Form& v : eigenspace_basis(n, node.k, node.r).vectors()) {
    if (block_zero_degree(v) != node.l) continue;
    Form w = basis.form(partial.apply(basis.coords(v)));
    if (node.sign != 0) {
      w += star_block_zero(w) * Rational(node.sign);
      w *= Rational(1, 2);
    }
    candidates.push_back(std::move(w));
  }
  return independent_by_grading(n, node.k, candidates);
}

long long fine_dimension_formula(int n, const FineNode& node) {
  if (!is_admissible(node)) throw DomainError("inadmissible fine node " + node.label());
  if (n < 1) throw DomainError("n must be positive");
  const int base_k = node.k - node.l;
  const long long e = base_k < node.m ? 0 : epsilon(n - 1, base_k, node.m);
  const long long r1 = node.r + 1;
  switch (node.l) {
    case 0:
    case 4:
      return r1 * e;
    case 1:
    case 3:
      return 2 * r1 * e;
    default:
      if (node.m != node.r) return r1 * e;
      if (node.sign > 0) return node.r >= 1 ? r1 * e : 0;
      if (node.sign < 0) return 3 * r1 * e;
      return (node.r >= 1 ? 4 : 3) * r1 * e;
  }
}

std::string_view name(LieInCase c) {
  switch (c) {
    case LieInCase::one_up:
      return "one_up";
    case LieInCase::one_down:
      return "one_down";
    case LieInCase::two_up:
      return "two_up";
    case LieInCase::two_mid:
      return "two_mid";
    case LieInCase::two_down:
      return "two_down";
  }
  return "?";
}

LieInCase parse_lie_in_case(std::string_view text) {
  for (LieInCase c : {LieInCase::one_up, LieInCase::one_down, LieInCase::two_up, LieInCase::two_mid,
                      LieInCase::two_down}) {
    if (name(c) == text) return c;
  }
  throw InputError("unknown lie in case '" + std::string(text) + "'");
}

Rational lie_in_coefficient(LieInCase c, int r) {
  switch (c) {
    case LieInCase::one_up:
      return r;
    case LieInCase::one_down:
      return r + 2;
    case LieInCase::two_up:
      return -r;
    case LieInCase::two_mid:
      return 2;
    case LieInCase::two_down:
      return r + 2;
  }
  return 0;
}

namespace {

// One term coeff * g(x_var) of a lie in equation; g = -1 is the identity.
struct EquationTerm {
  int sign;
  int generator;
  int var;
};

// Non-scalar parts of the four one_* equations, in the order of the
// equations; the scalar term c * α_j sits on the diagonal.
const std::vector<std::vector<EquationTerm>>& one_up_terms() {
  static const std::vector<std::vector<EquationTerm>> terms = {
      {{-1, 0, 1}, {-1, 1, 2}, {-1, 2, 3}},
      {{1, 0, 0}, {1, 1, 3}, {-1, 2, 2}},
      {{-1, 0, 3}, {1, 1, 0}, {1, 2, 1}},
      {{1, 0, 2}, {-1, 1, 1}, {1, 2, 0}},
  };
  return terms;
}

// c β_j = (g β_a - h β_b) written as c β_j - g β_a + h β_b = 0.
const std::vector<std::vector<EquationTerm>>& two_terms() {
  static const std::vector<std::vector<EquationTerm>> terms = {
      {{-1, 1, 2}, {1, 2, 1}},
      {{-1, 2, 0}, {1, 0, 2}},
      {{-1, 0, 1}, {1, 1, 0}},
  };
  return terms;
}

std::vector<Form> frame(int n, LieInCase c, int l) {
  std::vector<Form> out;
  const auto make = [&](std::initializer_list<int> indices) {
    Form f(n, static_cast<int>(indices.size()));
    f.add_unsorted(std::span<const int>(indices.begin(), indices.size()), Poly(1));
    return f;
  };
  if (c == LieInCase::one_up || c == LieInCase::one_down) {
    if (l == 1) {
      for (int j = 0; j < 4; ++j) out.push_back(one_form(n, j));
    } else {
      out = {make({1, 2, 3}), make({0, 3, 2}), make({0, 1, 3}), make({0, 2, 1})};
    }
  } else {
    out = {make({0, 1}) + make({2, 3}), make({0, 2}) + make({3, 1}), make({0, 3}) + make({1, 2})};
  }
  return out;
}

}  // namespace

LieInSolution lie_in_solution_space_with(int n, int k, int r, LieInCase c, int l, const Rational& coefficient) {
  if (n < 2) throw DomainError("lie in conditions need n >= 2");
  require_valid_node(k, r);
  const bool one = c == LieInCase::one_up || c == LieInCase::one_down;
  if (one ? (l != 1 && l != 3) : l != 2) throw DomainError("frame degree does not match the lie in case");
  if (k > 4 * (n - 1)) throw DomainError("base degree exceeds 4(n-1)");

  LieInSolution s{c, k, r, l, {}, {}, {}, {}};
  std::vector<Form> base;
  for (const Form& v : eigenspace_basis(n, k, r).vectors()) {
    if (block_zero_degree(v) == 0) base.push_back(v);
  }
  s.base = SpaceBasis(n, k, base);

  const int arity = one ? 4 : 3;
  const int ambient = ExteriorBasis::get(n, k).size();
  const int b = s.base.size();
  std::vector<std::vector<EquationTerm>> equations = one ? one_up_terms() : two_terms();
  if (c == LieInCase::one_down) {
    for (auto& eq : equations) {
      for (EquationTerm& t : eq) t.sign = -t.sign;
    }
  }
  // Columns: (var, base vector); rows: (equation, ambient coordinate).
  std::vector<std::array<Vector, 3>> acted(b);
  for (int i = 0; i < b; ++i) {
    for (int g = 0; g < 3; ++g) acted[i][g] = action_matrix(n, k, kGenerators[g]).apply(s.base.coords()[i]);
  }
  Matrix system(static_cast<std::size_t>(arity) * ambient, static_cast<std::size_t>(arity) * b);
  for (int e = 0; e < arity; ++e) {
    for (int i = 0; i < b; ++i) {
      for (int p = 0; p < ambient; ++p) system(e * ambient + p, e * b + i) += coefficient * s.base.coords()[i][p];
    }
    for (const EquationTerm& t : equations[e]) {
      for (int i = 0; i < b; ++i) {
        for (int p = 0; p < ambient; ++p) {
          system(e * ambient + p, t.var * b + i) += Rational(t.sign) * acted[i][t.generator][p];
        }
      }
    }
  }

  const std::vector<Form> f = frame(n, c, l);
  std::vector<Form> forms;
  for (const Vector& x : kernel_basis(system)) {
    Vector tuple(static_cast<std::size_t>(arity) * ambient);
    Form assembled(n, k + l);
    for (int v = 0; v < arity; ++v) {
      Form component(n, k);
      for (int i = 0; i < b; ++i) {
        if (x[v * b + i] == 0) continue;
        component += s.base[i] * x[v * b + i];
        for (int p = 0; p < ambient; ++p) tuple[v * ambient + p] += x[v * b + i] * s.base.coords()[i][p];
      }
      assembled += wedge(component, f[v]);
    }
    s.tuples.push_back(std::move(tuple));
    forms.push_back(std::move(assembled));
  }
  s.forms = SpaceBasis(n, k + l, forms);

  switch (c) {
    case LieInCase::one_up:
      s.target = {k + l, r + 1, l, r, 0};
      break;
    case LieInCase::one_down:
      s.target = {k + l, r - 1, l, r, 0};
      break;
    case LieInCase::two_up:
      s.target = {k + 2, r + 2, 2, r, 0};
      break;
    case LieInCase::two_mid:
      s.target = {k + 2, r, 2, r, 1};
      break;
    case LieInCase::two_down:
      s.target = {k + 2, r - 2, 2, r, 0};
      break;
  }
  return s;
}

LieInSolution lie_in_solution_space(int n, int k, int r, LieInCase c, int l) {
  return lie_in_solution_space_with(n, k, r, c, l, lie_in_coefficient(c, r));
}

std::vector<Vector> two_mid_generated_tuples(const LieInSolution& s) {
  const int n = s.base.n();
  const int ambient = ExteriorBasis::get(n, s.k).size();
  std::vector<Vector> out;
  for (const Vector& v : s.base.coords()) {
    Vector tuple;
    tuple.reserve(3 * ambient);
    for (Generator g : kGenerators) {
      const Vector w = action_matrix(n, s.k, g).apply(v);
      tuple.insert(tuple.end(), w.begin(), w.end());
    }
    out.push_back(std::move(tuple));
  }
  return out;
}

long long symbol_rank_on(const SpaceBasis& domain, int r, const std::optional<Covector>& xi) {
  const Covector direction = xi ? *xi : basis_covector(domain.n(), 0);
  return static_cast<long long>(rank(symbol_columns(domain, r, direction)));
}

long long symbol_rank(int n, int k, int r, const std::optional<Covector>& xi) {
  if (k < 0 || r < 0 || k > 4 * n || !is_valid_node(k, r)) return 0;
  return symbol_rank_on(eigenspace_basis(n, k, r), r, xi);
}

bool fine_space_contains(int n, const FineNode& node, const Form& f) {
  if (f.is_zero()) return true;
  if (f.k() != node.k || f.k() > 4 * n || block_zero_degree(f) != node.l) return false;
  if (!in_eigenspace(f, node.r)) return false;
  if (project(f, node.m, kOffBlockZero) != f) return false;
  if (node.sign != 0 && star_block_zero(f) != f * Rational(node.sign)) return false;
  return true;
}

namespace {

FineNode optional_node(int k, int r, int l, int m, int sign = 0) { return {k, r, l, m, sign}; }

bool node_exists(const FineNode& node) {
  return node.k >= 0 && node.r >= 0 && node.m >= 0 && is_admissible(node);
}

SpaceBasis fine_or_zero(int n, const FineNode& node) {
  if (!node_exists(node)) return SpaceBasis(n, std::max(node.k, 0), {});
  return fine_space_basis(n, node);
}

}  // namespace

FiveSequenceReport five_sequence_report(int n, int k, int r) {
  if (n < 2) throw DomainError("the fine sequences need n >= 2");
  require_valid_node(k, r);
  if (k < 2) throw DomainError("the fine sequences need k >= 2");
  if (k + 2 > 4 * n) throw DomainError("degree k + 2 exceeds 4n");

  FiveSequenceReport report{n, k, r, {}};
  struct Shape {
    const char* name;
    std::array<FineNode, 3> nodes;
  };
  const std::array<Shape, 3> shapes = {{
      {"top", {optional_node(k, r, 2, r + 2), optional_node(k + 1, r + 1, 3, r + 2),
               optional_node(k + 2, r + 2, 4, r + 2)}},
      {"middle", {optional_node(k - 1, r - 1, 1, r), optional_node(k, r, 2, r, 0),
                  optional_node(k + 1, r + 1, 3, r)}},
      {"bottom", {optional_node(k - 2, r - 2, 0, r - 2), optional_node(k - 1, r - 1, 1, r - 2),
                  optional_node(k, r, 2, r - 2)}},
  }};
  for (const Shape& shape : shapes) {
    ShortSequence seq;
    seq.name = shape.name;
    seq.nodes = shape.nodes;
    std::array<SpaceBasis, 3> spaces;
    for (int i = 0; i < 3; ++i) {
      spaces[i] = fine_or_zero(n, shape.nodes[i]);
      seq.dims[i] = spaces[i].size();
    }
    const Covector e0 = basis_covector(n, 0);
    std::array<SparseMatrix, 2> maps;
    for (int i = 0; i < 2; ++i) {
      if (spaces[i].empty()) continue;
      maps[i] = symbol_columns(spaces[i], shape.nodes[i].r, e0);
      const ExteriorBasis& cod = ExteriorBasis::get(n, spaces[i].k() + 1);
      for (int j = 0; j < maps[i].cols() && seq.well_defined; ++j) {
        Vector v(cod.size());
        for (const auto& [row, c] : maps[i].column(j)) v[row] = c;
        const Form image = cod.form(v);
        const FineNode& target = shape.nodes[i + 1];
        seq.well_defined = node_exists(target) ? fine_space_contains(n, target, image) : image.is_zero();
      }
    }
    seq.rank_ab = spaces[0].empty() ? 0 : static_cast<long long>(rank(maps[0]));
    seq.rank_bc = spaces[1].empty() ? 0 : static_cast<long long>(rank(maps[1]));
    // σ∘σ on A: apply σ to the images of A.
    if (!spaces[0].empty() && !spaces[1].empty()) {
      const ExteriorBasis& mid = ExteriorBasis::get(n, spaces[0].k() + 1);
      std::vector<Form> images;
      for (int j = 0; j < maps[0].cols(); ++j) {
        Vector v(mid.size());
        for (const auto& [row, c] : maps[0].column(j)) v[row] = c;
        images.push_back(mid.form(v));
      }
      const SpaceBasis image_space(n, spaces[0].k() + 1, images);
      if (rank(symbol_columns(image_space, shape.nodes[1].r, e0)) != 0) seq.well_defined = false;
    }
    seq.exact_at[0] = seq.rank_ab == seq.dims[0];
    seq.exact_at[1] = seq.dims[1] - seq.rank_bc == seq.rank_ab;
    seq.exact_at[2] = seq.rank_bc == seq.dims[2];
    report.sequences.push_back(std::move(seq));
  }
  return report;
}

namespace {

std::vector<Form> base_forms(int n, int k, int r) {
  std::vector<Form> out;
  if (k < 0 || r < 0 || !is_valid_node(k, r) || k > 4 * (n - 1)) return out;
  for (const Form& v : eigenspace_basis(n, k, r).vectors()) {
    if (block_zero_degree(v) == 0) out.push_back(v);
  }
  return out;
}

std::vector<Vector> dense_columns(const SparseMatrix& m) {
  std::vector<Vector> out;
  for (int j = 0; j < m.cols(); ++j) {
    Vector v(m.rows());
    for (const auto& [row, c] : m.column(j)) v[row] = c;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

KernelCharacterization kernel_characterization(int n, int k, int r) {
  if (n < 2) throw DomainError("kernel characterization needs n >= 2");
  if (r < 1) throw DomainError("kernel characterization needs r >= 1");
  require_valid_node(k - 1, r - 1);
  if (k > 4 * n) throw DomainError("degree exceeds 4n");
  KernelCharacterization out{n, k, r, SpaceBasis(n, k - 1, {}), SpaceBasis(n, k - 1, {})};

  std::vector<Form> domain;
  for (const Form& v : eigenspace_basis(n, k - 1, r - 1).vectors()) {
    if (block_zero_degree(v) == 1) domain.push_back(v);
  }
  if (!domain.empty()) {
    const SpaceBasis d(n, k - 1, domain);
    const SparseMatrix m = symbol_columns(d, r - 1, basis_covector(n, 0));
    std::vector<Form> kernel;
    for (const Vector& x : kernel_basis(m.to_dense())) {
      Form f(n, k - 1);
      for (int j = 0; j < d.size(); ++j) {
        if (x[j] != 0) f += d[j] * x[j];
      }
      kernel.push_back(std::move(f));
    }
    out.kernel = SpaceBasis(n, k - 1, kernel);
  }

  std::vector<Form> predicted;
  for (const Form& a0 : base_forms(n, k - 2, r - 2)) {
    Form f = wedge(a0, one_form(n, 0));
    for (int j = 0; j < 3; ++j) f -= wedge(act(kGenerators[j], a0), one_form(n, j + 1)) * Rational(1, r);
    predicted.push_back(std::move(f));
  }
  out.predicted = SpaceBasis(n, k - 1, predicted);
  return out;
}

std::vector<CounterexampleCheck> counterexample_checks(int n) {
  if (n < 1) throw DomainError("n must be positive");
  std::vector<CounterexampleCheck> checks;
  const Form e0123 = basis_form(n, {0, 1, 2, 3});
  const Form e123 = basis_form(n, {1, 2, 3});

  for (int k = 4; k <= 4 * n; k += 2) {
    const std::vector<Form> base = base_forms(n, k - 4, 0);
    bool ok = !base.empty();
    for (const Form& a : base) {
      const Form phi = wedge(a, e0123);
      ok = ok && !phi.is_zero() && in_eigenspace(phi, 0) && symbol_up(phi, 0).is_zero();
    }
    std::ostringstream detail;
    detail << base.size() << " forms alpha e^{0123} in E_{" << k << ",0}; E_{" << k - 1
           << ",-1} = 0 so none is an image";
    checks.push_back({"kernel alpha e^{0123} at E_{" + std::to_string(k) + ",0}", ok, detail.str()});
  }

  for (int k = 2; k + 1 <= 4 * n; k += 2) {
    const std::vector<Form> base = base_forms(n, k - 2, 0);
    if (base.empty()) continue;
    const ExteriorBasis& target = ExteriorBasis::get(n, k + 1);
    const std::vector<Vector> image =
        k <= 4 * n ? dense_columns(symbol_columns(eigenspace_basis(n, k, 0), 0, basis_covector(n, 0)))
                   : std::vector<Vector>{};
    bool ok = true;
    std::vector<Vector> joined = image;
    for (const Form& a : base) {
      const Form phi = wedge(a, e123);
      ok = ok && !phi.is_zero() && in_eigenspace(phi, 1) && symbol_up(phi, 1).is_zero();
      joined.push_back(target.coords(phi));
    }
    // The span of the α e^{123} meets the image only in zero.
    ok = ok && independent_subset(target.size(), joined).size() ==
                   independent_subset(target.size(), image).size() + base.size();
    std::ostringstream detail;
    detail << base.size() << " forms alpha e^{123} in E_{" << k + 1 << ",1}, none in sigma(E_{" << k << ",0})";
    checks.push_back({"kernel alpha e^{123} at E_{" + std::to_string(k + 1) + ",1}", ok, detail.str()});
  }

  for (int k : {0, 2}) {
    if (k + 1 > 4 * n) continue;
    const long long dim = eigenspace_dim(n, k, 0);
    const long long rk = symbol_rank(n, k, 0);
    checks.push_back({"sigma injective on E_{" + std::to_string(k) + ",0}", rk == dim,
                      "rank " + std::to_string(rk) + " of dim " + std::to_string(dim)});
  }
  if (2 <= 4 * n) {
    const long long dim = eigenspace_dim(n, 1, 1);
    const long long in = symbol_rank(n, 0, 0);
    const long long out = symbol_rank(n, 1, 1);
    checks.push_back({"exact at E_{1,1}", dim - out == in,
                      "dim " + std::to_string(dim) + ", kernel " + std::to_string(dim - out) + ", image " +
                          std::to_string(in)});
  }
  return checks;
}

bool predicted_exact(int k0, int k, int r) {
  if (k0 == 0) return true;
  if (k0 == 1) return !(k == 3 && r == 1);
  return !((k == 2 * k0 && r == 0) || (k == 2 * k0 + 1 && r == 1));
}

bool EllipticityReport::all_match() const {
  for (const NodeVerdict& v : nodes) {
    if (!v.match()) return false;
  }
  return true;
}

EllipticityReport ellipticity_report(int n, const std::optional<Covector>& xi) {
  if (n < 1) throw DomainError("n must be positive");
  if (xi && static_cast<int>(xi->size()) != 4 * n) throw InputError("covector length must be 4n");
  EllipticityReport report{n, xi ? *xi : basis_covector(n, 0), {}};
  for (int k0 = 0; k0 <= 2 * n; ++k0) {
    long long rank_in = 0;
    for (int j = 0; j <= 2 * n - k0; ++j) {
      NodeVerdict v{k0, 2 * k0 + j, j};
      v.dim = eigenspace_dim(n, v.k, v.r);
      v.rank_in = rank_in;
      v.rank_out = symbol_rank(n, v.k, v.r, report.xi);
      v.exact = v.dim - v.rank_out == v.rank_in;
      v.predicted = predicted_exact(k0, v.k, v.r);
      rank_in = v.rank_out;
      report.nodes.push_back(v);
    }
  }
  return report;
}

}  // namespace qdc
