#include "qdc/space.hpp"

#include "qdc/errors.hpp"

namespace qdc {

SpaceBasis::SpaceBasis(int n, int k, std::vector<Form> vectors) : n_(n), k_(k), vectors_(std::move(vectors)) {
  const ExteriorBasis& basis = ExteriorBasis::get(n, k);
  coords_.reserve(vectors_.size());
  for (const Form& v : vectors_) {
    if (v.n() != n || v.k() != k) throw DomainError("basis vector has the wrong (n, k)");
    coords_.push_back(basis.coords(v));
  }
}

SpaceBasis SpaceBasis::from_coords(int n, int k, const std::vector<Vector>& coords) {
  const ExteriorBasis& basis = ExteriorBasis::get(n, k);
  std::vector<Form> vectors;
  vectors.reserve(coords.size());
  for (const Vector& c : coords) vectors.push_back(basis.form(c));
  return SpaceBasis(n, k, std::move(vectors));
}

SpaceBasis SpaceBasis::whole(int n, int k) {
  const ExteriorBasis& basis = ExteriorBasis::get(n, k);
  std::vector<Form> vectors;
  for (MultiIndex idx : basis.elements()) vectors.push_back(Form::basis(n, idx));
  return SpaceBasis(n, k, std::move(vectors));
}

Matrix SpaceBasis::coord_matrix() const { return Matrix::from_columns(ambient_dim(), coords_); }

bool SpaceBasis::is_independent() const {
  return coords_.empty() || rank(coord_matrix()) == coords_.size();
}

bool SpaceBasis::contains(const Form& f) const {
  if (f.is_zero()) return true;
  if (f.n() != n_ || f.k() != k_) return false;
  return span_contains(ambient_dim(), coords_, {ExteriorBasis::get(n_, k_).coords(f)});
}

bool SpaceBasis::contains_span(const SpaceBasis& other) const {
  if (other.empty()) return true;
  if (other.n_ != n_ || other.k_ != k_) return false;
  return span_contains(ambient_dim(), coords_, other.coords_);
}

bool SpaceBasis::same_span(const SpaceBasis& other) const {
  if (empty() || other.empty()) return rank(coord_matrix()) == 0 && rank(other.coord_matrix()) == 0;
  return n_ == other.n_ && k_ == other.k_ && qdc::same_span(ambient_dim(), coords_, other.coords_);
}

std::size_t LinearMap::rank() const {
  if (matrix.rows() == 0 || matrix.cols() == 0) return 0;
  return qdc::rank(matrix);
}

SpaceBasis LinearMap::kernel() const {
  std::vector<Vector> null = kernel_basis(matrix);
  std::vector<Vector> coords;
  const std::size_t ambient = domain.ambient_dim();
  for (const Vector& v : null) {
    Vector c(ambient);
    for (int j = 0; j < domain.size(); ++j) {
      if (v[j] == 0) continue;
      for (std::size_t i = 0; i < ambient; ++i) c[i] += v[j] * domain.coords()[j][i];
    }
    coords.push_back(std::move(c));
  }
  return SpaceBasis::from_coords(domain.n(), domain.k(), coords);
}

SpaceBasis LinearMap::image() const {
  std::vector<Vector> cols = image_basis(matrix);
  std::vector<Vector> coords;
  const std::size_t ambient = codomain.ambient_dim();
  for (const Vector& v : cols) {
    Vector c(ambient);
    for (int j = 0; j < codomain.size(); ++j) {
      if (v[j] == 0) continue;
      for (std::size_t i = 0; i < ambient; ++i) c[i] += v[j] * codomain.coords()[j][i];
    }
    coords.push_back(std::move(c));
  }
  return SpaceBasis::from_coords(codomain.n(), codomain.k(), coords);
}

LinearMap matrix_of_map(const FormOperator& f, const SpaceBasis& domain, const SpaceBasis& codomain) {
  const ExteriorBasis& cod = ExteriorBasis::get(codomain.n(), codomain.k());
  std::vector<Form> images;
  std::vector<Vector> image_coords;
  for (const Form& v : domain.vectors()) {
    Form image = f(v);
    if (!image.is_zero() && (image.n() != codomain.n() || image.k() != codomain.k())) {
      throw ContainmentError("image has the wrong degree for the codomain", image.to_string());
    }
    image_coords.push_back(image.is_zero() ? Vector(cod.size()) : cod.coords(image));
    images.push_back(std::move(image));
  }
  LinearMap map{domain, codomain, Matrix(codomain.size(), domain.size())};
  if (domain.empty()) return map;
  const Matrix targets = Matrix::from_columns(cod.size(), image_coords);
  if (codomain.empty()) {
    for (std::size_t j = 0; j < images.size(); ++j) {
      if (!images[j].is_zero()) throw ContainmentError("image outside the (zero) codomain", images[j].to_string());
    }
    return map;
  }
  SpanSolution sol = solve_in_span(codomain.coord_matrix(), targets);
  if (!sol.ok) {
    throw ContainmentError("image outside span of codomain basis", images[sol.failed_column].to_string());
  }
  map.matrix = std::move(sol.coefficients);
  return map;
}

}  // namespace qdc
