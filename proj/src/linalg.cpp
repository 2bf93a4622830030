#include "qdc/linalg.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "qdc/errors.hpp"

namespace qdc {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector>& columns) {
  Matrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw InputError("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

Vector Matrix::column(std::size_t j) const {
  Vector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

std::vector<Vector> Matrix::columns() const {
  std::vector<Vector> out;
  out.reserve(cols_);
  for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x == 0; });
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw InputError("matrix product dimension mismatch");
  Matrix out(rows_, other.cols_);
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < other.cols_; ++j) {
        const Rational& b = other(k, j);
        if (b == 0) continue;
        mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        out(i, j) += t;
      }
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  if (cols_ != v.size()) throw InputError("matrix-vector dimension mismatch");
  Vector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix sum dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("matrix difference dimension mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& c) {
  for (auto& x : data_) x *= c;
  return *this;
}

namespace {

// Row reduction shared by rank and rref. With `full` the pivot rows are
// normalised and entries above pivots cleared as well.
std::vector<std::size_t> eliminate(Matrix& m, bool full) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> nz;
  Rational t;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    // Prefer the pivot with the smallest numerator/denominator to limit growth.
    std::size_t best = rows;
    std::size_t best_size = 0;
    for (std::size_t i = row; i < rows; ++i) {
      const Rational& x = m(i, col);
      if (x == 0) continue;
      const std::size_t size = mpz_size(x.get_num_mpz_t()) + mpz_size(x.get_den_mpz_t());
      if (best == rows || size < best_size) {
        best = i;
        best_size = size;
        if (size <= 2) break;
      }
    }
    if (best == rows) continue;
    if (best != row) {
      for (std::size_t j = col; j < cols; ++j) std::swap(m(row, j), m(best, j));
    }
    nz.clear();
    if (full) {
      const Rational inv = 1 / m(row, col);
      for (std::size_t j = col; j < cols; ++j) {
        if (m(row, j) == 0) continue;
        m(row, j) *= inv;
      }
    }
    for (std::size_t j = col + 1; j < cols; ++j)
      if (m(row, j) != 0) nz.push_back(j);
    const Rational pivot = m(row, col);
    const std::size_t start = full ? 0 : row + 1;
    for (std::size_t i = start; i < rows; ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational factor = m(i, col);
      if (!full) factor /= pivot;
      m(i, col) = 0;
      for (std::size_t j : nz) {
        mpq_mul(t.get_mpq_t(), factor.get_mpq_t(), m(row, j).get_mpq_t());
        mpq_sub(m(i, j).get_mpq_t(), m(i, j).get_mpq_t(), t.get_mpq_t());
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Echelon rref(Matrix m) {
  auto pivots = eliminate(m, true);
  return Echelon{std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) {
  Matrix work(m);
  return eliminate(work, false).size();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Echelon e = rref(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> image_basis(const Matrix& m) {
  Matrix work(m);
  const auto pivots = eliminate(work, false);
  std::vector<Vector> out;
  for (std::size_t p : pivots) out.push_back(m.column(p));
  return out;
}

std::vector<std::size_t> independent_subset(std::size_t length, const std::vector<Vector>& vectors) {
  Matrix m = Matrix::from_columns(length, vectors);
  return eliminate(m, false);
}

SpanSolution solve_in_span(const Matrix& basis, const Matrix& targets) {
  if (basis.rows() != targets.rows()) throw InputError("span solve dimension mismatch");
  const std::size_t m = basis.cols();
  Matrix aug(basis.rows(), m + targets.cols());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (std::size_t j = 0; j < m; ++j) aug(i, j) = basis(i, j);
    for (std::size_t j = 0; j < targets.cols(); ++j) aug(i, m + j) = targets(i, j);
  }
  const Echelon e = rref(std::move(aug));
  SpanSolution sol;
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] != i) {
      if (e.pivots[i] < m) throw InvariantViolation("span basis is not linearly independent");
      sol.ok = false;
      sol.failed_column = e.pivots[i] - m;
      return sol;
    }
  }
  if (e.pivots.size() < m) throw InvariantViolation("span basis is not linearly independent");
  sol.coefficients = Matrix(m, targets.cols());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < targets.cols(); ++j) sol.coefficients(i, j) = e.reduced(i, m + j);
  return sol;
}

bool span_contains(std::size_t length, const std::vector<Vector>& outer, const std::vector<Vector>& inner) {
  const std::size_t r = outer.empty() ? 0 : rank(Matrix::from_columns(length, outer));
  std::vector<Vector> all(outer);
  all.insert(all.end(), inner.begin(), inner.end());
  const std::size_t r_all = all.empty() ? 0 : rank(Matrix::from_columns(length, all));
  return r == r_all;
}

bool same_span(std::size_t length, const std::vector<Vector>& a, const std::vector<Vector>& b) {
  return span_contains(length, a, b) && span_contains(length, b, a);
}

SparseMatrix SparseMatrix::identity(int n) {
  SparseMatrix m(n, n);
  for (int j = 0; j < n; ++j) m.columns_[j] = {{j, Rational(1)}};
  return m;
}

void SparseMatrix::set_column(int j, Column entries) {
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  Column merged;
  for (auto& [i, v] : entries) {
    if (i < 0 || i >= rows_) throw InputError("sparse row index out of range");
    if (!merged.empty() && merged.back().first == i) {
      merged.back().second += v;
    } else {
      merged.emplace_back(i, std::move(v));
    }
  }
  std::erase_if(merged, [](const auto& e) { return e.second == 0; });
  columns_[j] = std::move(merged);
}

Vector SparseMatrix::apply(const Vector& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InputError("sparse apply dimension mismatch");
  Vector out(rows_);
  Rational t;
  for (int j = 0; j < cols_; ++j) {
    if (v[j] == 0) continue;
    for (const auto& [i, a] : columns_[j]) {
      mpq_mul(t.get_mpq_t(), a.get_mpq_t(), v[j].get_mpq_t());
      out[i] += t;
    }
  }
  return out;
}

Matrix SparseMatrix::apply(const Matrix& m) const {
  if (static_cast<int>(m.rows()) != cols_) throw InputError("sparse apply dimension mismatch");
  Matrix out(rows_, m.cols());
  Rational t;
  for (int j = 0; j < cols_; ++j) {
    for (const auto& [i, a] : columns_[j]) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        const Rational& b = m(j, c);
        if (b == 0) continue;
        mpq_mul(t.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
        out(i, c) += t;
      }
    }
  }
  return out;
}

SparseMatrix SparseMatrix::operator*(const SparseMatrix& other) const {
  if (cols_ != other.rows_) throw InputError("sparse product dimension mismatch");
  SparseMatrix out(rows_, other.cols_);
  for (int j = 0; j < other.cols_; ++j) {
    std::map<int, Rational> acc;
    for (const auto& [k, b] : other.columns_[j]) {
      for (const auto& [i, a] : columns_[k]) acc[i] += a * b;
    }
    Column col;
    for (auto& [i, v] : acc)
      if (v != 0) col.emplace_back(i, std::move(v));
    out.columns_[j] = std::move(col);
  }
  return out;
}

SparseMatrix& SparseMatrix::operator+=(const SparseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw InputError("sparse sum dimension mismatch");
  for (int j = 0; j < cols_; ++j) {
    Column col = columns_[j];
    col.insert(col.end(), other.columns_[j].begin(), other.columns_[j].end());
    set_column(j, std::move(col));
  }
  return *this;
}

SparseMatrix SparseMatrix::operator-(const SparseMatrix& other) const {
  SparseMatrix neg(other);
  neg *= Rational(-1);
  return *this + neg;
}

SparseMatrix& SparseMatrix::operator*=(const Rational& c) {
  for (auto& col : columns_) {
    if (c == 0) {
      col.clear();
      continue;
    }
    for (auto& e : col) e.second *= c;
  }
  return *this;
}

SparseMatrix SparseMatrix::shifted(const Rational& c) const {
  if (rows_ != cols_) throw InputError("shift of a non-square matrix");
  SparseMatrix out(*this);
  for (int j = 0; j < cols_; ++j) {
    Column col = out.columns_[j];
    col.emplace_back(j, c);
    out.set_column(j, std::move(col));
  }
  return out;
}

Matrix SparseMatrix::to_dense() const {
  Matrix m(rows_, cols_);
  for (int j = 0; j < cols_; ++j)
    for (const auto& [i, v] : columns_[j]) m(i, j) = v;
  return m;
}

Matrix SparseMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  std::vector<int> row_pos(rows_, -1);
  for (std::size_t r = 0; r < rows.size(); ++r) row_pos[rows[r]] = static_cast<int>(r);
  Matrix m(rows.size(), cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    for (const auto& [i, v] : columns_[cols[c]]) {
      if (row_pos[i] >= 0) m(row_pos[i], c) = v;
    }
  }
  return m;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const Column& c) { return c.empty(); });
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t count = 0;
  for (const auto& c : columns_) count += c.size();
  return count;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
}

std::size_t rank(const SparseMatrix& m) {
  std::unordered_map<int, SparseMatrix::Column> pivots;
  SparseMatrix::Column next;
  Rational t;
  for (int j = 0; j < m.cols(); ++j) {
    SparseMatrix::Column c = m.column(j);
    while (!c.empty()) {
      auto it = pivots.find(c.front().first);
      if (it == pivots.end()) {
        const Rational inv = 1 / c.front().second;
        for (auto& [row, v] : c) v *= inv;
        pivots.emplace(c.front().first, std::move(c));
        break;
      }
      // c -= c_lead * pivot, merging two sorted sparse vectors.
      const Rational factor = c.front().second;
      const SparseMatrix::Column& p = it->second;
      next.clear();
      std::size_t a = 1, b = 1;
      while (a < c.size() || b < p.size()) {
        if (b == p.size() || (a < c.size() && c[a].first < p[b].first)) {
          next.push_back(std::move(c[a++]));
        } else if (a == c.size() || p[b].first < c[a].first) {
          next.emplace_back(p[b].first, -factor * p[b].second);
          ++b;
        } else {
          mpq_mul(t.get_mpq_t(), factor.get_mpq_t(), p[b].second.get_mpq_t());
          mpq_sub(c[a].second.get_mpq_t(), c[a].second.get_mpq_t(), t.get_mpq_t());
          if (c[a].second != 0) next.push_back(std::move(c[a]));
          ++a;
          ++b;
        }
      }
      std::swap(c, next);
    }
  }
  return pivots.size();
}

}  // namespace qdc
