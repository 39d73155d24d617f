// Copyright 2026 The qss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qss/galois.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qss/error.hpp"

namespace qss {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

// Working copy for Gauss-Jordan elimination. Columns are visited in the
// order given; `pivot_of_row[r]` is the column pivoted in row r.
struct Echelon {
  Field field;
  std::size_t cols;
  std::vector<Vec> rows;
  std::vector<std::size_t> pivot_of_row;

  Echelon(const Matrix& m) : field(m.field()), cols(m.cols()) {
    rows.reserve(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  }

  void reduce(std::span<const std::size_t> column_order,
              std::size_t stop_before_col) {
    std::size_t next = 0;
    for (std::size_t col : column_order) {
      if (col >= stop_before_col) continue;
      std::size_t found = next;
      while (found < rows.size() && rows[found][col] == 0) ++found;
      if (found == rows.size()) continue;
      std::swap(rows[next], rows[found]);
      const std::uint32_t scale = field.inv(rows[next][col]);
      for (auto& x : rows[next]) x = field.mul(x, scale);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r == next || rows[r][col] == 0) continue;
        const std::uint32_t factor = rows[r][col];
        for (std::size_t c = 0; c < cols; ++c) {
          rows[r][c] = field.sub(rows[r][c], field.mul(factor, rows[next][c]));
        }
      }
      pivot_of_row.push_back(col);
      ++next;
    }
  }
};

std::vector<std::size_t> ascending(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  return order;
}

std::vector<std::size_t> descending(std::size_t n) {
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = n - 1 - i;
  return order;
}

}  // namespace

Field::Field(std::uint32_t p) : p_(p) {
  if (p > kMaxModulus || !is_prime(p)) {
    throw Error("field modulus must be a prime in [2, 257], got " +
                std::to_string(p));
  }
}

std::uint32_t Field::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = a % p_;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t Field::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw Error("division by zero in GF(" + std::to_string(p_) + ")");
  return pow(a, p_ - 2);
}

namespace {
void require_same_field(const Field& a, const Field& b) {
  if (!(a == b)) throw Error("field mismatch");
}
}  // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
  require_same_field(field_, o.field_);
  return {field_, field_.mul(value_, field_.inv(o.value_))};
}

Vec unit_target(std::size_t length) {
  Vec eps(length, 0);
  if (length > 0) eps[0] = 1;
  return eps;
}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols,
               std::span<const std::int64_t> row_major)
    : Matrix(field, rows, cols) {
  if (row_major.size() != rows * cols) {
    throw Error("matrix entry count does not match its shape");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.reduce(row_major[i]);
}

Matrix::Matrix(Field field,
               std::initializer_list<std::initializer_list<std::int64_t>> rows)
    : field_(field), rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error("ragged matrix literal");
    for (std::int64_t v : r) data_.push_back(field_.reduce(v));
  }
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1 % field.modulus();
  return m;
}

Matrix Matrix::column_vector(Field field, const Vec& v) {
  Matrix m(field, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = field.reduce(v[i]);
  return m;
}

Matrix Matrix::row_vector(Field field, const Vec& v) {
  Matrix m(field, 1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m.data_[i] = field.reduce(v[i]);
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Matrix::column(std::size_t c) const {
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix out(field_, indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw Error("row index out of range");
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(indices[i] * cols_), cols_,
                out.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  }
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
  Matrix out(field_, rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols_) throw Error("column index out of range");
    for (std::size_t r = 0; r < rows_; ++r) out.data_[r * indices.size() + j] = (*this)(r, indices[j]);
  }
  return out;
}

Matrix Matrix::hstack(const Matrix& right) const {
  require_same_field(field_, right.field_);
  if (right.rows_ != rows_) throw Error("hstack: row counts differ");
  Matrix out(field_, rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.data_[r * out.cols_ + c] = (*this)(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) {
      out.data_[r * out.cols_ + cols_ + c] = right(r, c);
    }
  }
  return out;
}

Matrix Matrix::vstack(const Matrix& below) const {
  require_same_field(field_, below.field_);
  if (below.cols_ != cols_) throw Error("vstack: column counts differ");
  Matrix out(field_, rows_ + below.rows_, cols_);
  std::copy(data_.begin(), data_.end(), out.data_.begin());
  std::copy(below.data_.begin(), below.data_.end(),
            out.data_.begin() + static_cast<std::ptrdiff_t>(data_.size()));
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  require_same_field(field_, rhs.field_);
  if (cols_ != rhs.rows_) throw Error("matrix product: inner dimensions differ");
  Matrix out(field_, rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < rhs.cols_; ++c) {
      std::uint64_t acc = 0;
      for (std::size_t k = 0; k < cols_; ++k) acc += std::uint64_t{(*this)(r, k)} * rhs(k, c);
      out.data_[r * rhs.cols_ + c] = static_cast<std::uint32_t>(acc % field_.modulus());
    }
  }
  return out;
}

Vec Matrix::apply(std::span<const std::uint32_t> x) const {
  if (x.size() != cols_) throw Error("matrix-vector product: length mismatch");
  Vec out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::uint64_t acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) acc += std::uint64_t{(*this)(r, c)} * x[c];
    out[r] = static_cast<std::uint32_t>(acc % field_.modulus());
  }
  return out;
}

Vec Matrix::apply_left(std::span<const std::uint32_t> u) const {
  if (u.size() != rows_) throw Error("vector-matrix product: length mismatch");
  Vec out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) {
    std::uint64_t acc = 0;
    for (std::size_t r = 0; r < rows_; ++r) acc += std::uint64_t{u[r]} * (*this)(r, c);
    out[c] = static_cast<std::uint32_t>(acc % field_.modulus());
  }
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ",[" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? "," : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

std::size_t rank(const Matrix& m) {
  Echelon e(m);
  e.reduce(ascending(m.cols()), m.cols());
  return e.pivot_of_row.size();
}

std::uint32_t determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error("determinant of a non-square matrix");
  const Field& f = m.field();
  std::vector<Vec> rows;
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(m.row(r));
  std::uint32_t det = 1 % f.modulus();
  const std::size_t n = m.rows();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && rows[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(rows[piv], rows[col]);
      det = f.neg(det);
    }
    det = f.mul(det, rows[col][col]);
    const std::uint32_t inv = f.inv(rows[col][col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (rows[r][col] == 0) continue;
      const std::uint32_t factor = f.mul(rows[r][col], inv);
      for (std::size_t c = col; c < n; ++c) {
        rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[col][c]));
      }
    }
  }
  return det;
}

bool is_invertible(const Matrix& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

// Pivots are taken from the last column backwards. A pivot row then only
// involves its pivot and free columns with smaller index, so every pivot
// coordinate is determined by earlier coordinates while every free coordinate
// can be chosen independently of them. Setting the free ones to zero gives the
// lexicographic minimum.
std::optional<Vec> solve_lexmin(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw Error("solve: right-hand side length mismatch");
  const Field& f = a.field();
  const std::size_t n = a.cols();
  Matrix augmented = a.hstack(Matrix::column_vector(f, b));
  Echelon e(augmented);
  e.reduce(descending(n), n);
  for (std::size_t r = e.pivot_of_row.size(); r < e.rows.size(); ++r) {
    if (e.rows[r][n] != 0) return std::nullopt;
  }
  Vec x(n, 0);
  for (std::size_t r = 0; r < e.pivot_of_row.size(); ++r) x[e.pivot_of_row[r]] = e.rows[r][n];
  return x;
}

std::vector<Vec> nullspace_basis(const Matrix& a) {
  const Field& f = a.field();
  const std::size_t n = a.cols();
  Echelon e(a);
  e.reduce(descending(n), n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : e.pivot_of_row) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v(n, 0);
    v[j] = 1 % f.modulus();
    for (std::size_t r = 0; r < e.pivot_of_row.size(); ++r) {
      v[e.pivot_of_row[r]] = f.neg(e.rows[r][j]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_left(const Matrix& m, const Vec& target) {
  if (target.size() != m.cols()) {
    throw Error("solve_left: target length " + std::to_string(target.size()) +
                " does not match " + std::to_string(m.cols()) + " columns");
  }
  return solve_lexmin(m.transpose(), target);
}

std::optional<Vec> kernel_witness(const Matrix& m, const Vec& eps) {
  if (eps.size() != m.cols()) throw Error("kernel_witness: target length mismatch");
  const Field& f = m.field();
  const Matrix system = m.vstack(Matrix::row_vector(f, eps));
  Vec rhs(system.rows(), 0);
  rhs.back() = 1 % f.modulus();
  return solve_lexmin(system, rhs);
}

Matrix extend_to_invertible(const Matrix& m) {
  if (m.cols() > m.rows() || rank(m) != m.cols()) {
    throw Error("matrix lacks full column rank");
  }
  Echelon e(m.transpose());
  e.reduce(ascending(m.rows()), m.rows());
  std::vector<bool> covered(m.rows(), false);
  for (std::size_t c : e.pivot_of_row) covered[c] = true;
  Matrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (covered[i]) continue;
    Vec unit(m.rows(), 0);
    unit[i] = 1 % m.field().modulus();
    out = out.hstack(Matrix::column_vector(m.field(), unit));
  }
  if (determinant(out) == 0) throw std::logic_error("extend_to_invertible: completion is singular");
  return out;
}

}  // namespace qss
