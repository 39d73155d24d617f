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

// Exact arithmetic and linear algebra over prime fields GF(p).
//
// Every routine that has to pick one solution out of a solution space does so
// deterministically: free coordinates are set to zero, which yields the
// lexicographically smallest solution (see solve_lexmin).

#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qss {

// The prime field GF(p) for 2 <= p <= 257.
class Field {
 public:
  static constexpr std::uint32_t kMaxModulus = 257;

  // Throws qss::Error unless p is a prime in [2, kMaxModulus].
  explicit Field(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t reduce(std::int64_t v) const noexcept {
    const auto p = static_cast<std::int64_t>(p_);
    const std::int64_t r = v % p;
    return static_cast<std::uint32_t>(r < 0 ? r + p : r);
  }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  // Throws qss::Error on zero.
  std::uint32_t inv(std::uint32_t a) const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  std::uint32_t p_;
};

class FieldElement {
 public:
  FieldElement(Field field, std::int64_t value)
      : field_(field), value_(field.reduce(value)) {}

  const Field& field() const noexcept { return field_; }
  std::uint32_t value() const noexcept { return value_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const { return {field_, field_.neg(value_)}; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  Field field_;
  std::uint32_t value_;
};

// Field vectors are plain reduced residues; the owning Matrix or caller
// carries the field.
using Vec = std::vector<std::uint32_t>;

// The target vector (1, 0, ..., 0) of length e.
Vec unit_target(std::size_t length);

// Dense row-major matrix over a prime field. Rows and columns may be zero.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  // Entries are reduced modulo p.
  Matrix(Field field, std::size_t rows, std::size_t cols,
         std::span<const std::int64_t> row_major);
  Matrix(Field field,
         std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static Matrix identity(Field field, std::size_t n);
  static Matrix column_vector(Field field, const Vec& v);
  static Matrix row_vector(Field field, const Vec& v);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::uint32_t operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  void set(std::size_t r, std::size_t c, std::int64_t value) {
    data_[r * cols_ + c] = field_.reduce(value);
  }

  Vec row(std::size_t r) const;
  Vec column(std::size_t c) const;

  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> indices) const;
  Matrix select_columns(std::span<const std::size_t> indices) const;
  Matrix hstack(const Matrix& right) const;
  Matrix vstack(const Matrix& below) const;

  Matrix operator*(const Matrix& rhs) const;
  // M x for a column vector x of length cols().
  Vec apply(std::span<const std::uint32_t> x) const;
  // u^T M for a vector u of length rows().
  Vec apply_left(std::span<const std::uint32_t> u) const;

  std::string to_string() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> data_;
};

std::size_t rank(const Matrix& m);
std::uint32_t determinant(const Matrix& m);
bool is_invertible(const Matrix& m);

// Lexicographically smallest x with a x = b (coordinates ordered 0 < 1 < ...
// < p-1), or nullopt when the system is inconsistent.
std::optional<Vec> solve_lexmin(const Matrix& a, const Vec& b);

// Basis of {x : a x = 0}. One vector per free coordinate j (ascending); the
// vector for j has a 1 in position j, zeros on the other free coordinates, and
// no support before j.
std::vector<Vec> nullspace_basis(const Matrix& a);

// Lexicographically smallest u with u^T m = target^T.
// Throws qss::Error when target.size() != m.cols().
std::optional<Vec> solve_left(const Matrix& m, const Vec& target);

// A vector v with m v = 0 and eps^T v != 0, normalized to eps^T v = 1 and
// lexicographically smallest among those. nullopt when none exists.
std::optional<Vec> kernel_witness(const Matrix& m, const Vec& eps);

// Square completion [m | e_i ...] using the standard basis columns e_i for the
// rows outside the pivot set of m^T, in ascending order.
// Throws qss::Error if cols > rows or m lacks full column rank.
Matrix extend_to_invertible(const Matrix& m);

}  // namespace qss
