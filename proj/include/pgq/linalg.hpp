#pragma once

#include <span>
#include <vector>

#include "pgq/field.hpp"

namespace pgq {

/// Dense row-major matrix over a FieldTable's element codes.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<Elem> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0) {}

  Elem& at(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  Elem at(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }
  std::span<Elem> row(int r) { return {data.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)}; }
  std::span<const Elem> row(int r) const {
    return {data.data() + static_cast<std::size_t>(r) * cols, static_cast<std::size_t>(cols)};
  }

  static Matrix identity(int n);
  bool operator==(const Matrix&) const = default;
};

/// Reduces `m` to reduced row-echelon form in place, drops zero rows and
/// returns the rank.
int rref(const FieldTable& f, Matrix& m);

int rank(const FieldTable& f, Matrix m);

/// Rows form a basis of {x : m * x^T = 0}, in reduced row-echelon form.
Matrix null_space(const FieldTable& f, const Matrix& m);

/// Row vector times matrix.
std::vector<Elem> row_times(const FieldTable& f, std::span<const Elem> v, const Matrix& m);

Matrix multiply(const FieldTable& f, const Matrix& a, const Matrix& b);

/// Entrywise field automorphism.
Matrix apply_automorphism(const FieldTable& f, int auto_index, Matrix m);

Elem dot(const FieldTable& f, std::span<const Elem> a, std::span<const Elem> b);

}  // namespace pgq
