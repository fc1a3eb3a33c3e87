#include "pgq/linalg.hpp"

#include <utility>

namespace pgq {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

int rref(const FieldTable& f, Matrix& m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
    const Elem s = f.inv(m.at(r, c));
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Elem factor = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    ++r;
  }
  m.rows = r;
  m.data.resize(static_cast<std::size_t>(r) * m.cols);
  return r;
}

int rank(const FieldTable& f, Matrix m) { return rref(f, m); }

Matrix null_space(const FieldTable& f, const Matrix& m) {
  Matrix r = m;
  rref(f, r);
  std::vector<int> pivot_col(r.rows, -1);
  std::vector<bool> is_pivot(m.cols, false);
  for (int i = 0; i < r.rows; ++i)
    for (int c = 0; c < r.cols; ++c)
      if (r.at(i, c) != 0) {
        pivot_col[i] = c;
        is_pivot[c] = true;
        break;
      }
  Matrix out(m.cols - r.rows, m.cols);
  int k = 0;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    out.at(k, free) = 1;
    for (int i = 0; i < r.rows; ++i) out.at(k, pivot_col[i]) = f.neg(r.at(i, free));
    ++k;
  }
  rref(f, out);
  return out;
}

std::vector<Elem> row_times(const FieldTable& f, std::span<const Elem> v, const Matrix& m) {
  std::vector<Elem> out(m.cols, 0);
  for (int i = 0; i < m.rows; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols; ++j) out[j] = f.add(out[j], f.mul(v[i], m.at(i, j)));
  }
  return out;
}

Matrix multiply(const FieldTable& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    auto r = row_times(f, a.row(i), b);
    for (int j = 0; j < b.cols; ++j) out.at(i, j) = r[j];
  }
  return out;
}

Matrix apply_automorphism(const FieldTable& f, int auto_index, Matrix m) {
  for (auto& e : m.data) e = f.apply_automorphism(auto_index, e);
  return m;
}

Elem dot(const FieldTable& f, std::span<const Elem> a, std::span<const Elem> b) {
  Elem s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s = f.add(s, f.mul(a[i], b[i]));
  return s;
}

}  // namespace pgq
