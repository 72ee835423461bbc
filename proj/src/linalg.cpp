#include "linalg.hpp"

#include "error.hpp"

namespace orb {

Mat mat_identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat mat_mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw OrbError("mat_mul: shape mismatch");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      if (x.at(i, k) == 0) continue;
      for (int j = 0; j < y.cols; ++j) r.at(i, j) += x.at(i, k) * y.at(k, j);
    }
  return r;
}

std::vector<Rat> mat_vec(const Mat& m, const std::vector<Rat>& v) {
  if (m.cols != static_cast<int>(v.size())) throw OrbError("mat_vec: shape mismatch");
  std::vector<Rat> r(static_cast<std::size_t>(m.rows), Rat(0));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j)
      if (m.at(i, j) != 0) r[static_cast<std::size_t>(i)] += m.at(i, j) * v[static_cast<std::size_t>(j)];
  return r;
}

std::vector<int> rref(Mat& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols && row < m.rows; ++col) {
    int piv = -1;
    for (int r = row; r < m.rows; ++r)
      if (m.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) continue;
    if (piv != row)
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(row, c));
    Rat lead = m.at(row, col);
    for (int c = col; c < m.cols; ++c) m.at(row, c) /= lead;
    for (int r = 0; r < m.rows; ++r) {
      if (r == row || m.at(r, col) == 0) continue;
      Rat f = m.at(r, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int mat_rank(Mat m) { return static_cast<int>(rref(m).size()); }

Rat mat_det(Mat m) {
  if (m.rows != m.cols) throw OrbError("mat_det: not square");
  Rat det(1);
  for (int col = 0; col < m.cols; ++col) {
    int piv = -1;
    for (int r = col; r < m.rows; ++r)
      if (m.at(r, col) != 0) { piv = r; break; }
    if (piv < 0) return Rat(0);
    if (piv != col) {
      for (int c = 0; c < m.cols; ++c) std::swap(m.at(piv, c), m.at(col, c));
      det = -det;
    }
    det *= m.at(col, col);
    for (int r = col + 1; r < m.rows; ++r) {
      if (m.at(r, col) == 0) continue;
      Rat f = m.at(r, col) / m.at(col, col);
      for (int c = col; c < m.cols; ++c) m.at(r, c) -= f * m.at(col, c);
    }
  }
  return det;
}

std::optional<std::vector<Rat>> mat_solve(const Mat& m, const std::vector<Rat>& b) {
  if (m.rows != static_cast<int>(b.size())) throw OrbError("mat_solve: shape mismatch");
  Mat aug(m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[static_cast<std::size_t>(i)];
  }
  std::vector<int> pivots = rref(aug);
  for (std::size_t k = 0; k < pivots.size(); ++k)
    if (pivots[k] == m.cols) return std::nullopt; // pivot in the rhs column
  std::vector<Rat> x(static_cast<std::size_t>(m.cols), Rat(0));
  for (std::size_t k = 0; k < pivots.size(); ++k)
    x[static_cast<std::size_t>(pivots[k])] = aug.at(static_cast<int>(k), m.cols);
  return x;
}

} // namespace orb
