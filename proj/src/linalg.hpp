// Dense exact linear algebra over Rat, at the scale of sector presentations
// (dimensions are tens, not thousands). Row-major flat storage.
#pragma once

#include "rational.hpp"

#include <optional>
#include <vector>

namespace orb {

struct Mat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), Rat(0)) {}

  Rat& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }
  const Rat& at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)]; }

  bool operator==(const Mat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

Mat mat_identity(int n);
Mat mat_mul(const Mat& x, const Mat& y);
std::vector<Rat> mat_vec(const Mat& m, const std::vector<Rat>& v);

// In-place reduced row echelon form; returns the pivot column of each pivot row.
std::vector<int> rref(Mat& m);

int mat_rank(Mat m);
Rat mat_det(Mat m); // square only

// Exact solution of m x = b, or nullopt when inconsistent. When the system is
// underdetermined the free variables are set to zero.
std::optional<std::vector<Rat>> mat_solve(const Mat& m, const std::vector<Rat>& b);

} // namespace orb
