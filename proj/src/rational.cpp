#include "nistab/rational.hpp"

#include "nistab/errors.hpp"

namespace nistab {

RationalMatrix RationalMatrix::zero(int r, int c) {
  RationalMatrix m;
  m.rows = r;
  m.cols = c;
  m.entries.assign(static_cast<std::size_t>(r) * c, RationalFunction::zero());
  return m;
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m = zero(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = RationalFunction::constant(1.0);
  return m;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& rhs) const {
  if (rows != rhs.rows || cols != rhs.cols)
    throw DimensionError("rational matrix subtraction shape mismatch");
  RationalMatrix out = zero(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.at(i, j) = at(i, j) - rhs.at(i, j);
  return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& rhs) const {
  if (cols != rhs.rows)
    throw DimensionError("rational matrix product shape mismatch");
  RationalMatrix out = zero(rows, rhs.cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < rhs.cols; ++j) {
      RationalFunction acc = RationalFunction::zero();
      for (int k = 0; k < cols; ++k) acc = acc + at(i, k) * rhs.at(k, j);
      out.at(i, j) = acc;
    }
  return out;
}

RationalMatrix RationalMatrix::scaled(double s) const {
  RationalMatrix out = *this;
  for (auto& e : out.entries) e = e * s;
  return out;
}

namespace {

RationalMatrix minor_of(const RationalMatrix& m, int drop_col) {
  RationalMatrix out = RationalMatrix::zero(m.rows - 1, m.cols - 1);
  for (int i = 1; i < m.rows; ++i) {
    int jc = 0;
    for (int j = 0; j < m.cols; ++j) {
      if (j == drop_col) continue;
      out.at(i - 1, jc++) = m.at(i, j);
    }
  }
  return out;
}

}

RationalFunction determinant(const RationalMatrix& m) {
  if (m.rows != m.cols) throw DimensionError("determinant of non-square");
  if (m.rows == 0) return RationalFunction::constant(1.0);
  if (m.rows == 1) return m.at(0, 0);
  RationalFunction acc = RationalFunction::zero();
  double sign = 1.0;
  for (int j = 0; j < m.cols; ++j) {
    const RationalFunction term =
        m.at(0, j) * determinant(minor_of(m, j)) * sign;
    acc = acc + term;
    sign = -sign;
  }
  return acc;
}

}
