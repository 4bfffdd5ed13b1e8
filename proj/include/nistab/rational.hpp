#pragma once

#include <vector>

#include "nistab/polynomial.hpp"

namespace nistab {

// Ratio of polynomials kept unreduced on purpose: no gcd is ever taken, so
// exact cancellations survive as matching root pairs instead of silently
// changing the degree.
struct RationalFunction {
  Polynomial num = Polynomial::zero();
  Polynomial den = Polynomial::constant(1.0);

  static RationalFunction zero() { return {}; }
  static RationalFunction constant(double c) {
    return {Polynomial::constant(c), Polynomial::constant(1.0)};
  }

  RationalFunction operator+(const RationalFunction& rhs) const {
    return {num * rhs.den + rhs.num * den, den * rhs.den};
  }
  RationalFunction operator-(const RationalFunction& rhs) const {
    return {num * rhs.den - rhs.num * den, den * rhs.den};
  }
  RationalFunction operator*(const RationalFunction& rhs) const {
    return {num * rhs.num, den * rhs.den};
  }
  RationalFunction operator*(double scale) const {
    return {num * scale, den};
  }
};

// Dense matrix of rational entries, row-major.
struct RationalMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<RationalFunction> entries;

  static RationalMatrix zero(int r, int c);
  static RationalMatrix identity(int n);

  RationalFunction& at(int r, int c) { return entries[r * cols + c]; }
  const RationalFunction& at(int r, int c) const {
    return entries[r * cols + c];
  }

  RationalMatrix operator-(const RationalMatrix& rhs) const;
  RationalMatrix operator*(const RationalMatrix& rhs) const;
  RationalMatrix scaled(double s) const;
};

// Cofactor expansion along the first row; exact in the coefficients modulo
// floating point, no pivoting.
RationalFunction determinant(const RationalMatrix& m);

}
