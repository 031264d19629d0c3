#include "fibered_floer/integer_matrix.hpp"

namespace fibered_floer {

Mat2 operator*(const Mat2& x, const Mat2& y) {
  Mat2 r;
  r.a = x.a * y.a + x.b * y.c;
  r.b = x.a * y.b + x.b * y.d;
  r.c = x.c * y.a + x.d * y.c;
  r.d = x.c * y.b + x.d * y.d;
  return r;
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m.a << ", " << m.b << "], [" << m.c << ", " << m.d << "]]";
}

IntMatrix::IntMatrix(std::size_t n) : n_(n), data_(n * n, BigInt(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

BigInt IntMatrix::trace() const {
  BigInt t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

void IntMatrix::set_block(std::size_t offset, const Mat2& block) {
  (*this)(offset, offset) = block.a;
  (*this)(offset, offset + 1) = block.b;
  (*this)(offset + 1, offset) = block.c;
  (*this)(offset + 1, offset + 1) = block.d;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t n = x.size();
  IntMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

std::vector<BigInt> characteristic_polynomial(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<BigInt> p{BigInt(1)};

  for (std::size_t k = 1; k <= n; ++k) {
    const std::size_t last = k - 1;

    // First column of the (k+1) x k lower-triangular Toeplitz factor:
    // 1, -a_kk, -R C, -R A C, ..., -R A^{k-2} C, with A the leading
    // (k-1) x (k-1) block, R the new row and C the new column.
    std::vector<BigInt> t(k + 1);
    t[0] = 1;
    t[1] = -m(last, last);

    std::vector<BigInt> v(last);
    for (std::size_t i = 0; i < last; ++i) v[i] = m(i, last);
    for (std::size_t step = 2; step <= k; ++step) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < last; ++i)
        if (sgn(m(last, i)) != 0) dot += m(last, i) * v[i];
      t[step] = -dot;
      if (step == k) break;
      std::vector<BigInt> next(last, BigInt(0));
      for (std::size_t i = 0; i < last; ++i)
        for (std::size_t j = 0; j < last; ++j)
          if (sgn(m(i, j)) != 0) next[i] += m(i, j) * v[j];  // actions are mostly zero
      v = std::move(next);
    }

    std::vector<BigInt> q(k + 1, BigInt(0));
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j < p.size() && j <= i; ++j) q[i] += t[i - j] * p[j];
    p = std::move(q);
  }
  return p;
}

std::vector<BigInt> reversed_characteristic_polynomial(const IntMatrix& m) {
  // t^n * det(1/t - A) has the same coefficient list read low-to-high.
  return characteristic_polynomial(m);
}

}  // namespace fibered_floer
