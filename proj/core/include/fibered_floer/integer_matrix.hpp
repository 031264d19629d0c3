#pragma once

#include <cstddef>
#include <ostream>
#include <vector>

#include <gmpxx.h>

namespace fibered_floer {

using BigInt = mpz_class;

// 2x2 integer matrix, row-major.
struct Mat2 {
  BigInt a{1}, b{0};
  BigInt c{0}, d{1};

  static Mat2 identity() { return {}; }

  BigInt trace() const { return a + d; }
  BigInt det() const { return a * d - b * c; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y);
  friend bool operator==(const Mat2& x, const Mat2& y) {
    return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
  }
  friend std::ostream& operator<<(std::ostream& os, const Mat2& m);
};

// Dense square integer matrix.
class IntMatrix {
 public:
  explicit IntMatrix(std::size_t n);

  static IntMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }

  BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  BigInt trace() const;

  // Writes a 2x2 block with its top-left corner at (offset, offset).
  void set_block(std::size_t offset, const Mat2& block);

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
  friend bool operator==(const IntMatrix& x, const IntMatrix& y) {
    return x.n_ == y.n_ && x.data_ == y.data_;
  }

 private:
  std::size_t n_;
  std::vector<BigInt> data_;
};

// Coefficients of det(lambda*I - A), highest degree first (leading 1).
// Berkowitz's division-free algorithm, so exact over the integers.
std::vector<BigInt> characteristic_polynomial(const IntMatrix& m);

// Coefficients c_0..c_n of det(I - t*A) as a polynomial in t.
std::vector<BigInt> reversed_characteristic_polynomial(const IntMatrix& m);

}  // namespace fibered_floer
