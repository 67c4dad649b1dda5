#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

#include "posetlie/error.hpp"

namespace posetlie {

// Exact rationals in canonical form (gcd(num, den) = 1, den > 0).
using Scalar = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using RationalVector = std::vector<Scalar>;

// "num/den", always with an explicit denominator.
std::string to_fraction_string(const Scalar& s);
// Accepts "num/den" or a bare integer.
Scalar parse_fraction(const std::string& text);

// Dense row-major matrix over the rationals.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  RationalMatrix transpose() const;
  RationalVector apply(std::span<const Scalar> v) const;
  bool is_zero() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Rank over Q. Rows are scaled to integers and reduced by fraction-free
// (Bareiss) elimination.
std::size_t rank(const RationalMatrix& m);

// Basis of {v : m v = 0}, one vector per free column of the reduced row
// echelon form.
std::vector<RationalVector> nullspace_basis(const RationalMatrix& m);

// Dimension of the span of `vectors`; all must share one length.
std::size_t span_dim(const std::vector<RationalVector>& vectors);

}  // namespace posetlie
