#include "posetlie/exactla.hpp"

#include <algorithm>
#include <utility>

namespace posetlie {

namespace {

bool row_is_zero(std::span<const Scalar> row) {
  return std::all_of(row.begin(), row.end(), [](const Scalar& s) { return s.is_zero(); });
}

// Rows of `m` scaled by the lcm of their denominators; zero rows dropped.
std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    if (row_is_zero(row)) continue;
    Integer scale = 1;
    for (const auto& s : row) {
      const Integer den = boost::multiprecision::denominator(s);
      if (den != 1) scale = boost::multiprecision::lcm(scale, den);
    }
    std::vector<Integer> ints;
    ints.reserve(row.size());
    for (const auto& s : row) {
      ints.push_back(boost::multiprecision::numerator(s) * (scale / boost::multiprecision::denominator(s)));
    }
    out.push_back(std::move(ints));
  }
  return out;
}

std::size_t bareiss_rank(std::vector<std::vector<Integer>> a, std::size_t cols) {
  const std::size_t rows = a.size();
  Integer prev = 1;
  Integer tmp;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);

    mpz_ptr pivot = a[r][c].backend().data();
    mpz_srcptr divisor = prev.backend().data();
    for (std::size_t i = r + 1; i < rows; ++i) {
      mpz_ptr lead = a[i][c].backend().data();
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a[i][j] = (pivot * a[i][j] - lead * a[r][j]) / prev, exact
        mpz_ptr target = a[i][j].backend().data();
        mpz_mul(target, target, pivot);
        mpz_submul(target, lead, a[r][j].backend().data());
        mpz_divexact(target, target, divisor);
      }
      mpz_set_ui(lead, 0);
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

}  // namespace

std::string to_fraction_string(const Scalar& s) {
  return boost::multiprecision::numerator(s).str() + "/" + boost::multiprecision::denominator(s).str();
}

Scalar parse_fraction(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Scalar(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den.is_zero()) throw Error(ErrorCode::invalid_input, "zero denominator in '" + text + "'");
    return Scalar(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorCode::invalid_input, "not a rational number: '" + text + "'");
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
  if (rows.empty()) return {};
  RationalMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) {
      throw Error(ErrorCode::dimension_mismatch, "row " + std::to_string(r) + " has length " +
                                                     std::to_string(rows[r].size()) + ", expected " +
                                                     std::to_string(m.cols_));
    }
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + static_cast<std::ptrdiff_t>(r * m.cols_));
  }
  return m;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalVector RationalMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error(ErrorCode::dimension_mismatch, "vector length does not match columns");
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& e = (*this)(r, c);
      if (!e.is_zero() && !v[c].is_zero()) out[r] += e * v[c];
    }
  }
  return out;
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::dimension_mismatch, "matrix product shapes");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

std::size_t rank(const RationalMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  return bareiss_rank(integer_rows(m), m.cols());
}

std::vector<RationalVector> nullspace_basis(const RationalMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<RationalVector> a;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    if (!row_is_zero(row)) a.emplace_back(row.begin(), row.end());
  }

  // reduced row echelon form
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[r]);
    const Scalar inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) {
      if (!a[r][j].is_zero()) a[r][j] *= inv;
    }
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Scalar factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!a[r][j].is_zero()) a[i][j] -= factor * a[r][j];
      }
    }
    pivot_cols.push_back(c);
    ++r;
  }

  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;

  std::vector<RationalVector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RationalVector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t span_dim(const std::vector<RationalVector>& vectors) {
  if (vectors.empty()) return 0;
  return rank(RationalMatrix::from_rows(vectors));
}

}  // namespace posetlie
