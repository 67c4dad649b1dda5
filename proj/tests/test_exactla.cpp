#include <random>

#include "catch_amalgamated.hpp"
#include "posetlie/algebra.hpp"
#include "posetlie/breadth.hpp"
#include "posetlie/exactla.hpp"

using namespace posetlie;

namespace {

// Plain rational Gaussian elimination, the cross-check for the
// fraction-free route.
std::size_t naive_rank(const RationalMatrix& m) {
  std::vector<RationalVector> a;
  for (std::size_t r = 0; r < m.rows(); ++r) a.emplace_back(m.row(r).begin(), m.row(r).end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      const Scalar f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

RationalMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, double density) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  std::bernoulli_distribution keep(density);
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (keep(rng)) m(r, c) = Scalar(num(rng), den(rng));
  return m;
}

// Product of random factors, so the rank is often deficient.
RationalMatrix random_low_rank(std::mt19937_64& rng, std::size_t rows, std::size_t cols, std::size_t inner) {
  return random_matrix(rng, rows, inner, 0.8) * random_matrix(rng, inner, cols, 0.8);
}

}  // namespace

TEST_CASE("scalars are canonical") {
  const Scalar s(Integer(6), Integer(-4));
  CHECK(to_fraction_string(s) == "-3/2");
  CHECK(to_fraction_string(Scalar(0)) == "0/1");
  CHECK(parse_fraction("4/8") == Scalar(1, 2));
  CHECK(parse_fraction("-7") == Scalar(-7));
  CHECK(parse_fraction("6/-4") == Scalar(-3, 2));
  CHECK_THROWS_AS(parse_fraction("1/0"), Error);
  CHECK_THROWS_AS(parse_fraction("abc"), Error);
}

TEST_CASE("rank examples") {
  CHECK(rank(RationalMatrix(0, 0)) == 0);
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  CHECK(rank(RationalMatrix(2, 3)) == 0);

  const auto a = build_algebra(build_family(FamilyDescriptor::chain(5)), AlgebraVariant::nilpotent);
  CHECK(rank(ad_matrix(a, paper_witness(a))) == 6);

  // rational entries
  auto m = RationalMatrix::from_rows({{Scalar(1, 2), Scalar(1, 3)}, {Scalar(3, 2), Scalar(1)}});
  CHECK(rank(m) == 1);
}

TEST_CASE("nullspace examples") {
  CHECK(nullspace_basis(RationalMatrix::identity(2)).empty());
  CHECK(nullspace_basis(RationalMatrix(2, 3)).size() == 3);

  // stacked ad matrices of the nilpotent algebra over 1 < 2 < 3, 4
  const auto a = build_algebra(build_family(FamilyDescriptor::double_fan(1, 1, 2)), AlgebraVariant::nilpotent);
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const auto ad = ad_matrix(a, a.basis_element(i));
    for (std::size_t r = 0; r < ad.rows(); ++r) rows.emplace_back(ad.row(r).begin(), ad.row(r).end());
  }
  CHECK(nullspace_basis(RationalMatrix::from_rows(rows)).size() == 2);
}

TEST_CASE("span_dim examples") {
  CHECK(span_dim({}) == 0);
  CHECK(span_dim({{1, 0}, {0, 1}, {1, 1}}) == 2);
  CHECK_THROWS_AS(span_dim({{1, 0}, {1}}), Error);

  const auto a = build_algebra(build_family(FamilyDescriptor::chain(4)), AlgebraVariant::nilpotent);
  std::vector<RationalVector> brackets;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j)
      brackets.push_back(bracket(a, a.basis_element(i), a.basis_element(j)).coeffs);
  CHECK(span_dim(brackets) == 3);
}

TEST_CASE("rank properties on random matrices") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> dim(0, 7);
  for (int iter = 0; iter < 300; ++iter) {
    const std::size_t r = dim(rng), c = dim(rng), k = dim(rng);
    const auto a = iter % 2 ? random_low_rank(rng, r, c, k) : random_matrix(rng, r, c, 0.5);
    const auto rk = rank(a);
    CHECK(rk == naive_rank(a));
    CHECK(rk == rank(a.transpose()));

    const auto b = random_matrix(rng, c, dim(rng), 0.6);
    CHECK(rank(a * b) <= std::min(rk, rank(b)));

    const auto null = nullspace_basis(a);
    CHECK(null.size() == c - rk);
    for (const auto& v : null) {
      for (const auto& x : a.apply(v)) CHECK(x == 0);
    }
    if (!null.empty()) CHECK(span_dim(null) == null.size());
  }
}

TEST_CASE("large coefficients stay exact") {
  // rows 1..n of a Vandermonde-like matrix with huge entries, plus a
  // combination of two of them
  RationalMatrix m(6, 5);
  for (std::size_t r = 0; r < 5; ++r) {
    Scalar x = Scalar(1'000'003) * Scalar(static_cast<long>(r + 1));
    Scalar p = 1;
    for (std::size_t c = 0; c < 5; ++c, p *= x) m(r, c) = p;
  }
  for (std::size_t c = 0; c < 5; ++c) m(5, c) = Scalar(7, 3) * m(1, c) - Scalar(11) * m(4, c);
  CHECK(rank(m) == 5);
  CHECK(naive_rank(m) == 5);
  CHECK(nullspace_basis(m).empty());
  CHECK(nullspace_basis(m.transpose()).size() == 1);
}
