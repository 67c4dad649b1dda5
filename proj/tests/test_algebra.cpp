#include <random>

#include "catch_amalgamated.hpp"
#include "posetlie/algebra.hpp"

using namespace posetlie;

namespace {

FinitePoset star() { return from_covers(4, {{0, 1}, {1, 2}, {1, 3}}); }

AlgebraElement unit(const LiePosetAlgebra& a, const std::string& p, const std::string& q, long c = 1) {
  AlgebraElement x = a.zero();
  x.coeffs[*a.unit_index(*a.poset().find_label(p), *a.poset().find_label(q))] = c;
  return x;
}

AlgebraElement add(AlgebraElement x, const AlgebraElement& y) {
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) x.coeffs[i] += y.coeffs[i];
  return x;
}

AlgebraElement random_small(const LiePosetAlgebra& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
  AlgebraElement x = a.zero();
  for (auto& c : x.coeffs) c = Scalar(num(rng), den(rng));
  return x;
}

std::vector<LiePosetAlgebra> test_algebras() {
  std::vector<FinitePoset> posets{star(), antichain(1), antichain(3),
                                  build_family(FamilyDescriptor::chain(4)),
                                  build_family(FamilyDescriptor::grid(2, 3)),
                                  build_family(FamilyDescriptor::tree(2, 3)),
                                  build_family(FamilyDescriptor::double_fan(2, 1, 2)),
                                  build_family(FamilyDescriptor::double_fan(3, 2, 2))};
  for (std::uint64_t s = 1; s <= 6; ++s) posets.push_back(random_poset(5, 0.5, s));
  std::vector<LiePosetAlgebra> out;
  for (const auto& p : posets) {
    for (auto v : {AlgebraVariant::full, AlgebraVariant::type_a, AlgebraVariant::nilpotent}) {
      out.push_back(build_algebra(p, v));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("build examples") {
  const auto full = build_algebra(star(), AlgebraVariant::full);
  CHECK(full.dim() == 9);

  const auto heis = build_algebra(build_family(FamilyDescriptor::chain(3)), AlgebraVariant::nilpotent);
  REQUIRE(heis.dim() == 3);
  int nonzero = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (!heis.structure(i, j).empty()) ++nonzero;
  CHECK(nonzero == 1);
  CHECK(bracket(heis, unit(heis, "1", "2"), unit(heis, "2", "3")) == unit(heis, "1", "3"));

  const auto flat = build_algebra(antichain(3), AlgebraVariant::type_a);
  CHECK(flat.dim() == 2);
  CHECK(flat.structure(0, 1).empty());

  CHECK(build_algebra(antichain(1), AlgebraVariant::type_a).dim() == 0);
  CHECK_THROWS_AS(build_algebra(antichain(0), AlgebraVariant::type_a), Error);
}

TEST_CASE("basis order") {
  const auto a = build_algebra(star(), AlgebraVariant::type_a);
  REQUIRE(a.dim() == 8);
  CHECK(a.basis()[0] == BasisElement::unit(0, 1));
  CHECK(a.basis()[4] == BasisElement::unit(1, 3));
  CHECK(a.basis()[5] == BasisElement::traceless(1));
  CHECK(a.basis()[7] == BasisElement::traceless(3));
}

TEST_CASE("bracket examples") {
  const auto a = build_algebra(star(), AlgebraVariant::type_a);
  // 1/2 (E_{1,1} - E_{2,2}) is half the traceless basis element for 2
  AlgebraElement h = a.zero();
  h.coeffs[5] = Scalar(1, 2);
  CHECK(bracket(a, h, unit(a, "1", "2")) == unit(a, "1", "2"));

  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const auto x = random_small(a, rng);
    CHECK(bracket(a, x, x).is_zero());
  }

  const auto other = build_algebra(star(), AlgebraVariant::type_a);
  CHECK_THROWS_AS(bracket(a, a.zero(), other.zero()), Error);
}

TEST_CASE("ad_matrix examples") {
  const auto heis = build_algebra(build_family(FamilyDescriptor::chain(3)), AlgebraVariant::nilpotent);
  const auto ad = ad_matrix(heis, unit(heis, "1", "2"));
  CHECK(rank(ad) == 1);
  CHECK(ad(*heis.unit_index(0, 2), *heis.unit_index(1, 2)) == 1);
  CHECK(ad_matrix(heis, heis.zero()).is_zero());

  // sum_{i != 1} i (E_{1,1} - E_{i,i})
  const auto full = build_algebra(star(), AlgebraVariant::full);
  AlgebraElement x = full.zero();
  for (ElementId e = 1; e < 4; ++e) {
    x.coeffs[*full.unit_index(0, 0)] += static_cast<long>(e + 1);
    x.coeffs[*full.unit_index(e, e)] = -static_cast<long>(e + 1);
  }
  CHECK(rank(ad_matrix(full, x)) == 5);
}

TEST_CASE("derived algebra and center examples") {
  CHECK(derived_dim(build_algebra(star(), AlgebraVariant::full)) == 5);
  CHECK(derived_dim(build_algebra(build_family(FamilyDescriptor::chain(4)), AlgebraVariant::nilpotent)) == 3);
  CHECK(derived_dim(build_algebra(antichain(4), AlgebraVariant::nilpotent)) == 0);

  CHECK(center_dim(build_algebra(build_family(FamilyDescriptor::double_fan(1, 1, 2)), AlgebraVariant::nilpotent)) == 2);
  const auto heis = build_algebra(build_family(FamilyDescriptor::chain(3)), AlgebraVariant::nilpotent);
  const auto z = center_basis(heis);
  REQUIRE(z.size() == 1);
  CHECK(span_dim({z[0].coeffs, unit(heis, "1", "3").coeffs}) == 1);
  CHECK(center_dim(build_algebra(antichain(2), AlgebraVariant::full)) == 2);
}

TEST_CASE("element_breadth examples") {
  const auto c4 = build_algebra(build_family(FamilyDescriptor::chain(4)), AlgebraVariant::nilpotent);
  CHECK(element_breadth(c4, c4.zero()) == 0);
  CHECK(element_breadth(c4, add(add(unit(c4, "1", "2"), unit(c4, "2", "3")), unit(c4, "3", "4"))) == 3);

  const auto fan = build_algebra(build_family(FamilyDescriptor::double_fan(4, 2, 3)), AlgebraVariant::nilpotent);
  AlgebraElement x = add(unit(fan, "b_1", "m_1"), unit(fan, "b_2", "m_2"));
  x = add(x, unit(fan, "m_1", "t_1", -1));
  x = add(x, unit(fan, "m_2", "t_2", -1));
  CHECK(element_breadth(fan, x) == 10);
}

TEST_CASE("matrix round trip") {
  const auto a = build_algebra(star(), AlgebraVariant::type_a);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto x = random_small(a, rng);
    CHECK(a.from_matrix(a.to_matrix(x)) == x);
  }
  RationalMatrix bad(4, 4);
  bad(2, 3) = 1;  // 3 and 4 are incomparable
  CHECK_THROWS_AS(a.from_matrix(bad), Error);
  RationalMatrix traced(4, 4);
  traced(0, 0) = 1;
  CHECK_THROWS_AS(a.from_matrix(traced), Error);
  CHECK(a.describe(a.zero()) == "0");
  CHECK(a.describe(unit(a, "1", "2", -2)) == "-2 E_{1,2}");
}

TEST_CASE("algebra identities over sample algebras") {
  std::mt19937_64 rng(17);
  for (const auto& a : test_algebras()) {
    const FinitePoset& p = a.poset();
    const std::size_t rel = p.strict_relations().size();
    switch (a.variant()) {
      case AlgebraVariant::full:
        CHECK(a.dim() == rel + p.size());
        CHECK(derived_dim(a) == rel);
        break;
      case AlgebraVariant::type_a:
        CHECK(a.dim() == rel + p.size() - 1);
        CHECK(derived_dim(a) == rel);
        break;
      case AlgebraVariant::nilpotent: {
        CHECK(a.dim() == rel);
        CHECK(derived_dim(a) == p.non_covering_relations().size());

        // center = span{E_{p,q} : p < q in Rel_E}, both inclusions
        const auto rel_e = p.extremal_relations();
        const auto z = center_basis(a);
        CHECK(z.size() == rel_e.size());
        std::vector<char> in_rel_e(a.dim(), 0);
        for (const auto& r : rel_e) in_rel_e[*a.unit_index(r.lesser, r.greater)] = 1;
        for (const auto& v : z) {
          for (std::size_t i = 0; i < a.dim(); ++i) {
            if (!in_rel_e[i]) CHECK(v.coeffs[i] == 0);
          }
        }
        for (const auto& r : rel_e) {
          const auto e = a.basis_element(*a.unit_index(r.lesser, r.greater));
          for (std::size_t j = 0; j < a.dim(); ++j) CHECK(bracket(a, e, a.basis_element(j)).is_zero());
        }
        break;
      }
    }

    if (a.dim() == 0) continue;
    for (int t = 0; t < 100; ++t) {
      const auto x = random_small(a, rng), y = random_small(a, rng), z = random_small(a, rng);
      const auto jacobi = add(add(bracket(a, x, bracket(a, y, z)), bracket(a, y, bracket(a, z, x))),
                              bracket(a, z, bracket(a, x, y)));
      CHECK(jacobi.is_zero());

      auto yx = bracket(a, y, x);
      for (auto& c : yx.coeffs) c = -c;
      CHECK(bracket(a, x, y) == yx);
    }

    // bracket table against the matrix commutator, and closure in the variant
    for (std::size_t i = 0; i < a.dim(); ++i) {
      for (std::size_t j = 0; j < a.dim(); ++j) {
        const auto x = a.to_matrix(a.basis_element(i)), y = a.to_matrix(a.basis_element(j));
        const auto xy = x * y, yx = y * x;
        RationalMatrix comm(xy.rows(), xy.cols());
        for (std::size_t r = 0; r < comm.rows(); ++r)
          for (std::size_t c = 0; c < comm.cols(); ++c) comm(r, c) = xy(r, c) - yx(r, c);
        const auto b = bracket(a, a.basis_element(i), a.basis_element(j));
        CHECK(a.to_matrix(b) == comm);
        for (std::size_t d = 0; d < comm.rows(); ++d) CHECK(comm(d, d) == 0);
      }
    }
  }
}
