#include <doctest.h>

#include "starcrit/enumerate.hpp"
#include "starcrit/structures.hpp"
#include "test_util.hpp"

using namespace starcrit;
using test::big;
using test::dhat;

namespace {

std::vector<BigInt> mat_apply(const IntMatrix &m, const std::vector<BigInt> &v) {
  std::vector<BigInt> out(m.rows(), BigInt(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace

TEST_CASE("dhat vectors sort, derive d0 and r0, and validate") {
  DhatVector fig1 = dhat({6, 3, 2, 2, 2, 1});  // unsorted on purpose
  CHECK(fig1.entries() == big({1, 2, 2, 2, 3, 6}));
  CHECK(fig1.d0() == 3);
  CHECK(fig1.r0() == 6);
  CHECK(fig1.leaf_r() == big({6, 3, 3, 3, 2, 1}));

  DhatVector ones = dhat({1, 1});
  CHECK(ones.d0() == 2);
  CHECK(ones.r0() == 1);
  CHECK(ones.leaf_r() == big({1, 1}));

  DhatVector triple = dhat({2, 3, 6});
  CHECK(triple.d0() == 1);
  CHECK(triple.r0() == 6);
  CHECK(triple.leaf_r() == big({3, 2, 1}));
}

TEST_CASE("invalid dhat vectors are rejected with the exact sum") {
  CHECK_THROWS_WITH_AS(dhat({2, 3, 5}), doctest::Contains("sum = 31/30"),
                       std::invalid_argument);
  CHECK_THROWS_AS(dhat({}), std::invalid_argument);
  CHECK_THROWS_AS(dhat({0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(dhat({-3}), std::invalid_argument);
}

TEST_CASE("dhat_to_structure produces a valid star labeling") {
  ArithmeticalStructure s = dhat_to_structure(dhat({1, 2, 2, 2, 3, 6}));
  CHECK(s.shape.kind == GraphKind::star);
  CHECK(s.d == big({1, 2, 2, 2, 3, 6, 3}));
  CHECK(s.r == big({6, 3, 3, 3, 2, 1, 6}));
  CHECK(validate(s).ok);
  CHECK(structure_to_dhat(s) == dhat({1, 2, 2, 2, 3, 6}));
}

TEST_CASE("validate reports the defining-equation violations") {
  // r scaled by 2: every vertex equation still balances, only gcd(r) trips
  ArithmeticalStructure scaled{{GraphKind::star, 2}, big({2, 2, 1}), big({2, 2, 4})};
  ValidationReport rep = validate(scaled);
  CHECK(!rep.ok);
  CHECK(rep.message.find("gcd(r) = 2") != std::string::npos);

  ArithmeticalStructure unbalanced{{GraphKind::star, 2}, big({2, 2, 1}), big({2, 2, 2})};
  ValidationReport rep0 = validate(unbalanced);
  CHECK(!rep0.ok);
  CHECK(rep0.message.find("vertex 0") != std::string::npos);

  ArithmeticalStructure wrong{{GraphKind::star, 2}, big({2, 3, 1}), big({1, 1, 2})};
  ValidationReport rep2 = validate(wrong);
  CHECK(!rep2.ok);
  CHECK(rep2.message.find("vertex") != std::string::npos);

  ArithmeticalStructure k4{{GraphKind::complete, 4}, big({1, 3, 5, 11}), big({6, 3, 2, 1})};
  CHECK(validate(k4).ok);
}

TEST_CASE("laplacian layouts") {
  IntMatrix lap = laplacian(dhat_to_structure(dhat({2, 2})));
  IntMatrix expect{{2, 0, -1}, {0, 2, -1}, {-1, -1, 1}};
  CHECK(lap == expect);

  ArithmeticalStructure k3{{GraphKind::complete, 3}, big({2, 2, 2}), big({1, 1, 1})};
  IntMatrix klap = laplacian(k3);
  IntMatrix kexpect{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}};
  CHECK(klap == kexpect);
}

TEST_CASE("r spans the kernel of the laplacian") {
  ArithmeticalStructure fig1 = dhat_to_structure(dhat({1, 2, 2, 2, 3, 6}));
  for (const BigInt &v : mat_apply(laplacian(fig1), fig1.r)) CHECK(v == 0);

  // and across a whole enumeration
  EnumSpec spec;
  spec.n = 4;
  enumerate_structures(spec, [&](const DhatVector &d) {
    ArithmeticalStructure s = dhat_to_structure(d);
    CHECK(validate(s).ok);
    for (const BigInt &v : mat_apply(laplacian(s), s.r)) CHECK(v == 0);
    return true;
  });
}

TEST_CASE("clique_star matches the worked figure") {
  ArithmeticalStructure k4{{GraphKind::complete, 4}, big({1, 3, 5, 11}), big({6, 3, 2, 1})};
  ArithmeticalStructure s4 = clique_star(k4);
  CHECK(s4.shape.kind == GraphKind::star);
  CHECK(s4.d == big({2, 4, 6, 12, 1}));
  CHECK(s4.r == big({6, 3, 2, 1, 12}));
  CHECK(validate(s4).ok);

  ArithmeticalStructure back = star_clique(s4);
  CHECK(back.d == k4.d);
  CHECK(back.r == k4.r);

  // Laplacian structure on K_4 becomes d-hat (4,4,4,4)
  ArithmeticalStructure klap{{GraphKind::complete, 4}, big({3, 3, 3, 3}), big({1, 1, 1, 1})};
  ArithmeticalStructure slap = clique_star(klap);
  CHECK(structure_to_dhat(slap) == dhat({4, 4, 4, 4}));
  CHECK(slap.d.back() == 1);
}

TEST_CASE("star_clique domain errors") {
  // center d-value must be 1
  ArithmeticalStructure fig1 = dhat_to_structure(dhat({1, 2, 2, 2, 3, 6}));
  CHECK_THROWS_WITH_AS(star_clique(fig1), doctest::Contains("center d-value must be 1"),
                       std::invalid_argument);
  // a d = 1 leaf has no complete-graph preimage (only reachable at n = 1)
  ArithmeticalStructure s1 = dhat_to_structure(dhat({1}));
  CHECK_THROWS_WITH_AS(star_clique(s1), doctest::Contains("no complete-graph preimage"),
                       std::invalid_argument);
  ArithmeticalStructure k2{{GraphKind::complete, 2}, big({1, 1}), big({1, 1})};
  CHECK_THROWS_AS(star_clique(k2), std::invalid_argument);
}

TEST_CASE("clique_star and star_clique are mutually inverse over the d0 = 1 slice") {
  EnumSpec spec;
  spec.n = 4;
  spec.d0_filter = BigInt(1);
  enumerate_structures(spec, [&](const DhatVector &d) {
    ArithmeticalStructure star = dhat_to_structure(d);
    ArithmeticalStructure complete = star_clique(star);
    CHECK(validate(complete).ok);
    ArithmeticalStructure again = clique_star(complete);
    CHECK(again.d == star.d);
    CHECK(again.r == star.r);
    return true;
  });
}

TEST_CASE("smallest star-clique case") {
  ArithmeticalStructure s = dhat_to_structure(dhat({2, 2}));
  ArithmeticalStructure k2 = star_clique(s);
  CHECK(k2.d == big({1, 1}));
  CHECK(k2.r == big({1, 1}));
  CHECK(validate(k2).ok);
}
