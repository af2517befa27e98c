#include <gtest/gtest.h>

#include "rigiditykit/error.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(Degree, ZeroPolynomialIsNegInf) {
  EXPECT_TRUE(UPoly().degree().is_neg_inf());
  EXPECT_LT(UPoly().degree(), Degree(0));
  EXPECT_LT(Degree::neg_inf(), Degree(-1000));
  EXPECT_TRUE((Degree::neg_inf() + Degree(5)).is_neg_inf());
  EXPECT_EQ((UPoly() * P("t^3")).degree(), Degree::neg_inf());
  EXPECT_EQ(P("t^3 + 1").degree(), Degree(3));
  EXPECT_THROW((void)Degree::neg_inf().value(), Error);
}

TEST(UPoly, Derivative) {
  EXPECT_EQ(derivative(P("t^3 + 2*t")), P("3*t^2 + 2"));
  EXPECT_EQ(derivative(P("5")), UPoly());
  EXPECT_EQ(derivative(P("1/2*t^2")), P("t"));
}

TEST(UPoly, DivMod) {
  const auto [q, r] = divmod(P("t^3 - 2*t + 5"), P("t - 1"));
  EXPECT_EQ(q, P("t^2 + t - 1"));
  EXPECT_EQ(r, P("4"));
  EXPECT_TRUE(divides(P("t+1"), P("t^2 - 1")));
  EXPECT_FALSE(divides(P("t+2"), P("t^2 - 1")));
  EXPECT_EQ(code_of([] { divmod(P("t"), UPoly()); }), ErrorCode::DivisionByZero);
}

TEST(UPoly, GcdExamples) {
  EXPECT_EQ(gcd(P("t^2 - 1"), P("t^2 - 2*t + 1")), P("t - 1"));
  EXPECT_EQ(gcd(P("t"), UPoly()), P("t"));
  EXPECT_EQ(gcd(P("t^2 + 1"), P("t + 1")), P("1"));
  EXPECT_EQ(gcd(P("6*t + 6"), P("4*t^2 - 4")), P("t + 1"));
  EXPECT_EQ(code_of([] { gcd(UPoly(), UPoly()); }), ErrorCode::GcdOfZeros);
}

TEST(UPoly, GcdWithLargeCoefficients) {
  const UPoly common = P("123456789012345*t^3 - 98765432109876*t + 1/7");
  const UPoly a = common * P("t^5 + 3000000007*t - 2");
  const UPoly b = common * P("17*t^4 - 1/3*t^2 + 999999999989");
  EXPECT_EQ(gcd(a, b), common.monic());
  EXPECT_EQ(to_coeffs(gcd(a, b)), oracle::gcd(to_coeffs(a), to_coeffs(b)));
}

TEST(UPoly, RadicalExamples) {
  EXPECT_EQ(radical(P("(t-1)^3")), P("t - 1"));
  EXPECT_EQ(radical(P("t^4 - t^2")), P("t^3 - t"));
  EXPECT_EQ(radical(P("t^2 + 1")), P("t^2 + 1"));
  EXPECT_EQ(radical(P("-3*t^2")), P("t"));
  EXPECT_EQ(code_of([] { radical(UPoly()); }), ErrorCode::RadicalOfZero);
}

TEST(UPoly, DistinctRootCountExamples) {
  EXPECT_EQ(distinct_root_count(P("t^4 - t^2")), 3u);
  EXPECT_EQ(distinct_root_count(P("(t-1)^3")), 1u);
  EXPECT_EQ(distinct_root_count(P("7")), 0u);
  EXPECT_EQ(distinct_root_count(P("t^2 + 1")), 2u);
  EXPECT_EQ(code_of([] { distinct_root_count(UPoly()); }), ErrorCode::RootCountOfZero);
}

TEST(UPoly, PairwiseCoprime) {
  std::vector<UPoly> a{P("t"), P("t + 1"), P("t - 1")};
  EXPECT_TRUE(pairwise_coprime(a).coprime);
  std::vector<UPoly> b{P("t^2"), P("t^2 - t")};
  const auto r = pairwise_coprime(b);
  EXPECT_FALSE(r.coprime);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(r.witness->first, 0u);
  EXPECT_EQ(r.witness->second, 1u);
  EXPECT_EQ(r.witness_gcd, P("t"));
  std::vector<UPoly> c{P("t^2"), P("1 - t^2"), P("-1")};
  EXPECT_TRUE(pairwise_coprime(c).coprime);
  std::vector<UPoly> z{P("t"), UPoly()};
  EXPECT_EQ(code_of([&] { pairwise_coprime(z); }), ErrorCode::ZeroEntry);
}

TEST(UPoly, SetGcd) {
  std::vector<UPoly> a{P("t^2 - 1"), P("t - 1"), P("t^2 - 2*t + 1")};
  EXPECT_EQ(set_gcd(a), P("t - 1"));
  std::vector<UPoly> b{P("t"), P("1")};
  EXPECT_EQ(set_gcd(b), P("1"));
  std::vector<UPoly> c{P("2*t + 2"), P("4*t + 4")};
  EXPECT_EQ(set_gcd(c), P("t + 1"));
  std::vector<UPoly> z{UPoly(), UPoly()};
  EXPECT_EQ(code_of([&] { set_gcd(z); }), ErrorCode::GcdOfZeros);
}

TEST(UPolyOracle, GcdMatchesEuclid) {
  Rng rng(101);
  for (int i = 0; i < 300; ++i) {
    const UPoly c = gen_random_upoly(rng, 4, 20);
    const UPoly a = gen_random_upoly(rng, 8, 20) * c;
    const UPoly b = gen_random_upoly(rng, 8, 20) * c;
    if (a.is_zero() && b.is_zero()) continue;
    const UPoly g = gcd(a, b);
    EXPECT_EQ(to_coeffs(g), oracle::gcd(to_coeffs(a), to_coeffs(b))) << format_upoly(a) << " ; " << format_upoly(b);
    EXPECT_TRUE(divides(g, a));
    EXPECT_TRUE(divides(g, b));
    EXPECT_EQ(g.leading(), Rat(1));
  }
}

TEST(UPolyOracle, RootCountMatchesKnownRoots) {
  Rng rng(202);
  for (int i = 0; i < 300; ++i) {
    const auto kr = random_known_roots(rng, 6);
    const UPoly p = from_coeffs(kr.poly);
    EXPECT_EQ(distinct_root_count(p), kr.distinct) << format_upoly(p);
    const auto r = to_coeffs(radical(p));
    EXPECT_EQ(oracle::gcd(r, oracle::derivative(r)).size(), 1u);
  }
}

TEST(UPolyProperty, GcdIsCommutativeAndAssociative) {
  Rng rng(303);
  for (int i = 0; i < 200; ++i) {
    const UPoly c = gen_random_upoly(rng, 3, 5);
    const UPoly a = gen_random_upoly(rng, 5, 5) * c;
    const UPoly b = gen_random_upoly(rng, 5, 5) * c;
    const UPoly d = gen_random_upoly(rng, 5, 5) * c;
    EXPECT_EQ(gcd(a, b), gcd(b, a));
    EXPECT_EQ(gcd(gcd(a, b), d), gcd(a, gcd(b, d)));
  }
}

TEST(UPolyProperty, RadicalLaws) {
  Rng rng(404);
  for (int i = 0; i < 200; ++i) {
    const UPoly p = gen_random_upoly(rng, 10, 9);
    const UPoly r = radical(p);
    EXPECT_LE(r.degree(), p.degree());
    EXPECT_EQ(radical(r), r);
    EXPECT_TRUE(gcd(r, derivative(r)).is_constant());
    EXPECT_EQ(distinct_root_count(p.pow(3)), distinct_root_count(p));
  }
}

TEST(UPoly, RingOperations) {
  EXPECT_EQ(P("(t+1)^2"), P("t^2 + 2*t + 1"));
  EXPECT_EQ(P("t").pow(0), P("1"));
  EXPECT_EQ(P("t^2 + 1").eval(Rat(1, 2)), Rat(5, 4));
  EXPECT_EQ(P("2*t + 4").monic(), P("t + 2"));
  EXPECT_EQ(-P("t - 1"), P("1 - t"));
  EXPECT_EQ(P("t") - P("t"), UPoly());
}
