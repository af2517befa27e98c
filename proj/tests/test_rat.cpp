#include <gtest/gtest.h>

#include "rigiditykit/error.hpp"
#include "rigiditykit/rat.hpp"

using rigiditykit::ErrorCode;
using rigiditykit::Rat;

TEST(Rat, NormalizesOnConstruction) {
  EXPECT_EQ(Rat(4, 6), Rat(2, 3));
  EXPECT_EQ(Rat(3, -6), Rat(-1, 2));
  EXPECT_EQ(Rat(4, 2).str(), "2");
}

TEST(Rat, ParseAndPrint) {
  EXPECT_EQ(Rat::parse("20417/27720").str(), "20417/27720");
  EXPECT_EQ(Rat::parse("-3").str(), "-3");
  EXPECT_EQ(Rat::parse("1").fraction_str(), "1/1");
  EXPECT_EQ(Rat::parse("6/4").fraction_str(), "3/2");
  EXPECT_THROW(Rat::parse("1/0"), rigiditykit::Error);
  EXPECT_THROW(Rat::parse("x"), rigiditykit::Error);
  EXPECT_THROW(Rat::parse("1.5"), rigiditykit::Error);
}

TEST(Rat, Arithmetic) {
  EXPECT_EQ(Rat(1, 6) + Rat(1, 3), Rat(1, 2));
  EXPECT_EQ(Rat(1, 2) - Rat(3, 4), Rat(-1, 4));
  EXPECT_EQ(Rat(2, 3) * Rat(9, 4), Rat(3, 2));
  EXPECT_EQ(Rat(2, 3) / Rat(4, 9), Rat(3, 2));
  EXPECT_EQ(Rat(-2, 3).pow(3), Rat(-8, 27));
  EXPECT_EQ(Rat(5).pow(0), Rat(1));
  try {
    (void)(Rat(1) / Rat(0));
    FAIL();
  } catch (const rigiditykit::Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DivisionByZero);
  }
}

TEST(Rat, ExactOrdering) {
  EXPECT_LT(Rat(20417, 27720), Rat(1));
  EXPECT_LE(Rat(1, 2), Rat(1, 2));
  EXPECT_GT(Rat(27, 55), Rat(49, 100));
  EXPECT_LT(Rat(-1), Rat(0));
}

TEST(Rat, HarmonicSumsAreExact) {
  Rat s;
  for (int k = 6; k <= 11; ++k) s += Rat(1, k);
  EXPECT_EQ(s, Rat(20417, 27720));
}
