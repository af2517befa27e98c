#include <gtest/gtest.h>

#include "rigiditykit/error.hpp"
#include "rigiditykit/mterm.hpp"
#include "rigiditykit/rigidity.hpp"
#include "rigiditykit/trinomial.hpp"
#include "support.hpp"

using namespace testsupport;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error";
  return ErrorCode::InvalidArgument;
}

const char* kHypersurface = "X1^6*X2^7 + Y1^8*Y2^9 + Z1^10*Z2^11";

TrinomialData two_relation_data() {
  TrinomialData d;
  d.a = {{Rat(-1), Rat(-1)}, {Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-2)}};
  d.n = {2, 2, 1, 2};
  d.l = {{6, 9}, {6, 12}, {7}, {8, 9}};
  d.names = {{"Z1", "Z2"}, {"X1", "X2"}, {"Y"}, {"W1", "W2"}};
  return d;
}

}  // namespace

TEST(MTerm, Validate) {
  const MTermForm f = validate_mterm(M(kHypersurface));
  ASSERT_EQ(f.m(), 3u);
  for (const auto& t : f.terms) EXPECT_EQ(t.coefficient, Rat(1));
  EXPECT_EQ(f.terms[0].factors[0].variable, "X1");
  EXPECT_EQ(f.terms[0].factors[0].exponent, 6u);
  EXPECT_EQ(f.terms[2].factors[1].exponent, 11u);
  EXPECT_EQ(f.expand(), M(kHypersurface));
}

TEST(MTerm, ValidateErrors) {
  try {
    validate_mterm(M("X^2 + X*Y + Z^2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::SharedVariable);
    EXPECT_EQ(e.detail(), "X");
  }
  EXPECT_EQ(code_of([] { validate_mterm(M("X^2 + Y^2")); }), ErrorCode::TooFewTerms);
  EXPECT_EQ(code_of([] { validate_mterm(M("X^2 + Y^2 + 1")); }), ErrorCode::ConstantTerm);
  EXPECT_EQ(code_of([] { validate_mterm(MPoly()); }), ErrorCode::InvalidArgument);
}

TEST(MTermProperty, ValidateExpandRoundTrip) {
  Rng rng(1212);
  for (int i = 0; i < 100; ++i) {
    MPoly f;
    const auto m = uniform_int(rng, 3, 6);
    for (std::int64_t t = 0; t < m; ++t) {
      Monomial mono;
      const auto nv = uniform_int(rng, 1, 3);
      for (std::int64_t v = 0; v < nv; ++v) {
        mono = mono * Monomial::variable("V" + std::to_string(t) + "_" + std::to_string(v),
                                         static_cast<std::uint32_t>(uniform_int(rng, 1, 12)));
      }
      Rat c = random_rat(rng, 9);
      if (c.is_zero()) c = Rat(1);
      f += MPoly::term(c, mono);
    }
    EXPECT_EQ(validate_mterm(f).expand(), f);
  }
}

TEST(Rigidity, HypersurfaceIsRigid) {
  const Certificate c = certify_rigidity(validate_mterm(M(kHypersurface)), true);
  EXPECT_EQ(c.verdict, Verdict::Rigid);
  ASSERT_EQ(c.exponent_sums.size(), 1u);
  EXPECT_EQ(c.exponent_sums[0].sum, Rat(20417, 27720));
  EXPECT_EQ(c.exponent_sums[0].threshold, Rat(1));
  EXPECT_TRUE(c.all_checks_passed());
  EXPECT_EQ(c.ml_generators, (std::vector<VarName>{"X1", "X2", "Y1", "Y2", "Z1", "Z2"}));
  EXPECT_TRUE(c.sml_all);
}

TEST(Rigidity, FourTermForm) {
  const Certificate c = certify_rigidity(validate_mterm(M("X^10 + Y^10*Z^11 + V^10 + W^10")), true);
  EXPECT_EQ(c.verdict, Verdict::Rigid);
  EXPECT_EQ(c.exponent_sums[0].sum, Rat(27, 55));
  EXPECT_EQ(c.exponent_sums[0].threshold, Rat(1, 2));
}

TEST(Rigidity, QuadricInconclusive) {
  const Certificate c = certify_rigidity(validate_mterm(M("X^2 + Y^2 + Z^2")), true);
  EXPECT_EQ(c.verdict, Verdict::Inconclusive);
  EXPECT_EQ(c.exponent_sums[0].sum, Rat(3, 2));
  EXPECT_TRUE(c.ml_generators.empty());
}

TEST(Rigidity, PrimalityIsAnAssumption) {
  const MTermForm f = validate_mterm(M(kHypersurface));
  const Certificate with = certify_rigidity(f, true);
  const Certificate without = certify_rigidity(f, false);
  EXPECT_EQ(without.verdict, Verdict::Inconclusive);
  EXPECT_TRUE(without.all_checks_passed());
  EXPECT_EQ(with.assumptions, (std::vector<std::string>{"F prime (asserted)"}));
  EXPECT_EQ(without.assumptions, (std::vector<std::string>{"F prime (not asserted)"}));
}

TEST(RigidityProperty, CoefficientScalingChangesNothing) {
  Rng rng(1313);
  for (const char* text : {kHypersurface, "X^10 + Y^10*Z^11 + V^10 + W^10", "X^2 + Y^2 + Z^2", "A^3 + B^3 + C^3"}) {
    const MPoly f = M(text);
    for (int i = 0; i < 10; ++i) {
      Rat s = random_rat(rng, 20);
      if (s.is_zero()) s = Rat(-7, 3);
      EXPECT_EQ(certify_rigidity(validate_mterm(f * s), true).verdict, certify_rigidity(validate_mterm(f), true).verdict);
    }
  }
}

TEST(MlContainment, Examples) {
  const MTermForm f = validate_mterm(M(kHypersurface));
  const auto ml = ml_containment(f);
  EXPECT_EQ(ml.generators.size(), 6u);
  EXPECT_TRUE(ml.sml_all);
  const auto extra = ml_containment(f, std::set<VarName>{"X1", "X2", "Y1", "Y2", "Z1", "Z2", "T"});
  EXPECT_EQ(extra.generators.size(), 6u);
  EXPECT_FALSE(extra.sml_all);
  EXPECT_EQ(code_of([] { ml_containment(validate_mterm(M("X^2 + Y^2 + Z^2"))); }), ErrorCode::NotApplicable);
}

TEST(SemiRigid, BinomialFourthPower) {
  const MPoly f = M("(X-Y)^4 + V^4*W^5 + Z^4");
  const auto subst = parse_subst("U = X - Y; U2 = X + Y");
  const Certificate c = detect_semirigid(f, subst, true, std::set<VarName>{"X", "Y", "Z", "V", "W"});
  EXPECT_EQ(c.verdict, Verdict::SemiRigid);
  ASSERT_TRUE(c.split.has_value());
  EXPECT_EQ(c.split->core, M("U^4 + V^4*W^5 + Z^4"));
  EXPECT_EQ(c.split->free_variables, (std::vector<VarName>{"U2"}));
  EXPECT_EQ(c.exponent_sums[0].sum, Rat(19, 20));
  EXPECT_NE(c.notes.find("U2"), std::string::npos);
}

TEST(SemiRigid, NoFreeVariable) {
  const Certificate c = detect_semirigid(M("X^4 + V^4*W^5 + Z^4"), std::nullopt, true);
  EXPECT_EQ(c.verdict, Verdict::Inconclusive);
  EXPECT_FALSE(c.split.has_value());
}

TEST(SemiRigid, ExtraGenerator) {
  const Certificate c =
      detect_semirigid(M("X^4 + Y^4 + Z^4"), std::nullopt, true, std::set<VarName>{"X", "Y", "Z", "T"});
  EXPECT_EQ(c.verdict, Verdict::SemiRigid);
  EXPECT_EQ(c.exponent_sums[0].sum, Rat(3, 4));
  EXPECT_EQ(c.split->free_variables, (std::vector<VarName>{"T"}));
  EXPECT_EQ(c.assumptions, (std::vector<std::string>{"F prime (asserted)"}));
}

TEST(SemiRigid, TwoFreeGeneratorsAreNotSemiRigid) {
  const Certificate c =
      detect_semirigid(M("X^4 + Y^4 + Z^4"), std::nullopt, true, std::set<VarName>{"X", "Y", "Z", "S", "T"});
  EXPECT_EQ(c.verdict, Verdict::Inconclusive);
}

TEST(SemiRigid, Errors) {
  const MPoly f = M("X^4 + Y^4 + Z^4");
  EXPECT_EQ(code_of([&] { detect_semirigid(f, std::map<VarName, MPoly>{{"X", M("U^2")}}, true); }),
            ErrorCode::BadSubstitution);
  EXPECT_EQ(code_of([&] {
              detect_semirigid(f, std::map<VarName, MPoly>{{"X", M("U + V")}, {"Y", M("U + V")}}, true);
            }),
            ErrorCode::BadSubstitution);
  EXPECT_EQ(code_of([&] { detect_semirigid(f, std::nullopt, true, std::set<VarName>{"X", "Y"}); }),
            ErrorCode::UnknownVariable);
}

TEST(Trinomial, Alpha) {
  const TrinomialData d = two_relation_data();
  EXPECT_EQ(alpha(d, 0, 1), Rat(1));
  EXPECT_EQ(alpha(d, 1, 2), Rat(1));
  EXPECT_EQ(alpha(d, 2, 0), Rat(1));
  EXPECT_EQ(alpha(d, 2, 3), Rat(1));
  EXPECT_EQ(alpha(d, 3, 1), Rat(2));
  EXPECT_EQ(alpha(d, 1, 0), Rat(-1));
}

TEST(Trinomial, Relations) {
  const auto g = build_trinomial_relations(two_relation_data());
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0], M("X1^6*X2^12 + Y^7 + Z1^6*Z2^9"));
  EXPECT_EQ(g[1], M("X1^6*X2^12 + 2*Y^7 + W1^8*W2^9"));

  TrinomialData simple;
  simple.a = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}};
  simple.n = {1, 1, 1};
  simple.l = {{2}, {2}, {2}};
  const auto h = build_trinomial_relations(simple);
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0], M("T01^2 + T11^2 + T21^2"));
}

TEST(Trinomial, TwoRelationVariety) {
  const Certificate c = certify_trinomial_variety(two_relation_data(), true);
  EXPECT_EQ(c.verdict, Verdict::Rigid);
  ASSERT_EQ(c.exponent_sums.size(), 2u);
  EXPECT_EQ(c.exponent_sums[0].sum, Rat(169, 252));
  EXPECT_EQ(c.exponent_sums[1].sum, Rat(317, 504));
  ASSERT_TRUE(c.factoriality.has_value());
  EXPECT_EQ(c.factoriality->d, (std::vector<std::uint64_t>{3, 6, 7, 1}));
  EXPECT_FALSE(c.factoriality->pairwise_coprime);
  EXPECT_NE(c.notes.find("non-factorial"), std::string::npos);
  EXPECT_TRUE(c.sml_all);
  EXPECT_EQ(certify_trinomial_variety(two_relation_data(), false).verdict, Verdict::Inconclusive);
}

TEST(Trinomial, SingleQuadricRelation) {
  TrinomialData d;
  d.a = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}};
  d.n = {1, 1, 1};
  d.l = {{2}, {2}, {2}};
  const Certificate c = certify_trinomial_variety(d, true);
  EXPECT_EQ(c.verdict, Verdict::Inconclusive);
  EXPECT_EQ(c.exponent_sums[0].sum, Rat(3, 2));
}

TEST(Trinomial, InvalidData) {
  TrinomialData d = two_relation_data();
  d.a[2] = d.a[1];
  EXPECT_EQ(code_of([&] { validate(d); }), ErrorCode::DegenerateData);
  TrinomialData e = two_relation_data();
  e.l[0].push_back(3);
  EXPECT_EQ(code_of([&] { validate(e); }), ErrorCode::InvalidData);
  TrinomialData f = two_relation_data();
  f.a.resize(2);
  f.n.resize(2);
  f.l.resize(2);
  f.names.resize(2);
  EXPECT_EQ(code_of([&] { validate(f); }), ErrorCode::InvalidData);
}

TEST(TrinomialProperty, AgreesWithHypersurfaceCertifier) {
  Rng rng(1414);
  for (int i = 0; i < 100; ++i) {
    TrinomialData d;
    d.a = {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}, {Rat(-1), Rat(-1)}};
    for (int b = 0; b < 3; ++b) {
      const auto n = static_cast<std::uint32_t>(uniform_int(rng, 1, 2));
      d.n.push_back(n);
      std::vector<std::uint32_t> row;
      for (std::uint32_t j = 0; j < n; ++j) row.push_back(static_cast<std::uint32_t>(uniform_int(rng, 1, 9)));
      d.l.push_back(row);
    }
    const Certificate t = certify_trinomial_variety(d, true);
    const Certificate h = certify_rigidity(validate_mterm(build_trinomial_relations(d)[0]), true);
    EXPECT_EQ(t.verdict, h.verdict);
    EXPECT_EQ(t.exponent_sums[0].sum, h.exponent_sums[0].sum);
  }
}
