#include "apolar/strassen.hpp"

#include "common.hpp"

using namespace apolar;
using testutil::P;
using testutil::T;

TEST(Strassen, TwoMonomials) {
  auto r = strassen_rank(P("x0^2*x1 + y0*y1*y2"));
  EXPECT_EQ(r.verdict, Verdict::Certified);
  ASSERT_TRUE(r.total_rank);
  EXPECT_EQ(*r.total_rank, 7u);
  EXPECT_EQ(r.shared_e, 1u);
  ASSERT_EQ(r.summands.size(), 2u);
  EXPECT_EQ(r.summands[0].low, 3u);
  EXPECT_EQ(r.summands[1].low, 4u);
  for (const auto& s : r.summands) {
    EXPECT_TRUE(s.checks.disjoint);
    EXPECT_TRUE(s.checks.e_computable_certified);
    EXPECT_TRUE(s.checks.essential_vars_reduced);
    ASSERT_TRUE(s.checks.perp_e_zero);
    EXPECT_TRUE(*s.checks.perp_e_zero);
  }
  ASSERT_TRUE(r.joint_check);
  EXPECT_TRUE(r.joint_check->holds);
  EXPECT_EQ(r.joint_check->intersection_sum, 6u);
}

TEST(Strassen, PurePowers) {
  auto r = strassen_rank(P("x^5 + y^5"));
  EXPECT_EQ(r.verdict, Verdict::Certified);
  ASSERT_TRUE(r.total_rank);
  EXPECT_EQ(*r.total_rank, 2u);
  for (const auto& s : r.summands) {
    EXPECT_TRUE(s.pure_power);
    EXPECT_FALSE(s.checks.perp_e_zero);
  }
}

TEST(Strassen, FamilyPlusMonomialDegreeTen) {
  auto r = strassen_rank(P("x0^8*(x1^2 + x2^2) + y0*y1^4*y2^5"));
  EXPECT_EQ(r.verdict, Verdict::Certified);
  ASSERT_TRUE(r.total_rank);
  EXPECT_EQ(*r.total_rank, 48u);
  EXPECT_EQ(r.summands[0].family->match.tag, Family::XaSumB);
  EXPECT_EQ(r.summands[0].low, 18u);
  EXPECT_EQ(r.summands[1].low, 30u);
}

TEST(Strassen, MixedDegrees) { EXPECT_ERRC(strassen_rank(P("x0^2*x1 + y0^2")), MixedDegrees); }

TEST(Strassen, CommonFactorIsRefused) {
  for (auto [a, n] : std::vector<std::pair<unsigned, unsigned>>{{1, 2}, {1, 3}, {2, 2}, {2, 3}}) {
    const unsigned b = a + 1;
    Poly F = xa_sum_b_form(a, b, n);
    auto r = strassen_rank(F);
    EXPECT_TRUE(r.single_block);
    EXPECT_EQ(r.verdict, Verdict::Failed);
    EXPECT_FALSE(r.total_rank);
    EXPECT_EQ(r.interval_low, (a + 1) * n);
    ASSERT_TRUE(r.naive_term_sum);
    EXPECT_EQ(*r.naive_term_sum, (a + 2) * n);
    EXPECT_LT(r.interval_low, *r.naive_term_sum);
  }
}

TEST(Strassen, IncompatibleEIsConditional) {
  // a form certified only at e = 2 next to a monomial certified only at e = 1
  std::string f11 = testutil::kDegree11;
  auto r = strassen_rank(P(f11 + " + u0^2*u1^4*u2^5"));
  EXPECT_EQ(r.verdict, Verdict::Conditional);
  EXPECT_EQ(r.shared_e, 0u);
  EXPECT_EQ(r.interval_low, 55u);
  EXPECT_EQ(r.interval_high, 55u);
  EXPECT_FALSE(r.total_rank);
}

TEST(Strassen, SharedEqualsTwo) {
  std::string f11 = testutil::kDegree11;
  auto r = strassen_rank(P(f11 + " + u0^3*u1^4*u2^4"));
  EXPECT_EQ(r.verdict, Verdict::Certified);
  EXPECT_EQ(r.shared_e, 2u);
  ASSERT_TRUE(r.total_rank);
  EXPECT_EQ(*r.total_rank, 25u + 25u);
}

TEST(Strassen, BoundsOnlySummandFails) {
  auto r = strassen_rank(P("x0^4 + x0*x1^3 + x1^2*x2^2 + y^4"));
  EXPECT_EQ(r.verdict, Verdict::Failed);
  EXPECT_FALSE(r.total_rank);
  EXPECT_LT(r.interval_low, r.interval_high);
}

TEST(Strassen, AddingAFreshPowerAddsOne) {
  for (const char* f : {"x0^2*x1", "x0*x1*x2", "x0*(x1^2 + x2^2)", "x0^3 + x1^3 + x0*x1*x2"}) {
    Poly F = P(f);
    const int d = F.degree();
    auto base = strassen_rank(F);
    auto more = strassen_rank(P(std::string(f) + " + y^" + std::to_string(d)));
    if (base.verdict != Verdict::Certified && !base.single_block) continue;
    std::size_t r0 = base.total_rank ? *base.total_rank : base.interval_low;
    if (base.single_block && base.interval_low != base.interval_high) continue;
    ASSERT_EQ(more.verdict, Verdict::Certified) << f;
    EXPECT_EQ(*more.total_rank, r0 + 1) << f;
  }
}

TEST(JointCheck, SingleSummand) {
  Poly F = P("x0*x1*x2");
  Poly t = T("X0", F);
  auto w = lower_bound(F, {t}, t);
  auto rep = joint_hf_check(F.vars(), {F}, {w});
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.intersection_sum, w.hf_sum);
}

TEST(JointCheck, TwoBinaryCubics) {
  Poly A = P("x0^3 + x1^3"), B = P("y0^2*y1");
  auto sa = sylvester(A), sb = sylvester(B);
  ASSERT_TRUE(sa.lower);
  ASSERT_TRUE(sb.lower);
  ASSERT_EQ(sa.lower->e, 1u);
  ASSERT_EQ(sb.lower->e, 1u);
  EXPECT_EQ(sa.rank + sb.rank, 5u);
  VarSet joint({"x0", "x1", "y0", "y1"});
  auto rep = joint_hf_check(joint, {A, B}, {*sa.lower, *sb.lower});
  EXPECT_TRUE(rep.holds);
  EXPECT_EQ(rep.intersection_sum, sa.rank + sb.rank - 1);
}

TEST(JointCheck, ThreeMonomials) {
  auto r = strassen_rank(P("a*b*c + d*e*f + g^2*h"));
  EXPECT_EQ(r.verdict, Verdict::Certified);
  EXPECT_EQ(*r.total_rank, 11u);
  ASSERT_TRUE(r.joint_check);
  EXPECT_EQ(r.joint_check->intersection_sum, 11u - 2u);
  EXPECT_TRUE(r.joint_check->holds);
}

TEST(Strassen, VerdictStrings) {
  EXPECT_STREQ(to_string(Verdict::Certified), "certified");
  EXPECT_STREQ(to_string(Verdict::Conditional), "conditional");
  EXPECT_STREQ(to_string(Verdict::Failed), "failed");
}
