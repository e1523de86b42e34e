#include "apolar/families.hpp"

#include "common.hpp"
#include "oracle.hpp"

using namespace apolar;
using testutil::P;
using testutil::T;
using testutil::Ts;

namespace {
std::vector<oracle::OPoly> to_oracle(const std::vector<Poly>& ps) {
  std::vector<oracle::OPoly> out;
  for (const auto& p : ps) out.push_back(oracle::from(p));
  return out;
}

// Profile of T/(F^perp:I + (t)) trimmed of trailing zeros.
std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}
}  // namespace

TEST(Sylvester, Examples) {
  auto a = sylvester(P("x0^3 + x1^3"));
  EXPECT_TRUE(a.squarefree_h1);
  EXPECT_EQ(a.d1, 2u);
  EXPECT_EQ(a.rank, 2u);
  auto b = sylvester(P("x0^2*x1"));
  EXPECT_FALSE(b.squarefree_h1);
  EXPECT_EQ(b.h1, T("X1^2", P("x0^2*x1")));
  EXPECT_EQ(b.rank, 3u);
  EXPECT_EQ(sylvester(P("x0^3*x1")).rank, 4u);
  EXPECT_ERRC(sylvester(P("x0*x1*x2")), NotBinary);
}

TEST(Sylvester, LowerWitnessMatchesRank) {
  for (const char* f : {"x0^3 + x1^3", "x0^2*x1", "x0^4 + x0*x1^3", "(x0 + x1)^5 + x1^5 + 2*x0^5", "x0^2*x1^3"}) {
    auto s = sylvester(P(f));
    ASSERT_TRUE(s.lower) << f;
    EXPECT_EQ(s.lower->bound, s.rank) << f;
  }
}

TEST(Sylvester, BinaryMonomialsMatchProductFormula) {
  int cases = 0;
  for (unsigned a = 1; a <= 9; ++a)
    for (unsigned b = a; a + b <= 10; ++b) {
      Poly F = P("x0^" + std::to_string(a) + "*x1^" + std::to_string(b));
      EXPECT_EQ(sylvester(F).rank, b + 1) << a << "," << b;
      EXPECT_EQ(monomial_rank(F).low, b + 1);
      ++cases;
    }
  EXPECT_EQ(cases, 25);
}

TEST(BinarySquarefree, Examples) {
  Poly F = P("x0^2 - x1^2");
  EXPECT_TRUE(binary_squarefree(F));
  EXPECT_FALSE(binary_squarefree(P("x0^2*x1")));
  EXPECT_FALSE(binary_squarefree(P("(x0 + x1)^2*x0")));
}

TEST(Monomial, Examples) {
  auto a = monomial_rank(P("x0*x1^4*x2^5"));
  EXPECT_EQ(a.low, 30u);
  EXPECT_TRUE(a.exact());
  EXPECT_EQ(a.certificate.lower.bound, 30u);
  EXPECT_EQ(a.certificate.status, CertStatus::CertifiedEqual);
  auto b = monomial_rank(P("x0^3*x1^4*x2^5"), 2);
  EXPECT_EQ(b.low, 30u);
  EXPECT_EQ(b.certificate.lower.e, 2u);
  EXPECT_EQ(b.certificate.lower.bound, 30u);
  EXPECT_EQ(b.certificate.status, CertStatus::CertifiedEqual);
  EXPECT_EQ(monomial_rank(P("x0*x1*x2")).low, 4u);
  EXPECT_ERRC(monomial_rank(P("x0*x1 + x1^2")), NotMonomial);
  EXPECT_ERRC(monomial_rank(P("x0*x1^4*x2^5"), 2), EOutOfRange);
}

TEST(Monomial, PointsDecompose) {
  for (const char* f : {"x0*x1^4*x2^5", "x0^2*x1^2", "x0*x1*x2*x3", "x0^2*x1^3"}) {
    Poly F = P(f);
    FieldRef K;
    auto pts = monomial_points(F, K);
    auto w = upper_bound_from_points(F, pts);
    ASSERT_TRUE(w) << f;
    EXPECT_EQ(w->count(), monomial_rank(F).low) << f;
    EXPECT_TRUE(oracle::decomposes(F, w->points, w->coefficients)) << f;
  }
}

TEST(XaSumB, Examples) {
  auto a = xa_sum_b_rank(1, 2, 2);
  EXPECT_EQ(a.low, 4u);
  EXPECT_TRUE(a.exact());
  auto b = xa_sum_b_rank(1, 3, 3);
  EXPECT_EQ(b.low, 9u);
  EXPECT_TRUE(b.exact());
  EXPECT_EQ(b.certificate.lower.bound, 8u);
  auto c = xa_sum_b_rank(1, 3, 5);
  EXPECT_EQ(c.low, 13u);
  EXPECT_EQ(c.high, 15u);
  EXPECT_EQ(c.certificate.status, CertStatus::BoundsOnly);
  EXPECT_ERRC(xa_sum_b_rank(0, 2, 2), ParameterOutOfRange);
  EXPECT_ERRC(xa_sum_b_rank(1, 1, 2), ParameterOutOfRange);
  EXPECT_ERRC(xa_sum_b_rank(1, 2, 1), ParameterOutOfRange);
}

TEST(XaSumB, HilbertTablesWhenAPlusOneAtLeastB) {
  for (auto [a, b, n] : std::vector<std::array<unsigned, 3>>{{2, 2, 2}, {2, 2, 3}, {3, 2, 3}, {3, 3, 2}}) {
    FamilyRank r = xa_sum_b_rank(a, b, n);
    std::vector<std::size_t> expected{1};
    for (unsigned k = 0; k < a; ++k) expected.push_back(n);
    expected.push_back(n - 1);
    const auto& w = r.certificate.lower;
    EXPECT_EQ(trimmed(w.profile.values), expected) << a << b << n;
    EXPECT_EQ(w.hf_sum, (a + 1) * n);
    EXPECT_EQ(r.low, (a + 1) * n);
    EXPECT_EQ(r.certificate.status == CertStatus::BoundsOnly, false);
    auto o = oracle::colon_hf(oracle::from(r.certificate.form), n + 1, to_oracle(w.ideal_generators),
                              oracle::from(w.t));
    EXPECT_EQ(trimmed(o), expected) << a << b << n;
  }
}

TEST(XaSumB, HilbertTablesWhenAPlusOneAtMostB) {
  for (auto [a, b] : std::vector<std::array<unsigned, 2>>{{1, 2}, {1, 3}, {2, 3}}) {
    FamilyRank r = xa_sum_b_rank(a, b, 2);
    std::vector<std::size_t> expected{1};
    for (unsigned k = 0; k + 1 < b; ++k) expected.push_back(2);
    expected.push_back(1);
    const auto& w = r.certificate.lower;
    EXPECT_EQ(trimmed(w.profile.values), expected) << a << b;
    EXPECT_EQ(w.hf_sum, 2 * b);
    EXPECT_EQ(r.low, 2 * b);
    EXPECT_EQ(r.certificate.status, CertStatus::CertifiedEqual);
    auto o = oracle::colon_hf(oracle::from(r.certificate.form), 3, to_oracle(w.ideal_generators), oracle::from(w.t));
    EXPECT_EQ(trimmed(o), expected) << a << b;
  }
}

TEST(XaSumB, PlusPowerVariant) {
  auto r = xa_sum_b_rank(1, 2, 2, true);
  EXPECT_EQ(r.match.tag, Family::XaSumBPlusPower);
  EXPECT_EQ(r.low, 4u);
  EXPECT_EQ(xa_sum_b_form(1, 2, 2, true), P("x0*x1^2 + x0*x2^2 + x0^3", VarSet::indexed("x", 3)));
}

TEST(CompleteIntersection, DegreeElevenExample) {
  Poly F = P(testutil::kDegree11);
  Poly q = T("X^2 + Y^2 + Z^2", F);
  auto r = ci_rank(F, q, 2);
  EXPECT_EQ(r.low, 25u);
  EXPECT_TRUE(r.exact());
  EXPECT_EQ(r.certificate.lower.e, 2u);
  EXPECT_EQ(r.certificate.lower.bound, 25u);
  EXPECT_EQ(r.certificate.status, CertStatus::CitedUpper);
}

TEST(CompleteIntersection, TripleProduct) {
  Poly F = P("x0*x1*x2");
  auto r = ci_rank(F, T("X0", F), 2);
  EXPECT_EQ(r.low, 4u);
  EXPECT_EQ(monomial_rank(F).low, 4u);
}

TEST(CompleteIntersection, Errors) {
  Poly F = P("x0*x1*x2");
  EXPECT_ERRC(ci_rank(F, T("X0", F), 1), HypothesisViolated);
  EXPECT_ERRC(ci_rank(F, T("X0", F), 3), NotCIShape);
  Poly G = P("x0^3 + x1^3 + x2^3");
  EXPECT_ERRC(ci_rank(G, T("X0", G), 2), NotCIShape);
}

TEST(X0aG, PerpIsPowerPlusPerpOfG) {
  // generator degrees of G^perp: (2, 3) for the cubic sum, (5, 5) for the monomial
  std::vector<std::pair<std::string, unsigned>> cases{
      {"x1^3 + x2^3", 1}, {"x1^4*x2^4", 1}, {"x1^4*x2^4", 2}, {"x1^4*x2^4", 4}};
  for (const auto& [g, a] : cases) {
    Poly F = P("x0^" + std::to_string(a) + "*(" + g + ")");
    Poly G = P(g);  // over x1, x2 only
    const unsigned D = static_cast<unsigned>(F.degree()) + 1;
    std::vector<Poly> expected;
    for (const auto& h : minimal_generators(perp(G, D))) expected.push_back(h.embedded(F.vars()));
    expected.push_back(Poly::variable(F.vars(), 0).pow(a + 1));
    EXPECT_EQ(perp(F, D), GradedIdeal::generated_by(F.vars(), expected, D)) << g << " a=" << a;
  }
}

TEST(Vandermonde, SmallCases) {
  auto v3 = vandermonde(3);
  EXPECT_EQ(v3.low, 2u);
  EXPECT_EQ(v3.certificate.status, CertStatus::CertifiedEqual);
  auto v4 = vandermonde(4);
  EXPECT_EQ(v4.low, 6u);
  EXPECT_EQ(v4.certificate.status, CertStatus::CertifiedEqual);
  ASSERT_TRUE(v4.certificate.upper);
  EXPECT_EQ(v4.certificate.upper->field->modulus(), cyclotomic(4));
  EXPECT_TRUE(oracle::decomposes(v4.certificate.form, v4.certificate.upper->points,
                                 v4.certificate.upper->coefficients));
  EXPECT_ERRC(vandermonde(2), NOutOfRange);
  EXPECT_ERRC(vandermonde(7), NOutOfRange);
}

TEST(Vandermonde, ElementarySymmetricAnnihilate) {
  for (unsigned n = 2; n <= 5; ++n) {
    Poly V = vandermonde_form(n);
    for (const auto& s : elementary_symmetric(V.vars())) EXPECT_TRUE(apolar_action(s, V).is_zero()) << n;
  }
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(P("x0^2*x1")).tag, Family::Monomial);
  auto m = classify(P("x0*(x1^3 + x2^3)"));
  EXPECT_EQ(m.tag, Family::XaSumB);
  EXPECT_EQ(m.parameters, (std::vector<long>{1, 3, 2}));
  EXPECT_EQ(classify(P("x0^4 + x0*x1^3 + x1^2*x2^2")).tag, Family::None);
  EXPECT_EQ(classify(P("x0^3 + x1^3")).tag, Family::Binary);
  EXPECT_EQ(classify(P(testutil::kDegree11)).tag, Family::CIperp);
  EXPECT_EQ(classify(vandermonde_form(4)).tag, Family::Vandermonde);
  EXPECT_EQ(classify(P("x0*x1^2 + x0*x2^2 + x0^3")).tag, Family::XaSumBPlusPower);
}

TEST(Classify, AdmissibleE) {
  Poly F = P("x0^3*x1^4*x2^5");
  auto m = classify(F);
  EXPECT_EQ(admissible_e(F, m), (std::vector<unsigned>{1, 2}));
  Poly G = P(testutil::kDegree11);
  EXPECT_EQ(admissible_e(G, classify(G)), (std::vector<unsigned>{2}));
  Poly N = P("x0^4 + x0*x1^3 + x1^2*x2^2");
  EXPECT_TRUE(admissible_e(N, classify(N)).empty());
}

TEST(RankForm, NoFamilyGivesBounds) {
  auto r = rank_form(P("x0^4 + x0*x1^3 + x1^2*x2^2"));
  EXPECT_EQ(r.match.tag, Family::None);
  EXPECT_LE(r.low, r.high);
  EXPECT_EQ(r.certificate.status, CertStatus::BoundsOnly);
}

TEST(PerfectPowerRoot, Examples) {
  Poly q = T("X0^2 + X1^2", P("x0*x1"));
  auto r = perfect_power_root(q * q, 2);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, q);
  EXPECT_FALSE(perfect_power_root(q, 2));
}
