#include "apolar/field.hpp"

#include "common.hpp"
#include "oracle.hpp"

using namespace apolar;

namespace {
FieldRef gaussian() { return ExtensionField::make("z", UniPoly({1, 0, 1})); }
FieldRef eisenstein() { return ExtensionField::make("z", UniPoly({1, 1, 1})); }
}  // namespace

TEST(Rationals, ParseAndPrint) {
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_EQ(to_string(Rational(4)), "4");
  EXPECT_EQ(factorial(5), 120);
  EXPECT_EQ(binomial(5, 2), 10);
}

TEST(Invert, Rational) { EXPECT_EQ(field_invert(FieldElement(2)), FieldElement(Rational(1, 2))); }

TEST(Invert, GaussianGenerator) {
  auto K = gaussian();
  auto z = FieldElement::generator(K);
  EXPECT_EQ(field_invert(z), -z);
}

TEST(Invert, OnePlusZInEisenstein) {
  auto K = eisenstein();
  auto z = FieldElement::generator(K);
  auto inv = field_invert(FieldElement(1) + z);
  EXPECT_EQ(inv, -z);
  // (1+z)(-z) = -z - z^2 = 1 modulo z^2+z+1
  EXPECT_TRUE(((FieldElement(1) + z) * inv).is_one());
}

TEST(Invert, Errors) {
  EXPECT_ERRC(field_invert(FieldElement(0)), ZeroInversion);
  auto K = ExtensionField::make("z", UniPoly({-1, 0, 1}));  // z^2 - 1 is reducible
  auto z = FieldElement::generator(K);
  EXPECT_ERRC(field_invert(z - FieldElement(1)), NotInvertible);
}

TEST(Squarefree, Examples) {
  EXPECT_FALSE(squarefree_check(UniPoly({0, 0, 1})));
  EXPECT_TRUE(squarefree_check(UniPoly({-1, 0, 1})));
  EXPECT_TRUE(squarefree_check(UniPoly({1, 1, 1, 1})));
  EXPECT_TRUE(oracle::squarefree({1, 1, 1, 1}));
  EXPECT_FALSE(squarefree_check(UniPoly({1, 2, 1})));
  EXPECT_FALSE(oracle::squarefree({1, 2, 1}));
}

TEST(Squarefree, AgreesWithEuclidOracle) {
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c) {
        oracle::Uni o{a, b, c, 1};
        EXPECT_EQ(squarefree_check(UniPoly({a, b, c, 1})), oracle::squarefree(o)) << a << " " << b << " " << c;
      }
}

TEST(Cyclotomic, Polynomials) {
  EXPECT_EQ(cyclotomic(1), UniPoly({-1, 1}));
  EXPECT_EQ(cyclotomic(3), UniPoly({1, 1, 1}));
  EXPECT_EQ(cyclotomic(4), UniPoly({1, 0, 1}));
  EXPECT_EQ(cyclotomic(6), UniPoly({1, -1, 1}));
  EXPECT_EQ(cyclotomic(12), UniPoly({1, 0, -1, 0, 1}));
  EXPECT_EQ(cyclotomic_field(2), nullptr);
  EXPECT_EQ(cyclotomic_field(5)->degree(), 4u);
}

TEST(Cyclotomic, GeneratorHasExactOrder) {
  for (unsigned m : {3u, 4u, 5u, 8u, 9u, 12u}) {
    auto K = cyclotomic_field(m);
    auto z = FieldElement::generator(K);
    EXPECT_TRUE(z.pow(m).is_one()) << m;
    for (unsigned k = 1; k < m; ++k) EXPECT_FALSE(z.pow(k).is_one()) << m << " " << k;
  }
}

TEST(FieldElement, ArithmeticAndPrinting) {
  auto K = gaussian();
  auto z = FieldElement::generator(K);
  EXPECT_EQ((z * z).to_string(), "-1");
  EXPECT_TRUE((z * z).is_rational());
  auto w = FieldElement(Rational(1, 2)) + z * FieldElement(3);
  EXPECT_EQ(w / w, FieldElement(1));
  EXPECT_EQ(FieldElement(Rational(6, 4)).to_string(), "3/2");
}

TEST(FieldElement, MixedFieldsRejected) {
  auto a = FieldElement::generator(gaussian());
  auto b = FieldElement::generator(eisenstein());
  EXPECT_ERRC(a + b, FieldMismatch);
}

TEST(UniPoly, DivisionAndGcd) {
  auto [q, r] = divmod(UniPoly({-1, 0, 1}), UniPoly({-1, 1}));
  EXPECT_EQ(q, UniPoly({1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(gcd(UniPoly({-1, 0, 1}), UniPoly({1, 2, 1})), UniPoly({1, 1}));
  auto eg = extended_gcd(UniPoly({1, 0, 1}), UniPoly({0, 1}));
  EXPECT_EQ(eg.g, UniPoly({1}));
  EXPECT_EQ(eg.s * UniPoly({1, 0, 1}) + eg.t * UniPoly({0, 1}), eg.g);
}
