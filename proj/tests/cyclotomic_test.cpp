#include "qorbital/cyclotomic.hpp"

#include <gtest/gtest.h>

#include <random>

using qorbital::Cyclo;
using qorbital::Rational;

TEST(Cyclotomic, RootOfUnityBasics) {
  EXPECT_EQ(Cyclo::root_of_unity(1, 0), Cyclo::one());
  EXPECT_EQ(Cyclo::root_of_unity(4, 2), Cyclo(Rational(-1)));
  EXPECT_THROW(Cyclo::root_of_unity(0, 1), qorbital::Error);
  // Exponents taken mod n.
  EXPECT_EQ(Cyclo::root_of_unity(5, 7), Cyclo::root_of_unity(5, 2));
  EXPECT_EQ(Cyclo::root_of_unity(5, -1), Cyclo::root_of_unity(5, 4));
}

TEST(Cyclotomic, EighthRootSquaredIsI) {
  // e^{i pi/4} squared is i, i.e. zeta_8^2 = zeta_4.
  Cyclo z8 = Cyclo::root_of_unity(8, 1);
  EXPECT_EQ(z8 * z8, Cyclo::root_of_unity(4, 1));
}

TEST(Cyclotomic, VanishingGeometricSum) {
  Cyclo s;
  for (long k = 0; k < 3; ++k) s += Cyclo::root_of_unity(3, k);
  EXPECT_TRUE(s.is_zero());
}

TEST(Cyclotomic, SqrtFiveCertificate) {
  // s = 1 + 2 zeta_5 + 2 zeta_5^4 satisfies s^2 = 5, certifying s = sqrt(5).
  Cyclo s = Cyclo::one() + Rational(2) * Cyclo::root_of_unity(5, 1) +
            Rational(2) * Cyclo::root_of_unity(5, 4);
  EXPECT_EQ(s * s, Cyclo(Rational(5)));
}

TEST(Cyclotomic, ConjugationOnRoots) {
  EXPECT_EQ(Cyclo::root_of_unity(8, 1).conj(), Cyclo::root_of_unity(8, 7));
  Cyclo x = Rational(1, 3) * Cyclo::root_of_unity(12, 5) -
            Rational(2) * Cyclo::root_of_unity(12, 1);
  EXPECT_EQ(x.conj().conj(), x);
}

TEST(Cyclotomic, IsZeroExamples) {
  EXPECT_TRUE(Cyclo::zero().is_zero());
  EXPECT_TRUE((Cyclo::one() + Cyclo::root_of_unity(4, 2)).is_zero());
  Cyclo x = Rational(1, 4) *
            (Cyclo::one() + Cyclo::root_of_unity(4, 1) -
             Cyclo::root_of_unity(4, 2) - Cyclo::root_of_unity(4, 3));
  EXPECT_FALSE(x.is_zero());
}

TEST(Cyclotomic, Inverse) {
  Cyclo z = Cyclo::root_of_unity(8, 1) + Cyclo(Rational(2));
  EXPECT_EQ(z * z.inverse(), Cyclo::one());
  EXPECT_THROW(Cyclo::zero().inverse(), qorbital::Error);
  EXPECT_EQ(Cyclo(Rational(4)).inverse(), Cyclo(Rational(1, 4)));
}

TEST(Cyclotomic, ConductorEmbeddingRoundTrip) {
  Cyclo x = Rational(1, 2) * Cyclo::root_of_unity(6, 1) - Cyclo::one();
  EXPECT_EQ(x.lifted(30), x);
  EXPECT_EQ(x.lifted(12).lifted(24), x);
}

TEST(Cyclotomic, NoZeroDivisors) {
  std::mt19937 rng(12345);
  auto random_elem = [&rng]() {
    static const unsigned conductors[] = {1, 2, 3, 4, 5, 6, 8, 12};
    unsigned n = conductors[rng() % 8];
    std::map<long, Rational> m;
    for (int t = 0; t < 3; ++t) {
      long k = static_cast<long>(rng() % n);
      long num = static_cast<long>(rng() % 7) - 3;
      long den = 1 + static_cast<long>(rng() % 4);
      m[k] += Rational(num, den);
    }
    return Cyclo(n, m);
  };
  for (int i = 0; i < 200; ++i) {
    Cyclo x = random_elem(), y = random_elem();
    EXPECT_EQ((x * y).is_zero(), x.is_zero() || y.is_zero());
  }
}

TEST(Cyclotomic, FieldAxiomsFuzz) {
  std::mt19937 rng(987654);
  auto random_elem = [&rng]() {
    static const unsigned conductors[] = {1, 3, 4, 5, 8, 15};
    unsigned n = conductors[rng() % 6];
    std::map<long, Rational> m;
    for (int t = 0; t < 2; ++t) {
      m[static_cast<long>(rng() % n)] +=
          Rational(static_cast<long>(rng() % 9) - 4, 1 + rng() % 3);
    }
    return Cyclo(n, m);
  };
  for (int i = 0; i < 1000; ++i) {
    Cyclo x = random_elem(), y = random_elem(), z = random_elem();
    EXPECT_EQ((x + y) + z, x + (y + z));
    EXPECT_EQ(x * (y + z), x * y + x * z);
    EXPECT_EQ((x * y) * z, x * (y * z));
    EXPECT_EQ((x * y).conj(), x.conj() * y.conj());
    EXPECT_EQ((x + y).conj(), x.conj() + y.conj());
  }
}

TEST(Cyclotomic, CanonicalisationIdempotent) {
  // Re-expressing a reduced element through its own coefficients is identity.
  Cyclo x = Cyclo::root_of_unity(8, 3) + Rational(1, 2) * Cyclo::one();
  std::map<long, Rational> m;
  for (size_t k = 0; k < x.coeffs().size(); ++k)
    if (x.coeffs()[k] != 0) m[static_cast<long>(k)] = x.coeffs()[k];
  EXPECT_EQ(Cyclo(x.conductor(), m), x);
}

TEST(Cyclotomic, GoldenRatioInConductorFive) {
  // phi = (1 + sqrt5)/2 = -(zeta_5^2 + zeta_5^3) satisfies phi^2 = phi + 1.
  Cyclo phi = -(Cyclo::root_of_unity(5, 2) + Cyclo::root_of_unity(5, 3));
  EXPECT_EQ(phi * phi, phi + Cyclo::one());
}

TEST(Cyclotomic, PrintedForm) {
  EXPECT_EQ(Cyclo::zero().str(), "0");
  EXPECT_EQ(Cyclo(Rational(-1, 2)).str(), "-1/2");
  EXPECT_EQ(Cyclo::root_of_unity(8, 1).str(), "z8");
}
