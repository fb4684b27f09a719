#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ucngas/error.hpp"
#include "ucngas/fermi_dirac.hpp"

using namespace ucngas::specfun;
using ucngas::Coefficients;

namespace {

constexpr FermiDiracOrder kOrders[] = {FermiDiracOrder::one_half, FermiDiracOrder::three_halves,
                                       FermiDiracOrder::five_halves};

struct Reference {
  double eta, f12, f32, f52;
};

// mpmath.quad at 40 digits; unnormalized (no 1/Gamma) convention.
constexpr Reference kReference[] = {
    {-30.0, 8.29297743322106318e-14, 1.24394661498318005e-13, 3.10986653745797586e-13},
    {-5.0, 0.0059571769051784766, 0.00894638226041224674, 0.0223792483585268202},
    {-1.0, 0.290500896169917553, 0.460848806290101659, 1.18596817544346744},
    {0.0, 0.678093895153101007, 1.1528038370883614, 3.0825860828374186},
    {0.5, 0.990209248712799894, 1.77279361184210956, 4.88671401524456981},
    {2.0, 2.50245782600714033, 5.53725367500834508, 17.5294191873842618},
    {10.0, 21.3444714923551829, 134.270159963139865, 1034.6842541815338},
    {30.0, 109.694818337266499, 1985.31137774603893, 42929.2575850999398},
    {100.0, 666.748920479239239, 40024.6733004504721, 2861255.54747503197},
    {1000.0, 21081.8770765029168, 12649188.666724837, 9035209072.62111784},
};

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST(FermiDirac, MatchesHighPrecisionReference) {
  for (const auto& r : kReference) {
    EXPECT_LT(rel(fermi_dirac(FermiDiracOrder::one_half, r.eta), r.f12), 1e-12) << r.eta;
    EXPECT_LT(rel(fermi_dirac(FermiDiracOrder::three_halves, r.eta), r.f32), 1e-12) << r.eta;
    EXPECT_LT(rel(fermi_dirac(FermiDiracOrder::five_halves, r.eta), r.f52), 1e-12) << r.eta;
  }
}

TEST(FermiDirac, ZeroArgumentClosedForm) {
  // Gamma(j+1) (1 - 2^{-j}) zeta(j+1) with zeta(5/2) from its series.
  double zeta52 = 2.0 / 3.0 * std::pow(2000000.0 - 0.5, -1.5);
  for (int k = 1999999; k >= 1; --k) zeta52 += std::pow(k, -2.5);
  const double want = std::tgamma(2.5) * (1.0 - std::pow(2.0, -1.5)) * zeta52;
  EXPECT_NEAR(fermi_dirac(FermiDiracOrder::three_halves, 0.0), want, 1e-12);
  EXPECT_NEAR(fermi_dirac(FermiDiracOrder::three_halves, 0.0), 1.15280, 1e-5);
}

TEST(FermiDirac, MaxwellLimit) {
  for (const auto j : kOrders) {
    EXPECT_LT(rel(fermi_dirac(j, -20.0), maxwell(j, -20.0)), 1e-8) << order_name(j);
    EXPECT_LT(rel(fermi_dirac(j, -700.0), maxwell(j, -700.0)), 1e-13) << order_name(j);
  }
  EXPECT_NEAR(maxwell(FermiDiracOrder::one_half, 0.0), std::sqrt(std::numbers::pi) / 2.0, 1e-15);
}

TEST(FermiDirac, StrictlyIncreasing) {
  for (const auto j : kOrders) {
    double last = fermi_dirac(j, -30.0);
    for (double eta = -29.9; eta <= 100.0; eta += 0.1) {
      const double v = fermi_dirac(j, eta);
      EXPECT_GT(v, last) << order_name(j) << " " << eta;
      last = v;
    }
  }
}

TEST(FermiDirac, DerivativeRecurrence) {
  const double h = 1e-4;
  const std::pair<FermiDiracOrder, FermiDiracOrder> pairs[] = {
      {FermiDiracOrder::three_halves, FermiDiracOrder::one_half},
      {FermiDiracOrder::five_halves, FermiDiracOrder::three_halves}};
  for (const auto& [upper, lower] : pairs) {
    for (const double eta : {-20.0, -3.0, -0.5, 0.0, 1.0, 4.0, 15.0, 60.0, 300.0}) {
      const double fd = (fermi_dirac(upper, eta + h) - fermi_dirac(upper, eta - h)) / (2.0 * h);
      const double want = order_value(upper) * fermi_dirac(lower, eta);
      EXPECT_LT(rel(fd, want), 1e-6) << order_name(upper) << " " << eta;
    }
  }
}

TEST(FermiDirac, LargeArgumentsStayFinite) {
  for (const auto j : kOrders) {
    for (const double eta : {1e4, 1e5, -1e5}) {
      const double v = fermi_dirac(j, eta);
      EXPECT_TRUE(std::isfinite(v));
      EXPECT_GE(v, 0.0);
    }
    const double big = fermi_dirac(j, 1e4);
    EXPECT_LT(rel(big, sommerfeld(j, 1e4)), 1e-12);
  }
}

TEST(FermiDirac, DomainChecked) {
  EXPECT_THROW((void)fermi_dirac(FermiDiracOrder::one_half, 2e5), ucngas::domain_error);
  EXPECT_THROW((void)fermi_dirac(FermiDiracOrder::one_half, -2e5), ucngas::domain_error);
  EXPECT_THROW((void)fermi_dirac(FermiDiracOrder::one_half, std::nan("")), ucngas::domain_error);
}

TEST(Sommerfeld, LeadingTerms) {
  const double eta = 1e8;
  EXPECT_LT(rel(sommerfeld(FermiDiracOrder::one_half, eta), 2.0 / 3.0 * std::pow(eta, 1.5)), 1e-11);
  EXPECT_LT(rel(sommerfeld(FermiDiracOrder::three_halves, eta), 0.4 * std::pow(eta, 2.5)), 1e-11);
  EXPECT_LT(rel(sommerfeld(FermiDiracOrder::five_halves, eta), 2.0 / 7.0 * std::pow(eta, 3.5)),
            1e-11);
}

TEST(Sommerfeld, AgreesWithQuadrature) {
  EXPECT_LT(rel(sommerfeld(FermiDiracOrder::three_halves, 100.0),
                fermi_dirac(FermiDiracOrder::three_halves, 100.0)),
            1e-6);
  EXPECT_LT(rel(sommerfeld(FermiDiracOrder::three_halves, 50.0),
                fermi_dirac(FermiDiracOrder::three_halves, 50.0)),
            1e-5);
  for (const auto j : kOrders) {
    for (double eta = 30.0; eta <= 1000.0; eta *= 1.5) {
      EXPECT_LT(rel(sommerfeld(j, eta), fermi_dirac(j, eta)), 1e-4) << order_name(j) << " " << eta;
    }
  }
}

TEST(Sommerfeld, LiteralCoefficientDiffers) {
  // The printed pi^2/2 correction for order 3/2 is twice the series value.
  const double eta = 40.0;
  const double lead = 0.4 * std::pow(eta, 2.5);
  const double fixed = sommerfeld(FermiDiracOrder::three_halves, eta) - lead;
  const double literal =
      sommerfeld(FermiDiracOrder::three_halves, eta, Coefficients::paper_literal) - lead;
  EXPECT_NEAR(literal / fixed, 2.0, 1e-12);
  EXPECT_NEAR(fixed, std::numbers::pi * std::numbers::pi / 4.0 * std::sqrt(eta), 1e-9);
  EXPECT_LT(rel(sommerfeld(FermiDiracOrder::three_halves, eta), fermi_dirac(FermiDiracOrder::three_halves, eta)),
            rel(sommerfeld(FermiDiracOrder::three_halves, eta, Coefficients::paper_literal),
                fermi_dirac(FermiDiracOrder::three_halves, eta)));
}

TEST(Sommerfeld, RejectsNonDegenerate) {
  EXPECT_THROW((void)sommerfeld(FermiDiracOrder::one_half, 0.0), ucngas::domain_error);
  EXPECT_THROW((void)sommerfeld(FermiDiracOrder::five_halves, -3.0), ucngas::domain_error);
}
