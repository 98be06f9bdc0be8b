#include <doctest.h>

#include <random>

#include "branch_audit/branches.hpp"
#include "oracle.hpp"

using namespace branch_audit;
using oracle::Big;

namespace {

const RealInterval& pi() { return constants::pi(); }
RealInterval pi_times(double k) { return pi() * RealInterval(k); }

}  // namespace

TEST_CASE("entire functions") {
  CHECK(cexp({RealInterval(0.0), pi()}).contains(-1.0, 0.0));
  CHECK(csin(ComplexBox::point(0.0, 0.0)).contains(0.0, 0.0));
  const ComplexBox c = ccos(ComplexBox::point(0.0, 1.0));
  CHECK(oracle::in(c, oracle::real(cosh(Big(1)))));
  CHECK(std::abs(c.re().mid() - 1.5431) < 1e-4);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 100; ++k) {
    const double x = u(rng), y = u(rng);
    const oracle::C z = oracle::big(x, y);
    CHECK(oracle::in(cexp(oracle::box(x, y)), oracle::cexp(z)));
    CHECK(oracle::in(csin(oracle::box(x, y)), oracle::csin(z)));
    CHECK(oracle::in(ccos(oracle::box(x, y)), oracle::ccos(z)));
  }
}

TEST_CASE("arg_principal examples") {
  CHECK(arg_principal(ComplexBox::point(1.0, 0.0)).contains(0.0));
  CHECK(oracle::in(arg_principal(ComplexBox::point(0.0, 1.0)), oracle::pi() / 2));
  const RealInterval a = arg_principal(ComplexBox::point(-1.0, 0.0));
  CHECK(oracle::in(a, oracle::pi()));
  CHECK(a.lo() > 3.0);
  CHECK_THROWS_AS(arg_principal(ComplexBox({-1.0, -0.5}, {-0.1, 0.1})), BranchCutStraddle);
  CHECK_THROWS_AS(arg_principal(ComplexBox({-1.0, 1.0}, {-1.0, 1.0})), ZeroModulus);
  const RealInterval upper = arg_principal(ComplexBox({-1.0, -0.5}, {0.0, 0.1}));
  CHECK(upper.hi() <= pi().hi());
}

TEST_CASE("branch_log examples") {
  CHECK(branch_log(BranchTag::kLnn, ComplexBox::point(1.0, 0.0)).contains(0.0, 0.0));
  const ComplexBox l3 = branch_log(BranchTag::kLnnn, ComplexBox::point(-1.0, 0.0));
  CHECK(oracle::in(l3, oracle::C{Big(0), oracle::pi() / 2}));
  CHECK(l3.width() <= 1e-10);
  CHECK(oracle::in(branch_log(BranchTag::kLnSlit, ComplexBox::point(-1.0, 0.0)), oracle::C{Big(0), oracle::pi()}));
  CHECK_THROWS_AS(branch_log(BranchTag::kLnn, ComplexBox::point(-1.0, 0.0)), DomainViolation);
  CHECK_THROWS_AS(branch_log(BranchTag::kLnnn, ComplexBox::point(1.0, 0.0)), DomainViolation);
  CHECK_THROWS_AS(branch_log(BranchTag::kLnSlit, ComplexBox::point(2.0, 0.0)), DomainViolation);
  // lower half plane: slit argument in (pi, 2 pi)
  const ComplexBox s = branch_log(BranchTag::kLnSlit, ComplexBox::point(0.0, -1.0));
  CHECK(oracle::in(s, oracle::C{Big(0), oracle::pi() * 3 / 2}));
}

TEST_CASE("branch_log against the oracle") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 200; ++k) {
    const double x = u(rng), y = u(rng);
    const oracle::C z = oracle::big(x, y);
    if (x > 0) CHECK(oracle::in(branch_log(BranchTag::kLnn, oracle::box(x, y)), oracle::lnn(z)));
    if (x < 0) CHECK(oracle::in(branch_log(BranchTag::kLnnn, oracle::box(x, y)), oracle::lnnn(z)));
    if (!(x >= 0 && y == 0)) CHECK(oracle::in(branch_log(BranchTag::kLnSlit, oracle::box(x, y)), oracle::ln_slit(z)));
  }
}

TEST_CASE("lnnn_paper_closed_form examples") {
  CHECK(oracle::in(lnnn_paper_closed_form(RealInterval(1.0), pi()), oracle::C{Big(0), -oracle::pi() / 2}));
  CHECK(oracle::in(lnnn_paper_closed_form(RealInterval(1.0), pi_times(0.75)), oracle::C{Big(0), -oracle::pi() / 4}));
  const RealInterval e = exp(RealInterval(1.0));
  CHECK(oracle::in(lnnn_paper_closed_form(e, pi()), oracle::C{Big(1), -oracle::pi() / 2}));
  CHECK_THROWS_AS(lnnn_paper_closed_form(RealInterval(0.0), pi()), DomainError);
  // It disagrees with the definitional branch at -1.
  const ComplexBox def = branch_log(BranchTag::kLnnn, ComplexBox::point(-1.0, 0.0));
  const ComplexBox asserted = lnnn_paper_closed_form(RealInterval(1.0), pi());
  CHECK(!def.intersects(asserted));
  CHECK(box_gap(def, asserted) >= 3.14);
}

TEST_CASE("log_product_correction") {
  CHECK(log_product_correction(pi_times(0.25), pi() / RealInterval(6.0)) == 0);
  CHECK(log_product_correction(pi_times(0.75), pi_times(0.75)) == 1);
  CHECK(log_product_correction(pi_times(-0.75), pi_times(-0.75)) == -1);
  CHECK_THROWS_AS(log_product_correction(pi_times(0.5), pi_times(0.5)), AmbiguousCorrection);
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int k = 0; k < 200; ++k) {
    const RealInterval a(u(rng)), b(u(rng));
    try {
      CHECK(log_product_correction(-a, -b) == -log_product_correction(a, b));
    } catch (const AmbiguousCorrection&) {
      CHECK_THROWS_AS(log_product_correction(-a, -b), AmbiguousCorrection);
    }
  }
}

TEST_CASE("polar examples") {
  const PolarForm i = polar(cyc_root_of_unity(4, 1));
  CHECK(i.r.contains(1.0));
  CHECK(oracle::in(i.theta, oracle::pi() / 2));
  CHECK(i.theta_over_pi == Rational(1, 2));
  const PolarForm m = polar(CycNum(Rational(-1)));
  CHECK(oracle::in(m.theta, oracle::pi()));
  CHECK(m.theta_over_pi == Rational(1));
  const PolarForm p = polar(cyc_root_of_unity(32, 17));
  CHECK(p.theta_over_pi == Rational(-15, 16));
  CHECK(oracle::in(p.theta, -oracle::pi() * 15 / 16));
  // recomposition
  const PolarForm b = polar(ComplexBox::point(-0.3, 0.4));
  const ComplexBox back = b.r * ComplexBox{cos(b.theta), sin(b.theta)};
  CHECK(back.contains(-0.3, 0.4));
  CHECK(b.r.lo() >= 0.0);
}

TEST_CASE("Lnn round trip and exactness") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> x(0.01, 3.0), y(-3.0, 3.0), t(-1.55, 1.55);
  for (int k = 0; k < 1000; ++k) {
    const double a = x(rng), b = y(rng);
    const ComplexBox box({a, a + 1e-3}, {b, b + 1e-3});
    CHECK(cexp(branch_log(BranchTag::kLnn, box)).intersects(box));
  }
  for (int k = 0; k < 100; ++k) {
    const double th = t(rng);
    const ComplexBox z{cos(RealInterval(th)), sin(RealInterval(th))};
    CHECK(branch_log(BranchTag::kLnn, z).im().contains(th));
  }
}

TEST_CASE("Lnnn is continuous across the negative real axis") {
  for (double t = 0.01; t <= 0.2; t += 0.01) {
    const RealInterval up = pi() - RealInterval(t), lo = RealInterval(t) - pi();
    const ComplexBox a = branch_log(BranchTag::kLnnn, {cos(up), sin(up)});
    const ComplexBox b = branch_log(BranchTag::kLnnn, {cos(lo), sin(lo)});
    CHECK(box_abs(a - b).hi() <= 4 * t + a.width() + b.width());
    CHECK(a.im().contains(RealInterval(M_PI / 2 - t - 1e-9, M_PI / 2 - t + 1e-9)) == false);
  }
}

TEST_CASE("LnSlit derivative is 1/z on D") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> ux(-1.9, -0.9), uy(-0.15, 0.15);
  const double h = 1e-5;
  for (int k = 0; k < 20; ++k) {
    const double x = ux(rng), y = uy(rng);
    const ComplexBox d =
        branch_log(BranchTag::kLnSlit, oracle::box(x + h, y)) - branch_log(BranchTag::kLnSlit, oracle::box(x - h, y));
    const ComplexBox deriv{d.re() / RealInterval(2 * h), d.im() / RealInterval(2 * h)};
    const ComplexBox inv = ComplexBox::point(1.0, 0.0) / oracle::box(x, y);
    CHECK(box_abs(deriv - inv).hi() <= 1e-6);
  }
}
