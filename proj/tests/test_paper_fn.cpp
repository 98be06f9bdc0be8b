#include <doctest.h>

#include <random>

#include "branch_audit/errors.hpp"
#include "branch_audit/paper_fn.hpp"
#include "oracle.hpp"

using namespace branch_audit;
using oracle::Big;

namespace {

const RealInterval& pi() { return constants::pi(); }

Rational canonical(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

ComplexBox unit(const RealInterval& theta) { return {cos(theta), sin(theta)}; }

// theta = pi * k / 64 style samples, strictly inside one arc
std::vector<double> arc_samples(bool upper, int count) {
  std::vector<double> out;
  for (int k = 1; k <= count; ++k) {
    const double s = 0.5 + 0.5 * k / (count + 1.0);
    out.push_back(upper ? s : -s);
  }
  return out;
}

}  // namespace

TEST_CASE("domain D") {
  CHECK(DomainD::x_lo() == Rational(-2));
  CHECK(DomainD::x_hi() == Rational(-4, 5));
  CHECK(DomainD::y_lo() == Rational(-1, 5));
  CHECK(DomainD::y_hi() == Rational(1, 5));
  CHECK(membership(oracle::box(-1.0, 0.0)) == Membership::kInside);
  CHECK(membership(oracle::box(0.0, 0.0)) == Membership::kOutside);
  CHECK(membership(ComplexBox({-0.9, -0.7}, {0.0, 0.0})) == Membership::kBoundary);
  // D is open: a point on a wall is disjoint from it, a box across one is not
  CHECK(membership(oracle::box(-2.0, 0.0)) == Membership::kOutside);
  CHECK(membership(ComplexBox({-2.1, -1.9}, {0.0, 0.0})) == Membership::kBoundary);
  CHECK(DomainD::closure_box().contains(-2.0, 0.2));
}

TEST_CASE("eval_term examples") {
  const ComplexBox m1 = oracle::box(-1.0, 0.0);
  const ComplexBox inner = inner_value(InnerTag::kF1, m1);
  CHECK(inner.contains(0.5, 0.5));
  const ComplexBox f1 = eval_term(TermTag::kF1, m1);
  CHECK(oracle::in(f1, oracle::C{log(1 / sqrt(Big(2))), oracle::pi() / 4}));
  CHECK(oracle::in(f1, oracle::lnn(oracle::f1_inner(oracle::big(-1, 0)))));
  CHECK(eval_term(TermTag::kF3, m1).contains(0.0, 0.0));
  CHECK(oracle::in(eval_term(TermTag::kLnnnTerm, m1), oracle::C{Big(0), oracle::pi() / 2}));
  CHECK(oracle::in(eval_term(TermTag::kConst, m1), oracle::C{oracle::ln2(), oracle::pi() / 2}));
  CHECK_THROWS_AS(eval_term(TermTag::kLnnnTerm, oracle::box(1.0, 0.0)), DomainViolation);
  // theta = pi/2 kills the F1 and F2 certificates
  CHECK_THROWS_AS(eval_term(TermTag::kF1, oracle::box(0.0, 1.0)), Error);
}

TEST_CASE("eval_f examples") {
  const ComplexBox up = cyc_embed(arc_point(16, ArcSide::kUpper), 0x1p-40);
  const ComplexBox fu = eval_f(up);
  CHECK(oracle::in(fu, oracle::C{Big(0), oracle::pi() * 7 / 8}));
  CHECK(std::abs(fu.im().mid() - 2.7489) < 1e-4);
  const ComplexBox lo = cyc_embed(arc_point(16, ArcSide::kLower), 0x1p-40);
  const ComplexBox fl = eval_f(lo);
  CHECK(oracle::in(fl, oracle::C{Big(0), oracle::pi() * 9 / 8}));
  CHECK(std::abs(fl.im().mid() - 3.5343) < 1e-4);
  CHECK(oracle::in(eval_f(oracle::box(-1.0, 0.0)), oracle::C{Big(0), oracle::pi()}));
  CHECK(fu.width() <= 1e-8);
}

TEST_CASE("eval_f against the oracle in D") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> ux(-1.99, -0.81), uy(-0.19, 0.19);
  for (int k = 0; k < 200; ++k) {
    const double x = ux(rng), y = uy(rng);
    CHECK(oracle::in(eval_f(oracle::box(x, y)), oracle::f(oracle::big(x, y))));
  }
}

TEST_CASE("F3 Cartesian formula agrees with the composition") {
  std::mt19937_64 rng(22);
  std::uniform_real_distribution<double> ux(-1.99, -0.81), uy(-0.19, 0.19);
  const RealInterval half(0.5);
  for (int k = 0; k < 200; ++k) {
    const RealInterval x(ux(rng)), y(uy(rng));
    const RealInterval r2 = sqr(x) + sqr(y);
    const RealInterval re = half * (RealInterval(2.0) * r2 + y * (-r2 - RealInterval(1.0))) / r2;
    const RealInterval im = half * (x * r2 - x) / r2;
    CHECK(inner_value(InnerTag::kF3, {x, y}).intersects({re, im}));
  }
}

TEST_CASE("inner closed forms agree on both arcs") {
  for (bool upper : {true, false}) {
    for (double s : arc_samples(upper, 50)) {
      const RealInterval theta = pi() * RealInterval(s);
      const ComplexBox z = unit(theta);
      for (auto [inner, form] : {std::pair{InnerTag::kF1, ClosedForm::kF1Inner},
                                 std::pair{InnerTag::kF2, ClosedForm::kF2Inner},
                                 std::pair{InnerTag::kF3, ClosedForm::kF3Inner}}) {
        const ComplexBox a = inner_value(inner, z), b = paper_closed_forms(form, theta);
        CHECK(a.intersects(b));
        CHECK(a.width() <= 1e-8);
        CHECK(b.width() <= 1e-8);
      }
    }
  }
}

TEST_CASE("closed forms: case totals and examples") {
  const RealInterval t15 = pi() * RealInterval(15.0 / 16.0);
  CHECK(paper_closed_forms(ClosedForm::kF1Inner, t15).intersects(inner_value(InnerTag::kF1, unit(t15))));
  // F3 inner = 2 cos^2(theta/2 + pi/4)
  const Big tb = oracle::pi() * 15 / 16;
  const Big c = cos(tb / 2 + oracle::pi() / 4);
  CHECK(oracle::in(paper_closed_forms(ClosedForm::kF3Inner, t15), oracle::real(2 * c * c)));
  for (double s : {0.55, 0.75, 0.95}) {
    CHECK(paper_closed_forms(ClosedForm::kCaseITotal, pi() * RealInterval(s)).contains(0.0, 0.0));
    const ComplexBox t2 = paper_closed_forms(ClosedForm::kCaseIITotal, pi() * RealInterval(-s));
    CHECK(oracle::in(t2, oracle::C{Big(0), 2 * oracle::pi()}));
  }
  CHECK_THROWS_AS(paper_closed_forms(ClosedForm::kCaseITotal, pi() * RealInterval(-0.75)), DomainViolation);
  CHECK_THROWS_AS(paper_closed_forms(ClosedForm::kF1Inner, pi() * RealInterval(0.5)), DomainViolation);
}

TEST_CASE("containment constants are exact") {
  CHECK(epsilon() == Rational(4, 5));
  CHECK(containment_constant(Containment::kF1Bound, Rational(1, 100)) == Rational(5, 34));
  CHECK(containment_constant(Containment::kF2Bound, Rational(1, 100)) == Rational(11, 136));
  CHECK(containment_constant(Containment::kF2Bound, Rational(1, 100)) == canonical(44, 544));
  CHECK(containment_constant(Containment::kF3Bound, Rational(1, 100)) == Rational(34, 125));
  CHECK(containment_constant(Containment::kF3Bound, Rational(1, 100)) == canonical(272, 1000));
  CHECK(containment_constant(Containment::kSphere, Rational(1, 100)) == Rational(19, 100));
}

TEST_CASE("containment certificates") {
  for (Containment c : {Containment::kF1Bound, Containment::kF2Bound, Containment::kF3Bound}) {
    const CertificateReport r = containment_certificate(c, 12);
    CHECK(r.status == CertificateStatus::kCertified);
    CHECK(r.depth <= 12);
    CHECK(r.leaves >= 1);
    CHECK(r.margin > 0.0);
    CHECK(r.epsilon == Rational(4, 5));
  }
  const CertificateReport s = containment_certificate(Containment::kSphere, 4);
  CHECK(s.status == CertificateStatus::kCertified);
  CHECK(s.constant == Rational(19, 100));
  CHECK(s.margin > 0.0);
  CHECK(s.margin <= 0.01 + 1e-12);
  // a radius of 1/5 touches the walls, so no depth can certify it
  CHECK(containment_certificate(Containment::kSphere, 4, Rational(0)).status == CertificateStatus::kInconclusive);
}

TEST_CASE("arc Lipschitz bound") {
  for (bool upper : {true, false}) {
    std::optional<ComplexBox> prev;
    double prev_s = 0;
    for (int k = 0; k <= 40; ++k) {
      const double s = upper ? 0.6 + 0.0025 * k : -0.6 - 0.0025 * k;
      const ComplexBox f = eval_f(unit(pi() * RealInterval(s)));
      if (prev) {
        const double dtheta = std::abs(s - prev_s) * M_PI;
        const double dm = std::hypot(f.re().mid() - prev->re().mid(), f.im().mid() - prev->im().mid());
        CHECK(dm <= 2.2 * dtheta + f.width() + prev->width());
      }
      prev = f;
      prev_s = s;
    }
  }
}

TEST_CASE("eval_f width converges") {
  double w = 1e-3;
  double prev = eval_f(ComplexBox({-1.3, -1.3 + w}, {0.05, 0.05 + w})).width();
  for (int k = 0; k < 4; ++k) {
    w /= 2;
    const double cur = eval_f(ComplexBox({-1.3, -1.3 + w}, {0.05, 0.05 + w})).width();
    CHECK(cur <= prev / 2 * 1.05);
    prev = cur;
  }
}

TEST_CASE("literal reading differs and is reported") {
  const ComplexBox z = oracle::box(-1.0, 0.0);
  CHECK_NOTHROW(eval_f(z, FReading::kCaseEvaluation));
  // Lnn(F3(-1)) = Lnn(0) has no logarithm
  CHECK_THROWS_AS(eval_f(z, FReading::kLiteral), Error);
}
