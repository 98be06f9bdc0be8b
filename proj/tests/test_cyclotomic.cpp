#include <doctest.h>

#include <random>

#include "branch_audit/cyclotomic.hpp"
#include "oracle.hpp"

using namespace branch_audit;
using oracle::Big;

namespace {

CycNum random_cyc(std::mt19937_64& rng, unsigned m) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
  std::vector<Rational> c(euler_phi(m));
  for (auto& x : c) {
    x = Rational(num(rng), den(rng));
    x.canonicalize();
  }
  return CycNum::from_powers(m, c);
}

}  // namespace

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<mpz_class>{-1, 1});
  CHECK(cyclotomic_polynomial(4) == std::vector<mpz_class>{1, 0, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<mpz_class>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<mpz_class>{1, 0, -1, 0, 1});
  CHECK(euler_phi(32) == 16);
  CHECK(euler_phi(30) == 8);
  // Phi_105 is the first with a coefficient of -2.
  const auto& p105 = cyclotomic_polynomial(105);
  CHECK(p105.size() == 49);
  CHECK(std::count(p105.begin(), p105.end(), mpz_class(-2)) == 2);
}

TEST_CASE("cyc_root_of_unity examples") {
  const CycNum i = cyc_root_of_unity(4, 1);
  CHECK(cyc_embed(i, 0x1p-40).contains(0.0, 1.0));
  CHECK(cyc_root_of_unity(2, 1) == CycNum(Rational(-1)));
  CHECK(cyc_root_of_unity(2, 1).is_rational());
  CHECK(cyc_root_of_unity(8, 2) == i);
  CHECK(cyc_root_of_unity(8, -6) == i);
}

TEST_CASE("cyc_arith examples") {
  const CycNum z8 = cyc_root_of_unity(8, 1);
  CHECK(cyc_arith(CycOp::kMul, z8, z8) == cyc_root_of_unity(4, 1));
  for (unsigned n : {3u, 5u, 8u, 12u}) {
    for (unsigned k = 1; k < n; ++k) {
      const CycNum z = cyc_root_of_unity(n, k);
      CHECK(cyc_arith(CycOp::kInv, z) == cyc_root_of_unity(n, n - k));
      CHECK(cyc_arith(CycOp::kInv, z) == cyc_arith(CycOp::kConj, z));
    }
  }
  CHECK(cyc_arith(CycOp::kAdd, cyc_root_of_unity(3, 1), cyc_root_of_unity(3, 2)) == CycNum(Rational(-1)));
  CHECK_THROWS_AS(CycNum().inv(), ZeroInverse);
}

TEST_CASE("cyc_embed examples") {
  const ComplexBox i = cyc_embed(cyc_root_of_unity(4, 1), 0x1p-40);
  CHECK(i.contains(0.0, 1.0));
  CHECK(i.width() <= 0x1p-40);
  const ComplexBox a = cyc_embed(cyc_root_of_unity(32, 15), 0x1p-40);
  CHECK(oracle::in(a, oracle::cis(oracle::pi() * 15 / 16)));
  CHECK(a.width() <= 0x1p-40);
  CHECK(cyc_embed(CycNum(Rational(-1)), 0x1p-40).contains(-1.0, 0.0));
  CHECK_THROWS_AS(cyc_embed(cyc_root_of_unity(7, 1), 1e-300), PrecisionUnattainable);
}

TEST_CASE("arc_point examples") {
  CHECK(arc_point(2, ArcSide::kUpper) == cyc_root_of_unity(4, 1));
  CHECK(arc_point(4, ArcSide::kUpper) == cyc_root_of_unity(8, 3));
  const CycNum p = arc_point(16, ArcSide::kLower);
  CHECK(p == cyc_root_of_unity(32, 17));
  const ComplexBox b = cyc_embed(p, 0x1p-40);
  CHECK(oracle::in(b, oracle::cis(-oracle::pi() * 15 / 16)));
  CHECK(std::abs(b.re().mid() + 0.9808) < 1e-4);
  CHECK(std::abs(b.im().mid() + 0.1951) < 1e-4);
  CHECK(arc_theta_over_pi(16, ArcSide::kLower) == Rational(-15, 16));
}

TEST_CASE("|arc_point| = 1 exactly for n in 2..256") {
  for (unsigned n = 2; n <= 256; ++n) {
    for (ArcSide side : {ArcSide::kUpper, ArcSide::kLower}) {
      const CycNum p = arc_point(n, side);
      CHECK((p * p.conj()) == CycNum(Rational(1)));
    }
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(3);
  for (unsigned m : {5u, 8u, 12u, 15u}) {
    for (int k = 0; k < 20; ++k) {
      const CycNum a = random_cyc(rng, m), b = random_cyc(rng, m), c = random_cyc(rng, m);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      if (!a.is_zero()) CHECK(a * a.inv() == CycNum(Rational(1)));
      // conj(z) z is real under every embedding
      const CycNum n = a * a.conj();
      CHECK(n == n.conj());
      CHECK(cyc_embed(n, 1e-9).im().contains(0.0));
    }
  }
}

TEST_CASE("mixed orders and embedding consistency") {
  std::mt19937_64 rng(5);
  for (int k = 0; k < 30; ++k) {
    const CycNum a = random_cyc(rng, 6), b = random_cyc(rng, 8);
    const CycNum p = a * b;
    CHECK(p.order() == 24);
    CHECK(cyc_embed(p, 1e-9).intersects(cyc_embed(a, 1e-12) * cyc_embed(b, 1e-12)));
    CHECK(cyc_embed(a + b, 1e-9).intersects(cyc_embed(a, 1e-12) + cyc_embed(b, 1e-12)));
  }
}

TEST_CASE("decidable equality across representations") {
  const CycNum lifted = cyc_root_of_unity(4, 1).lifted(8);
  CHECK(lifted.order() == 8);
  CHECK(lifted == cyc_root_of_unity(8, 2));
  CHECK(lifted == cyc_root_of_unity(4, 1));
  CHECK(!(cyc_root_of_unity(8, 1) == cyc_root_of_unity(8, 3)));
  CHECK(CycNum::from_powers(3, {Rational(0), Rational(0), Rational(1)}) == cyc_root_of_unity(3, 2));
  CHECK(CycNum::from_powers(3, {Rational(1), Rational(1), Rational(1)}).is_zero());
}

TEST_CASE("cis_pi and root recognition") {
  CHECK(cis_pi(Rational(0)) == ComplexBox::point(1.0, 0.0));
  CHECK(cis_pi(Rational(1)) == ComplexBox::point(-1.0, 0.0));
  CHECK(cis_pi(Rational(-1, 2)) == ComplexBox::point(0.0, -1.0));
  CHECK(cis_pi(Rational(3)) == ComplexBox::point(-1.0, 0.0));
  CHECK(oracle::in(cis_pi(Rational(15, 16)), oracle::cis(oracle::pi() * 15 / 16)));
  const auto r = as_root_of_unity(cyc_root_of_unity(32, 17));
  REQUIRE(r);
  CHECK(Rational(r->exponent, r->order) == Rational(17, 32));
  CHECK(!as_root_of_unity(CycNum(Rational(1, 2)) + cyc_root_of_unity(4, 1)));
  CHECK(as_root_of_unity(-cyc_root_of_unity(3, 1)));
}

TEST_CASE("printing") {
  CHECK(to_string(cyc_root_of_unity(4, 1)) == "zeta(4,1)");
  CHECK(to_string(cyc_root_of_unity(8, 2)) == "zeta(4,1)");
  CHECK(to_string(CycNum(Rational(3, 4))) == "3/4");
  CHECK(to_string(CycNum(Rational(1, 2)) - CycNum(Rational(2)) * cyc_root_of_unity(5, 1)) == "1/2 - 2*zeta(5,1)");
}
