#pragma once

#include <optional>
#include <string>
#include <vector>

#include "branch_audit/interval.hpp"

namespace branch_audit {

/// Exact element of the cyclotomic field Q(zeta_m), zeta_m = e^{2 pi i/m}.
///
/// The value is sum_k coeffs[k] * zeta_m^k with the coefficient vector
/// reduced modulo the m-th cyclotomic polynomial, so it has exactly
/// phi(m) entries and is a canonical representative: two elements of the
/// same order are equal iff their vectors are equal. Operands of different
/// orders are lifted to Q(zeta_lcm) before combining.
class CycNum {
 public:
  /// Zero of Q = Q(zeta_1).
  CycNum();
  CycNum(const Rational& q, unsigned order = 1);  // NOLINT(google-explicit-constructor)

  /// sum_k power_coeffs[k] * zeta_m^k, for any number of terms.
  static CycNum from_powers(unsigned m, const std::vector<Rational>& power_coeffs);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// The same value represented in Q(zeta_m); m must be a multiple of order().
  CycNum lifted(unsigned m) const;

  bool is_zero() const;
  /// True iff the value lies in Q.
  bool is_rational() const;
  std::optional<Rational> as_rational() const;

  /// Throws ZeroInverse for zero.
  CycNum inv() const;
  CycNum conj() const;

  CycNum operator-() const;
  friend CycNum operator+(const CycNum& a, const CycNum& b);
  friend CycNum operator-(const CycNum& a, const CycNum& b);
  friend CycNum operator*(const CycNum& a, const CycNum& b);
  friend CycNum operator/(const CycNum& a, const CycNum& b);
  friend bool operator==(const CycNum& a, const CycNum& b);

 private:
  CycNum(unsigned order, std::vector<Rational> reduced);

  unsigned order_ = 1;
  std::vector<Rational> coeffs_;
};

/// Coefficients of the m-th cyclotomic polynomial, lowest degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(unsigned m);
unsigned euler_phi(unsigned m);

/// zeta_m^k, reduced. Precondition m >= 1.
CycNum cyc_root_of_unity(unsigned m, long k);

enum class CycOp { kAdd, kSub, kMul, kInv, kConj };
/// kInv and kConj ignore b.
CycNum cyc_arith(CycOp op, const CycNum& a, const CycNum& b = CycNum());

/// e^{i pi t} for an exact rational t; exact at multiples of 1/2.
ComplexBox cis_pi(const Rational& t);

/// Box containing the complex value of a under zeta_m -> e^{2 pi i/m}.
/// Throws PrecisionUnattainable when target_width is below what double
/// endpoints can resolve for this value.
ComplexBox cyc_embed(const CycNum& a, double target_width);

/// If a is a root of unity, the pair (M, k) with a = zeta_M^k, 0 <= k < M.
struct RootOfUnity {
  unsigned order;
  unsigned exponent;
};
std::optional<RootOfUnity> as_root_of_unity(const CycNum& a);

enum class ArcSide { kUpper, kLower };
const char* to_string(ArcSide side);

/// The unit-circle test points e^{i(pi - pi/n)} (upper) and
/// e^{i(-pi + pi/n)} (lower), as zeta_{2n}^{n-1} and zeta_{2n}^{n+1}.
CycNum arc_point(unsigned n, ArcSide side);
/// Principal argument of arc_point(n, side) divided by pi.
Rational arc_theta_over_pi(unsigned n, ArcSide side);

/// "3/4", "zeta(8,3)", "1/2 - 2*zeta(5,1) + ...".
std::string to_string(const CycNum& a);

}  // namespace branch_audit
