#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "branch_audit/cyclotomic.hpp"

namespace branch_audit {

/// Dense univariate polynomial with exact coefficients, lowest degree
/// first. All coefficients share one cyclotomic order (1 for rational
/// polynomials); mixed orders are lifted to their lcm on construction.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<CycNum> coeffs);

  static Poly from_rationals(const std::vector<Rational>& coeffs);
  /// z - root
  static Poly linear_factor(const CycNum& root);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  unsigned order() const { return order_; }
  const std::vector<CycNum>& coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  CycNum coefficient(std::size_t k) const;
  const CycNum& leading() const { return coeffs_.back(); }
  bool is_monic() const;
  bool is_rational() const;
  Poly monic() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  unsigned order_ = 1;
  std::vector<CycNum> coeffs_;
};

std::string to_string(const Poly& p);

enum class Normalization { kNormalize, kRequireMonic };

struct LinearDivision {
  /// The monic polynomial actually divided: h / leading(h).
  Poly dividend;
  Poly quotient;
  CycNum remainder;
};

/// dividend = (z - x1) * quotient + remainder, via the Horner cascade
/// b_{n-1} = 1, b_{k-1} = a_k + x1 b_k, remainder = a_0 + x1 b_0.
/// Throws NonMonicInput for a non-monic h under kRequireMonic.
LinearDivision divide_linear(const Poly& h, const CycNum& x1, Normalization norm = Normalization::kNormalize);

/// a + b i as an element of Q(zeta_4).
CycNum complex_pair(const Rational& re, const Rational& im);

enum class ConjRootVerdict { kConfirmed, kRefutedNotRoot, kRefutedConjNotRoot };
const char* to_string(ConjRootVerdict v);
/// Throws NonRationalCoefficients unless p has rational coefficients.
ConjRootVerdict conj_root_check(const Poly& p, const CycNum& root);

struct DeflationReport {
  std::vector<CycNum> removed;
  /// Terminal quotient of monic(h) after removing every listed root.
  Poly quotient;
  /// Every checked ordering of the root list produced the same quotient.
  bool unique = false;
  std::size_t orderings_checked = 0;
};

/// Removes the listed roots one at a time. Orderings checked for
/// uniqueness: all permutations up to six roots, otherwise every rotation
/// of the list and of its reverse. Throws NotARoot(index) on the first root
/// that fails to annihilate the current quotient in the given order.
DeflationReport deflate_all(const Poly& h, const std::vector<CycNum>& roots);

CycNum poly_eval(const Poly& p, const CycNum& z);
ComplexBox poly_eval(const Poly& p, const ComplexBox& z, double embed_width = 0x1p-40);

}  // namespace branch_audit
