#include <gmpxx.h>
#include <mpfr.h>

#include "branch_audit/interval.hpp"

namespace branch_audit::constants {

namespace {

// integer_part + 0.<hex_fraction>, enclosed by the truncation and the
// truncation plus one unit in the last hex digit.
RealInterval from_hex(unsigned integer_part, const char* hex_fraction) {
  const mpz_class digits(hex_fraction, 16);
  const unsigned long bits = 4 * std::char_traits<char>::length(hex_fraction);
  mpfr_t x;
  mpfr_init2(x, static_cast<mpfr_prec_t>(bits + 64));
  mpfr_set_z(x, digits.get_mpz_t(), MPFR_RNDN);
  mpfr_div_2ui(x, x, bits, MPFR_RNDN);
  mpfr_add_ui(x, x, integer_part, MPFR_RNDN);
  const double lo = mpfr_get_d(x, MPFR_RNDD);
  mpfr_t ulp;
  mpfr_init2(ulp, 8);
  mpfr_set_ui_2exp(ulp, 1, -static_cast<long>(bits), MPFR_RNDN);
  mpfr_add(x, x, ulp, MPFR_RNDN);
  const double hi = mpfr_get_d(x, MPFR_RNDU);
  mpfr_clears(x, ulp, static_cast<mpfr_ptr>(nullptr));
  return {lo, hi};
}

}  // namespace

const RealInterval& pi() {
  static const RealInterval value = from_hex(3, kPiHexFraction);
  return value;
}

const RealInterval& ln2() {
  static const RealInterval value = from_hex(0, kLn2HexFraction);
  return value;
}

}  // namespace branch_audit::constants
