#include "branch_audit/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numeric>

namespace branch_audit {

namespace {

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

std::vector<std::pair<unsigned, unsigned>> factorize(unsigned n) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

int moebius(unsigned n) {
  int mu = 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

// Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}: all multiplications first, then
// the exact divisions by binomials.
std::vector<mpz_class> compute_cyclotomic(unsigned m) {
  std::vector<mpz_class> p{1};
  std::vector<unsigned> divide_by;
  for (unsigned d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    const int mu = moebius(m / d);
    if (mu == 1) {
      std::vector<mpz_class> next(p.size() + d);
      for (std::size_t i = 0; i < p.size(); ++i) {
        next[i + d] += p[i];
        next[i] -= p[i];
      }
      p = std::move(next);
    } else if (mu == -1) {
      divide_by.push_back(d);
    }
  }
  for (const unsigned d : divide_by) {
    const std::size_t deg = p.size() - 1;
    std::vector<mpz_class> q(deg - d + 1);
    // p = q * (x^d - 1): p[j + d] = q[j] - q[j + d].
    for (std::size_t j = q.size(); j-- > 0;) {
      q[j] = p[j + d] + (j + d < q.size() ? q[j + d] : mpz_class(0));
    }
    p = std::move(q);
  }
  return p;
}

std::mutex& cache_mutex() {
  static std::mutex m;
  return m;
}

// Reduces p modulo Phi_m in place; the result has exactly phi(m) entries.
void reduce(QPoly& p, unsigned m) {
  const auto& phi = cyclotomic_polynomial(m);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = p.size(); i-- > deg;) {
    if (p[i] == 0) continue;
    const Rational c = p[i];
    for (std::size_t j = 0; j < deg; ++j) {
      if (phi[j] != 0) p[i - deg + j] -= c * phi[j];
    }
    p[i] = 0;
  }
  p.resize(deg);
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] != 0) out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

// Quotient and remainder over Q; divisor must be nonzero after trimming.
std::pair<QPoly, QPoly> poly_divmod(QPoly num, QPoly den) {
  trim(num);
  trim(den);
  if (num.size() < den.size()) return {{}, num};
  QPoly q(num.size() - den.size() + 1);
  const Rational lead = den.back();
  for (std::size_t i = q.size(); i-- > 0;) {
    const Rational c = num[i + den.size() - 1] / lead;
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
  }
  num.resize(den.size() - 1);
  trim(num);
  return {q, num};
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] -= b[i];
  trim(out);
  return out;
}

unsigned lcm_order(unsigned a, unsigned b) { return std::lcm(a, b); }

}  // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(unsigned m) {
  static std::map<unsigned, std::vector<mpz_class>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex());
  auto it = cache.find(m);
  if (it == cache.end()) it = cache.emplace(m, compute_cyclotomic(m)).first;
  return it->second;
}

unsigned euler_phi(unsigned m) {
  unsigned phi = m;
  for (const auto& [p, e] : factorize(m)) phi = phi / p * (p - 1);
  return phi;
}

CycNum::CycNum() : CycNum(Rational(0), 1) {}

CycNum::CycNum(const Rational& q, unsigned order) : order_(order), coeffs_(euler_phi(order)) {
  coeffs_[0] = q;
}

CycNum::CycNum(unsigned order, std::vector<Rational> reduced) : order_(order), coeffs_(std::move(reduced)) {}

CycNum CycNum::from_powers(unsigned m, const std::vector<Rational>& power_coeffs) {
  if (m == 0) throw Error("InvalidOrder", "cyclotomic order must be positive");
  QPoly p(std::max<std::size_t>(m, 1));
  for (std::size_t k = 0; k < power_coeffs.size(); ++k) p[k % m] += power_coeffs[k];
  reduce(p, m);
  return {m, std::move(p)};
}

CycNum CycNum::lifted(unsigned m) const {
  if (m == order_) return *this;
  if (m % order_ != 0) throw Error("InvalidOrder", "lift target must be a multiple of the order");
  const unsigned step = m / order_;
  QPoly p(m);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[k * step] = coeffs_[k];
  reduce(p, m);
  return {m, std::move(p)};
}

bool CycNum::is_zero() const {
  for (const auto& c : coeffs_) {
    if (c != 0) return false;
  }
  return true;
}

bool CycNum::is_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) return false;
  }
  return true;
}

std::optional<Rational> CycNum::as_rational() const {
  if (!is_rational()) return std::nullopt;
  return coeffs_[0];
}

CycNum CycNum::conj() const {
  QPoly p(order_);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) p[(order_ - k) % order_] += coeffs_[k];
  reduce(p, order_);
  return {order_, std::move(p)};
}

CycNum CycNum::inv() const {
  if (is_zero()) throw ZeroInverse();
  // Extended Euclid: find u with a*u = 1 mod Phi_m.
  const auto& phi_z = cyclotomic_polynomial(order_);
  QPoly r0(phi_z.begin(), phi_z.end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0;
  QPoly s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, r] = poly_divmod(r0, r1);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant since Phi_m is irreducible.
  const Rational c = r1.at(0);
  for (auto& x : s1) x /= c;
  QPoly p(std::max<std::size_t>(s1.size(), euler_phi(order_)));
  std::copy(s1.begin(), s1.end(), p.begin());
  reduce(p, order_);
  return {order_, std::move(p)};
}

CycNum CycNum::operator-() const {
  QPoly p = coeffs_;
  for (auto& c : p) c = -c;
  return {order_, std::move(p)};
}

CycNum operator+(const CycNum& a, const CycNum& b) {
  const unsigned m = lcm_order(a.order_, b.order_);
  CycNum x = a.lifted(m);
  const CycNum y = b.lifted(m);
  for (std::size_t k = 0; k < x.coeffs_.size(); ++k) x.coeffs_[k] += y.coeffs_[k];
  return x;
}

CycNum operator-(const CycNum& a, const CycNum& b) { return a + (-b); }

CycNum operator*(const CycNum& a, const CycNum& b) {
  const unsigned m = lcm_order(a.order_, b.order_);
  const CycNum x = a.lifted(m);
  const CycNum y = b.lifted(m);
  QPoly p = poly_mul(x.coeffs_, y.coeffs_);
  if (p.size() < x.coeffs_.size()) p.resize(x.coeffs_.size());
  reduce(p, m);
  return {m, std::move(p)};
}

CycNum operator/(const CycNum& a, const CycNum& b) { return a * b.inv(); }

bool operator==(const CycNum& a, const CycNum& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  const unsigned m = lcm_order(a.order_, b.order_);
  return a.lifted(m).coeffs_ == b.lifted(m).coeffs_;
}

CycNum cyc_root_of_unity(unsigned m, long k) {
  if (m == 0) throw Error("InvalidOrder", "cyclotomic order must be positive");
  const long e = ((k % static_cast<long>(m)) + m) % m;
  std::vector<Rational> powers(static_cast<std::size_t>(e) + 1);
  powers[e] = 1;
  return CycNum::from_powers(m, powers);
}

CycNum cyc_arith(CycOp op, const CycNum& a, const CycNum& b) {
  switch (op) {
    case CycOp::kAdd: return a + b;
    case CycOp::kSub: return a - b;
    case CycOp::kMul: return a * b;
    case CycOp::kInv: return a.inv();
    case CycOp::kConj: return a.conj();
  }
  return {};
}

ComplexBox cis_pi(const Rational& turn) {
  // Normalize into (-1, 1].
  Rational shifted = (turn + 1) / 2;
  shifted.canonicalize();
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
  Rational t = turn - Rational(2 * whole);
  if (t == -1) t = 1;
  if (t == 0) return ComplexBox::point(1.0, 0.0);
  if (t == 1) return ComplexBox::point(-1.0, 0.0);
  if (t == Rational(1, 2)) return ComplexBox::point(0.0, 1.0);
  if (t == Rational(-1, 2)) return ComplexBox::point(0.0, -1.0);
  const RealInterval angle = constants::pi() * RealInterval::from_rational(t);
  return {cos(angle), sin(angle)};
}

ComplexBox cyc_embed(const CycNum& a, double target_width) {
  if (!(target_width > 0.0)) throw Error("InvalidArgument", "target width must be positive");
  const unsigned m = a.order();
  ComplexBox sum = ComplexBox::point(0.0, 0.0);
  const auto& c = a.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    // zeta_m^k = e^{i pi (2k/m)}, angle normalized into (-pi, pi].
    Rational t(mpz_class(2 * static_cast<long>(k)), mpz_class(m));
    t.canonicalize();
    const ComplexBox term = cis_pi(t);
    if (c[k] == 1) {
      sum = sum + term;
    } else {
      sum = sum + RealInterval::from_rational(c[k]) * term;
    }
  }
  if (sum.width() > target_width) {
    throw PrecisionUnattainable("embedding of " + to_string(a) + " has width " + std::to_string(sum.width()) +
                                " > target " + std::to_string(target_width));
  }
  return sum;
}

std::optional<RootOfUnity> as_root_of_unity(const CycNum& a) {
  if (a.is_zero() || !(a * a.conj() == CycNum(1))) return std::nullopt;
  const unsigned big = a.order() % 2 == 0 ? a.order() : 2 * a.order();
  const ComplexBox z = cyc_embed(a, 1e-6);
  const double angle = std::atan2(z.im().mid(), z.re().mid());
  const long guess = std::lround(angle * big / (2.0 * M_PI));
  for (long delta : {0L, 1L, -1L}) {
    const long k = ((guess + delta) % static_cast<long>(big) + big) % big;
    if (cyc_root_of_unity(big, k) == a) return RootOfUnity{big, static_cast<unsigned>(k)};
  }
  return std::nullopt;
}

const char* to_string(ArcSide side) { return side == ArcSide::kUpper ? "upper" : "lower"; }

CycNum arc_point(unsigned n, ArcSide side) {
  if (n < 2) throw Error("InvalidArgument", "arc_point needs n >= 2");
  const long k = side == ArcSide::kUpper ? static_cast<long>(n) - 1 : static_cast<long>(n) + 1;
  return cyc_root_of_unity(2 * n, k);
}

Rational arc_theta_over_pi(unsigned n, ArcSide side) {
  Rational t = Rational(1) - Rational(1, n);
  t.canonicalize();
  return side == ArcSide::kUpper ? t : Rational(-t);
}

std::string to_string(const CycNum& a) {
  if (a.is_rational()) return a.coefficients()[0].get_str();
  if (const auto root = as_root_of_unity(a)) {
    const unsigned g = std::gcd(root->order, root->exponent);
    return "zeta(" + std::to_string(root->order / g) + "," + std::to_string(root->exponent / g) + ")";
  }
  std::string out;
  const auto& c = a.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const bool negative = c[k] < 0;
    const Rational mag = negative ? Rational(-c[k]) : c[k];
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string unit = k == 0 ? "" : "zeta(" + std::to_string(a.order()) + "," + std::to_string(k) + ")";
    if (k == 0) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += unit;
    } else {
      out += mag.get_str() + "*" + unit;
    }
  }
  return out;
}

}  // namespace branch_audit
