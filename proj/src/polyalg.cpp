#include "branch_audit/polyalg.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace branch_audit {

Poly::Poly(std::vector<CycNum> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  order_ = 1;
  for (const auto& c : coeffs_) order_ = std::lcm(order_, c.order());
  for (auto& c : coeffs_) c = c.lifted(order_);
}

Poly Poly::from_rationals(const std::vector<Rational>& coeffs) {
  std::vector<CycNum> c;
  c.reserve(coeffs.size());
  for (const auto& q : coeffs) c.emplace_back(q);
  return Poly(std::move(c));
}

Poly Poly::linear_factor(const CycNum& root) { return Poly({-root, CycNum(1)}); }

CycNum Poly::coefficient(std::size_t k) const {
  if (k < coeffs_.size()) return coeffs_[k];
  return CycNum(Rational(0), order_);
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == CycNum(1); }

bool Poly::is_rational() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const CycNum& c) { return c.is_rational(); });
}

Poly Poly::monic() const {
  if (coeffs_.empty() || is_monic()) return *this;
  const CycNum inv_lead = leading().inv();
  std::vector<CycNum> c;
  c.reserve(coeffs_.size());
  for (const auto& x : coeffs_) c.push_back(x * inv_lead);
  return Poly(std::move(c));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<CycNum> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) + b.coefficient(k);
  return Poly(std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<CycNum> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = a.coefficient(k) - b.coefficient(k);
  return Poly(std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const unsigned m = std::lcm(a.order_, b.order_);
  std::vector<CycNum> c(a.coeffs_.size() + b.coeffs_.size() - 1, CycNum(Rational(0), m));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(std::move(c));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
    if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
  }
  return true;
}

namespace {

std::string coefficient_text(const CycNum& c, bool has_power, bool& negative) {
  negative = false;
  if (const auto q = c.as_rational()) {
    negative = *q < 0;
    const Rational mag = negative ? Rational(-*q) : *q;
    if (has_power && mag == 1) return "";
    return mag.get_str() + (has_power ? "*" : "");
  }
  const std::string body = to_string(c);
  const std::string wrapped = body.find(' ') == std::string::npos ? body : "(" + body + ")";
  return has_power ? wrapped + "*" : wrapped;
}

}  // namespace

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    bool negative = false;
    const std::string coeff = coefficient_text(c[k], k > 0, negative);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coeff;
    if (k == 1) out += "z";
    if (k > 1) out += "z^" + std::to_string(k);
  }
  return out;
}

LinearDivision divide_linear(const Poly& h, const CycNum& x1, Normalization norm) {
  if (h.degree() < 1) throw Error("InvalidArgument", "divide_linear needs deg h >= 1");
  if (!h.is_monic() && norm == Normalization::kRequireMonic) throw NonMonicInput();
  const Poly monic = h.monic();
  const auto& a = monic.coefficients();
  const std::size_t n = a.size() - 1;
  std::vector<CycNum> b(n);
  b[n - 1] = a[n];
  for (std::size_t k = n - 1; k > 0; --k) b[k - 1] = a[k] + x1 * b[k];
  CycNum remainder = a[0] + x1 * b[0];
  return {monic, Poly(std::move(b)), std::move(remainder)};
}

CycNum complex_pair(const Rational& re, const Rational& im) {
  return CycNum(re, 4) + CycNum(im, 4) * cyc_root_of_unity(4, 1);
}

const char* to_string(ConjRootVerdict v) {
  switch (v) {
    case ConjRootVerdict::kConfirmed: return "CONFIRMED";
    case ConjRootVerdict::kRefutedNotRoot: return "REFUTED_NOT_ROOT";
    case ConjRootVerdict::kRefutedConjNotRoot: return "REFUTED_CONJ_NOT_ROOT";
  }
  return "?";
}

ConjRootVerdict conj_root_check(const Poly& p, const CycNum& root) {
  if (!p.is_rational()) throw NonRationalCoefficients();
  if (!poly_eval(p, root).is_zero()) return ConjRootVerdict::kRefutedNotRoot;
  if (!poly_eval(p, root.conj()).is_zero()) return ConjRootVerdict::kRefutedConjNotRoot;
  return ConjRootVerdict::kConfirmed;
}

namespace {

// nullopt when some root fails; index of the failure through `failed`.
std::optional<Poly> deflate_sequence(const Poly& monic, const std::vector<CycNum>& roots,
                                     const std::vector<std::size_t>& order, std::size_t* failed) {
  Poly current = monic;
  for (const std::size_t idx : order) {
    if (current.degree() < 1) {
      if (failed) *failed = idx;
      return std::nullopt;
    }
    LinearDivision step = divide_linear(current, roots[idx]);
    if (!step.remainder.is_zero()) {
      if (failed) *failed = idx;
      return std::nullopt;
    }
    current = std::move(step.quotient);
  }
  return current;
}

}  // namespace

DeflationReport deflate_all(const Poly& h, const std::vector<CycNum>& roots) {
  const Poly monic = h.monic();
  std::vector<std::size_t> order(roots.size());
  std::iota(order.begin(), order.end(), std::size_t{0});

  std::size_t failed = 0;
  auto first = deflate_sequence(monic, roots, order, &failed);
  if (!first) throw NotARoot(failed);

  DeflationReport report;
  report.removed = roots;
  report.quotient = *first;
  report.unique = true;

  auto check = [&](const std::vector<std::size_t>& perm) {
    ++report.orderings_checked;
    const auto q = deflate_sequence(monic, roots, perm, nullptr);
    if (!q || !(*q == report.quotient)) report.unique = false;
  };

  if (roots.size() <= 6) {
    std::vector<std::size_t> perm = order;
    do {
      check(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    for (int reversed = 0; reversed < 2; ++reversed) {
      std::vector<std::size_t> perm = order;
      if (reversed) std::reverse(perm.begin(), perm.end());
      for (std::size_t r = 0; r < perm.size(); ++r) {
        check(perm);
        std::rotate(perm.begin(), perm.begin() + 1, perm.end());
      }
    }
  }
  return report;
}

CycNum poly_eval(const Poly& p, const CycNum& z) {
  CycNum acc(Rational(0), p.order());
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + c[k];
  return acc;
}

ComplexBox poly_eval(const Poly& p, const ComplexBox& z, double embed_width) {
  ComplexBox acc = ComplexBox::point(0.0, 0.0);
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) acc = acc * z + cyc_embed(c[k], embed_width);
  return acc;
}

}  // namespace branch_audit
