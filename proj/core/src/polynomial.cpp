#include "padyn/polynomial.hpp"

#include <algorithm>
#include <string>

#include "padyn/error.hpp"

namespace padyn {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> coeffs(degree + 1, Integer(0));
  coeffs[degree] = c;
  return IntPoly(std::move(coeffs));
}

Integer IntPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

const Integer& IntPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::kInvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

IntPoly IntPoly::pow(unsigned exponent) const {
  IntPoly result = constant(1);
  IntPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Integer> out(coeffs_.size() + other.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPoly operator*(const Integer& c, const IntPoly& a) {
  std::vector<Integer> out(a.coeffs_.begin(), a.coeffs_.end());
  for (auto& v : out) v *= c;
  return IntPoly(std::move(out));
}

IntPoly operator-(const IntPoly& a) { return Integer(-1) * a; }

Integer eval(const IntPoly& f, const Integer& x) {
  Integer acc = 0;
  const auto c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer eval_mod(const IntPoly& f, const Integer& x, const Integer& m) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "modulus must be at least 2, got " + to_string(m));
  const Integer xr = mod(x, m);
  Integer acc = 0;
  const auto c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = mod(acc * xr + *it, m);
  return acc;
}

IntPoly derivative(const IntPoly& f) {
  const auto c = f.coeffs();
  if (c.size() <= 1) return {};
  std::vector<Integer> out(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(out));
}

// ---------------------------------------------------------------------------
// F_p polynomials

FpPoly::FpPoly(const Prime& p, std::vector<std::uint64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_) c %= p_.value();
  normalize();
}

void FpPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::monomial(const Prime& p, std::uint64_t c, std::size_t degree) {
  std::vector<std::uint64_t> coeffs(degree + 1, 0);
  coeffs[degree] = c;
  return FpPoly(p, std::move(coeffs));
}

std::uint64_t FpPoly::leading() const {
  if (coeffs_.empty()) throw Error(ErrorCode::kInvalidArgument, "zero polynomial has no leading coefficient");
  return coeffs_.back();
}

std::uint64_t FpPoly::eval(std::uint64_t x) const noexcept {
  const std::uint64_t p = p_.value();
  x %= p;
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = add_mod(mul_mod(acc, x, p), *it, p);
  return acc;
}

IntPoly FpPoly::lift() const {
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  for (std::uint64_t c : coeffs_) out.push_back(from_u64(c));
  return IntPoly(std::move(out));
}

namespace {

void require_same_prime(const FpPoly& a, const FpPoly& b) {
  if (a.prime() != b.prime()) {
    throw Error(ErrorCode::kInvalidArgument, "F_p polynomials over different primes (" +
                                                 std::to_string(a.prime().value()) + " vs " +
                                                 std::to_string(b.prime().value()) + ")");
  }
}

}  // namespace

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
  require_same_prime(a, b);
  const std::uint64_t p = a.p_.value();
  std::vector<std::uint64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = add_mod(a.coeff(i), b.coeff(i), p);
  return FpPoly(a.p_, std::move(out));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
  require_same_prime(a, b);
  const std::uint64_t p = a.p_.value();
  std::vector<std::uint64_t> out(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = sub_mod(a.coeff(i), b.coeff(i), p);
  return FpPoly(a.p_, std::move(out));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
  require_same_prime(a, b);
  if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
  const std::uint64_t p = a.p_.value();
  std::vector<std::uint64_t> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] = add_mod(out[i + j], mul_mod(a.coeffs_[i], b.coeffs_[j], p), p);
    }
  }
  return FpPoly(a.p_, std::move(out));
}

FpPoly reduce_mod_p(const IntPoly& f, const Prime& p) {
  std::vector<std::uint64_t> out;
  out.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) out.push_back(reduce_u64(c, p.value()));
  return FpPoly(p, std::move(out));
}

FpDivMod fp_divmod(const FpPoly& f, const FpPoly& g) {
  require_same_prime(f, g);
  if (g.is_zero()) throw Error(ErrorCode::kDivisionByZero, "division by the zero polynomial");
  const Prime& prime = f.prime();
  const std::uint64_t p = prime.value();
  if (f.degree() < g.degree()) return {FpPoly(prime), f};

  std::vector<std::uint64_t> rem(f.coeffs().begin(), f.coeffs().end());
  const auto gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  const std::uint64_t lead_inv = pow_mod(g.leading(), p - 2, p);
  std::vector<std::uint64_t> quot(rem.size() - dg, 0);

  for (std::size_t i = rem.size(); i-- > dg;) {
    const std::uint64_t c = mul_mod(rem[i], lead_inv, p);
    if (c == 0) continue;
    const std::size_t shift = i - dg;
    quot[shift] = c;
    for (std::size_t j = 0; j <= dg; ++j) rem[shift + j] = sub_mod(rem[shift + j], mul_mod(c, gc[j], p), p);
  }
  rem.resize(dg);
  return {FpPoly(prime, std::move(quot)), FpPoly(prime, std::move(rem))};
}

FpPoly x_pow_p_minus_x(const Prime& p) {
  return FpPoly::monomial(p, 1, p.value()) - FpPoly::monomial(p, 1, 1);
}

FpPoly fermat_reduce(const FpPoly& f) {
  const std::uint64_t p = f.prime().value();
  if (f.degree() < static_cast<long long>(p)) return f;
  // x^d = x^(((d-1) mod (p-1)) + 1) modulo x^p - x for d >= 1.
  std::vector<std::uint64_t> out(p, 0);
  const auto c = f.coeffs();
  out[0] = c[0];
  for (std::size_t d = 1; d < c.size(); ++d) {
    const std::size_t folded = ((d - 1) % (p - 1)) + 1;
    out[folded] = add_mod(out[folded], c[d], p);
  }
  return FpPoly(f.prime(), std::move(out));
}

FpPoly fermat_reduce(const IntPoly& f, const Prime& p) { return fermat_reduce(reduce_mod_p(f, p)); }

RootCountCertificate divides_xp_minus_x(const IntPoly& f, const Prime& p) {
  const FpPoly g = reduce_mod_p(f, p);
  if (!g.is_monic()) throw Error(ErrorCode::kNotMonic, "polynomial is not monic modulo " + std::to_string(p.value()));
  if (g.degree() > static_cast<long long>(p.value())) {
    throw Error(ErrorCode::kInvalidArgument, "degree exceeds p; apply fermat_reduce first");
  }
  auto [q, r] = fp_divmod(x_pow_p_minus_x(p), g);
  const bool divides = r.is_zero();
  return {divides, std::move(q), std::move(r)};
}

FpPoly make_monic(const FpPoly& f) {
  if (f.is_zero()) throw Error(ErrorCode::kDivisionByZero, "zero polynomial cannot be made monic");
  const std::uint64_t p = f.prime().value();
  const std::uint64_t inv = pow_mod(f.leading(), p - 2, p);
  std::vector<std::uint64_t> out(f.coeffs().begin(), f.coeffs().end());
  for (auto& c : out) c = mul_mod(c, inv, p);
  return FpPoly(f.prime(), std::move(out));
}

}  // namespace padyn
