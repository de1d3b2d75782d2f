#include "padyn/padic.hpp"

#include <array>
#include <string>

#include "padyn/error.hpp"

namespace padyn {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::array<std::uint64_t, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (std::uint64_t b : kBases) {
    if (n % b == 0) return n == b;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : kBases) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Prime::Prime(std::uint64_t p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
}

Prime Prime::from_integer(const Integer& p) {
  if (!fits_u64(p)) throw Error(ErrorCode::kNotPrime, to_string(p) + " is not a supported prime");
  return Prime(to_u64(p));
}

Integer Prime::power(unsigned k) const { return pow(as_integer(), k); }

std::int64_t Valuation::value() const {
  if (!value_) throw Error(ErrorCode::kInvalidArgument, "valuation is infinite");
  return *value_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) {
    return static_cast<int>(a.is_infinite()) <=> static_cast<int>(b.is_infinite());
  }
  return *a.value_ <=> *b.value_;
}

Valuation vp_int(const Integer& n, const Prime& p) {
  if (n == 0) return Valuation::infinity();
  Integer rest = abs(n);
  const Integer base = p.as_integer();
  // mpz_remove strips every factor of p and reports how many it removed.
  const auto e = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
  return Valuation(static_cast<std::int64_t>(e));
}

Valuation vp_rat(const Integer& numerator, const Integer& denominator, const Prime& p) {
  if (denominator == 0) throw Error(ErrorCode::kZeroDenominator, "denominator is zero");
  if (numerator == 0) return Valuation::infinity();
  return Valuation(vp_int(numerator, p).value() - vp_int(denominator, p).value());
}

Rational PadicNorm::to_rational() const {
  if (is_zero()) return Rational(0);
  const std::int64_t v = v_.value();
  const Integer pk = pow(p_.as_integer(), static_cast<unsigned long>(v < 0 ? -v : v));
  Rational out = v >= 0 ? Rational(Integer(1), pk) : Rational(pk, Integer(1));
  out.canonicalize();
  return out;
}

std::strong_ordering operator<=>(const PadicNorm& a, const PadicNorm& b) {
  if (a.p_ != b.p_) throw Error(ErrorCode::kInvalidArgument, "comparing norms of different primes");
  // Larger valuation means smaller norm.
  return b.v_ <=> a.v_;
}

PadicNorm abs_p(const Integer& numerator, const Integer& denominator, const Prime& p) {
  return PadicNorm(p, vp_rat(numerator, denominator, p));
}

PadicNorm abs_p(const Rational& x, const Prime& p) {
  return abs_p(x.get_num(), x.get_den(), p);
}

namespace {

std::vector<std::uint64_t> digits_of(Integer residue, const Prime& p, unsigned precision) {
  std::vector<std::uint64_t> digits(precision);
  for (unsigned i = 0; i < precision; ++i) {
    digits[i] = mpz_fdiv_q_ui(residue.get_mpz_t(), residue.get_mpz_t(), p.value());
  }
  return digits;
}

void require_compatible(const PadicInt& x, const PadicInt& y) {
  if (x.prime() != y.prime() || x.precision() != y.precision()) {
    throw Error(ErrorCode::kPrecisionMismatch,
                "operands differ in prime or precision (p=" + std::to_string(x.prime().value()) +
                    ",k=" + std::to_string(x.precision()) + " vs p=" + std::to_string(y.prime().value()) +
                    ",k=" + std::to_string(y.precision()) + ")");
  }
}

}  // namespace

PadicInt PadicInt::from_integer(const Integer& n, const Prime& p, unsigned precision) {
  if (precision == 0) throw Error(ErrorCode::kInvalidArgument, "precision must be at least 1");
  return PadicInt(p, digits_of(mod(n, p.power(precision)), p, precision));
}

PadicInt PadicInt::from_digits(std::vector<std::uint64_t> digits, const Prime& p) {
  if (digits.empty()) throw Error(ErrorCode::kInvalidArgument, "precision must be at least 1");
  for (std::uint64_t d : digits) {
    if (d >= p.value()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "digit " + std::to_string(d) + " out of range for p=" + std::to_string(p.value()));
    }
  }
  return PadicInt(p, std::move(digits));
}

Integer PadicInt::residue() const {
  Integer out = 0;
  for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
    out *= static_cast<unsigned long>(p_.value());
    out += static_cast<unsigned long>(*it);
  }
  return out;
}

PadicInt PadicInt::inverse() const {
  if (!is_unit()) throw Error(ErrorCode::kNotAUnit, "not a unit: leading digit a_0 is zero");
  auto inv = inverse_mod(residue(), modulus());
  return from_integer(*inv, p_, precision());
}

PadicInt operator+(const PadicInt& x, const PadicInt& y) {
  require_compatible(x, y);
  return PadicInt::from_integer(x.residue() + y.residue(), x.p_, x.precision());
}

PadicInt operator-(const PadicInt& x, const PadicInt& y) {
  require_compatible(x, y);
  return PadicInt::from_integer(x.residue() - y.residue(), x.p_, x.precision());
}

PadicInt operator*(const PadicInt& x, const PadicInt& y) {
  require_compatible(x, y);
  return PadicInt::from_integer(x.residue() * y.residue(), x.p_, x.precision());
}

PadicInt operator-(const PadicInt& x) {
  return PadicInt::from_integer(-x.residue(), x.p_, x.precision());
}

CoherenceReport check_coherent(std::span<const Integer> terms, const Prime& p,
                               CoherenceConvention convention) {
  if (terms.empty()) throw Error(ErrorCode::kInvalidArgument, "coherence check needs a nonempty sequence");
  const unsigned shift = convention == CoherenceConvention::kLiteral ? 1 : 0;
  for (std::size_t i = 1; i < terms.size(); ++i) {
    const Integer modulus = p.power(static_cast<unsigned>(i + shift));
    if (mod(terms[i] - terms[i - 1], modulus) != 0) return {false, i};
  }
  return {};
}

CoherentSequence::CoherentSequence(std::vector<Integer> terms, const Prime& p) : p_(p) {
  if (const auto report = check_coherent(terms, p); !report.coherent) {
    throw Error(ErrorCode::kInvalidArgument,
                "sequence is not coherent at position " + std::to_string(*report.first_violation));
  }
  for (std::size_t i = 0; i < terms.size(); ++i) {
    terms[i] = mod(terms[i], p.power(static_cast<unsigned>(i + 1)));
  }
  terms_ = std::move(terms);
}

PadicInt CoherentSequence::to_padic() const {
  return PadicInt::from_integer(terms_.back(), p_, static_cast<unsigned>(terms_.size()));
}

}  // namespace padyn
