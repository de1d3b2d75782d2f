#include <string>

#include "padyn/backward.hpp"
#include "padyn/error.hpp"

namespace padyn {

namespace {

void require_same_length(std::span<const Integer> s, std::span<const Integer> t) {
  if (s.size() != t.size()) {
    throw Error(ErrorCode::kLengthMismatch,
                "sequence lengths differ (" + std::to_string(s.size()) + " vs " + std::to_string(t.size()) + ")");
  }
}

}  // namespace

Rational distance_series(std::span<const Integer> s, std::span<const Integer> t, const Prime& p) {
  require_same_length(s, t);
  Rational total = 0;
  Integer scale = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Integer diff = abs(s[i] - t[i]);
    if (diff != 0) {
      Rational term(diff, scale);
      term.canonicalize();
      total += term;
    }
    scale *= static_cast<unsigned long>(p.value());
  }
  return total;
}

Rational distance_first_difference(std::span<const Integer> s, std::span<const Integer> t) {
  require_same_length(s, t);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] != t[i]) {
      Rational out(Integer(1), pow(Integer(2), i));
      out.canonicalize();
      return out;
    }
  }
  return Rational(0);
}

}  // namespace padyn
