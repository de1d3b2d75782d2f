#include "padyn/congruence.hpp"

#include <algorithm>
#include <future>
#include <string>
#include <thread>

#include "padyn/error.hpp"

namespace padyn {

RootsModP roots_mod_p(const IntPoly& f, const Integer& target, const Prime& p) {
  const std::uint64_t pv = p.value();
  if (pv > kMaxExhaustivePrime) {
    throw Error(ErrorCode::kBoundExceeded,
                "p=" + std::to_string(pv) + " is above the exhaustive search limit " + std::to_string(kMaxExhaustivePrime));
  }
  const FpPoly shifted = fermat_reduce(f - IntPoly::constant(target), p);
  const FpPoly df = reduce_mod_p(derivative(f), p);

  RootsModP out;
  out.degenerate = shifted.is_zero();
  for (std::uint64_t a = 0; a < pv; ++a) {
    if (!out.degenerate && shifted.eval(a) != 0) continue;
    const std::uint64_t d = df.eval(a);
    out.roots.push_back({a, d == 0, d});
  }
  return out;
}

namespace {

std::vector<std::uint64_t> scan_range(const std::vector<std::uint64_t>& coeffs, std::uint64_t target,
                                      std::uint64_t m, std::uint64_t begin, std::uint64_t end) {
  std::vector<std::uint64_t> hits;
  for (std::uint64_t x = begin; x < end; ++x) {
    std::uint64_t acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = add_mod(mul_mod(acc, x, m), *it, m);
    if (acc == target) hits.push_back(x);
  }
  return hits;
}

}  // namespace

std::vector<Integer> solve_congruence_bruteforce(const IntPoly& f, const Integer& target, const Integer& m,
                                                 const Integer& bound) {
  if (m < 2) throw Error(ErrorCode::kInvalidArgument, "modulus must be at least 2, got " + to_string(m));
  if (m > bound) {
    throw Error(ErrorCode::kBoundExceeded,
                "modulus " + to_string(m) + " exceeds the exhaustive search bound " + to_string(bound));
  }

  if (!fits_u64(m)) throw Error(ErrorCode::kBoundExceeded, "modulus " + to_string(m) + " exceeds 64 bits");

  std::vector<Integer> out;

  const std::uint64_t mv = to_u64(m);
  std::vector<std::uint64_t> coeffs;
  for (const auto& c : f.coeffs()) coeffs.push_back(reduce_u64(c, mv));
  const std::uint64_t t = reduce_u64(target, mv);

  constexpr std::uint64_t kChunk = 1U << 16;
  const std::uint64_t workers =
      std::clamp<std::uint64_t>(std::thread::hardware_concurrency(), 1, std::max<std::uint64_t>(1, mv / kChunk));
  const std::uint64_t step = (mv + workers - 1) / workers;

  std::vector<std::future<std::vector<std::uint64_t>>> parts;
  for (std::uint64_t begin = 0; begin < mv; begin += step) {
    const std::uint64_t end = std::min(mv, begin + step);
    if (workers == 1) {
      parts.push_back(std::async(std::launch::deferred, scan_range, std::cref(coeffs), t, mv, begin, end));
    } else {
      parts.push_back(std::async(std::launch::async, scan_range, std::cref(coeffs), t, mv, begin, end));
    }
  }
  // Chunks are disjoint and ascending, so concatenation in order is sorted.
  for (auto& part : parts) {
    for (std::uint64_t x : part.get()) out.push_back(from_u64(x));
  }
  return out;
}

}  // namespace padyn
