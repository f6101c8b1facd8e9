#include <algorithm>
#include <numeric>
#include <string>

#include "twinperm/montecarlo.hpp"

namespace twinperm {

namespace {

std::uint64_t factorial(std::size_t n) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

std::uint64_t power(std::uint64_t b, std::size_t e) {
  std::uint64_t out = 1;
  while (e--) out *= b;
  return out;
}

// Sorted, 0-based copies of a validated family.
std::vector<std::vector<std::size_t>> validate_family(std::size_t n, std::size_t r,
                                                      std::size_t k, const PositionFamily& sets,
                                                      std::vector<char>& used) {
  if (sets.size() != r) throw InvalidInput("expected exactly r position sets");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& s : sets) {
    if (s.size() != k) throw InvalidInput("every position set must have k elements");
    std::vector<std::size_t> z;
    for (std::size_t pos : s) {
      if (pos < 1 || pos > n) throw InvalidInput("position out of range 1..n");
      if (used[pos - 1]) throw InvalidInput("position sets overlap");
      used[pos - 1] = 1;
      z.push_back(pos - 1);
    }
    std::sort(z.begin(), z.end());
    out.push_back(std::move(z));
  }
  return out;
}

bool twins_at(const std::vector<Value>& v, const std::vector<std::vector<std::size_t>>& sets) {
  const auto& a = sets[0];
  for (std::size_t j = 1; j < sets.size(); ++j) {
    const auto& b = sets[j];
    for (std::size_t t = 1; t < a.size(); ++t) {
      for (std::size_t i = 0; i < t; ++i) {
        if ((v[a[i]] < v[a[t]]) != (v[b[i]] < v[b[t]])) return false;
      }
    }
  }
  return true;
}

void check_params(std::size_t n, std::size_t r, std::size_t k) {
  if (r < 1 || k < 1) throw InvalidInput("r and k must be positive");
  if (n < 1) throw InvalidInput("n must be positive");
  if (n > kMaxExactLength) {
    throw ResourceLimit("exact enumeration is limited to n <= " + std::to_string(kMaxExactLength));
  }
}

}  // namespace

Rational Rational::of(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InvalidInput("zero denominator");
  const std::uint64_t g = std::gcd(num, den);
  return g == 0 ? Rational{0, 1} : Rational{num / g, den / g};
}

std::string Rational::str() const { return std::to_string(num) + "/" + std::to_string(den); }

Rational operator*(const Rational& a, const Rational& b) {
  // Cross-reduce first; every operand here divides some n! with n <= 8.
  const std::uint64_t g1 = std::gcd(a.num, b.den);
  const std::uint64_t g2 = std::gcd(b.num, a.den);
  const auto q = [](std::uint64_t x, std::uint64_t g) { return g ? x / g : x; };
  return Rational::of(q(a.num, g1) * q(b.num, g2), q(a.den, g2) * q(b.den, g1));
}

Eq1Result check_eq1(std::size_t n, std::size_t r, std::size_t k, const PositionFamily& sets) {
  check_params(n, r, k);
  std::vector<char> used(n, 0);
  const auto fam = validate_family(n, r, k, sets, used);

  std::vector<Value> v(n);
  std::iota(v.begin(), v.end(), Value{1});
  Eq1Result out;
  do {
    ++out.total;
    out.count += twins_at(v, fam) ? 1 : 0;
  } while (std::next_permutation(v.begin(), v.end()));
  const std::uint64_t kf = power(factorial(k), r - 1);
  out.exact = Rational::of(out.count, out.total);
  out.theoretical = Rational::of(1, kf);
  out.matches = out.count * kf == out.total;
  return out;
}

IndependenceResult check_independence(std::size_t n, std::size_t r, std::size_t k,
                                      const PositionFamily& sets1, const PositionFamily& sets2) {
  check_params(n, r, k);
  std::vector<char> used(n, 0);
  const auto f1 = validate_family(n, r, k, sets1, used);
  // Shared bookkeeping makes any overlap between the two unions an error.
  const auto f2 = validate_family(n, r, k, sets2, used);

  std::vector<Value> v(n);
  std::iota(v.begin(), v.end(), Value{1});
  std::uint64_t total = 0;
  std::uint64_t c1 = 0;
  std::uint64_t c2 = 0;
  std::uint64_t both = 0;
  do {
    ++total;
    const bool e1 = twins_at(v, f1);
    const bool e2 = twins_at(v, f2);
    c1 += e1;
    c2 += e2;
    both += e1 && e2;
  } while (std::next_permutation(v.begin(), v.end()));
  IndependenceResult out;
  out.lhs = Rational::of(both, total);
  out.rhs = Rational::of(c1, total) * Rational::of(c2, total);
  out.equal = out.lhs == out.rhs;
  return out;
}

}  // namespace twinperm
