#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <span>
#include <vector>

namespace hypertrace {

inline constexpr std::uint64_t saturated = std::numeric_limits<std::uint64_t>::max();

constexpr std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
  return a > saturated - b ? saturated : a + b;
}

constexpr std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  if (a == 0 || b == 0) return 0;
  return a > saturated / b ? saturated : a * b;
}

/// C(n, k), saturating at 2^64 - 1.
constexpr std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Exact while the running value fits: C(n, i) * (n - i) / (i + 1) is C(n, i + 1).
  unsigned __int128 acc = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    acc = acc * (n - i) / (i + 1);
    if (acc > saturated) return saturated;
  }
  return static_cast<std::uint64_t>(acc);
}

/// sum_{i=0}^{d} C(k, i), saturating.
constexpr std::uint64_t binomial_prefix_sum(std::uint64_t k, std::uint64_t d) noexcept {
  std::uint64_t total = 0;
  for (std::uint64_t i = 0; i <= std::min(d, k); ++i) total = saturating_add(total, binomial(k, i));
  return total;
}

/// 2^j - 1, saturating.
constexpr std::uint64_t nonempty_subset_count(std::uint64_t j) noexcept {
  return j >= 64 ? saturated : (std::uint64_t{1} << j) - 1;
}

/// Exact non-negative-denominator fraction for bound formulas that are ceiled only at the end.
struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Fraction() = default;
  constexpr Fraction(std::int64_t n, std::int64_t d = 1) : num(n), den(d) {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }

  constexpr std::int64_t ceil() const noexcept {
    const std::int64_t q = num / den;
    return (num % den != 0 && num > 0) ? q + 1 : q;
  }
  constexpr std::int64_t floor() const noexcept {
    const std::int64_t q = num / den;
    return (num % den != 0 && num < 0) ? q - 1 : q;
  }
  constexpr double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }

  friend constexpr bool operator==(const Fraction& a, const Fraction& b) noexcept {
    return a.num == b.num && a.den == b.den;
  }
  friend constexpr std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) noexcept {
    return static_cast<__int128>(a.num) * b.den <=> static_cast<__int128>(b.num) * a.den;
  }
};

/// Iterates all k-subsets of {0, ..., n-1} as sorted index vectors in lexicographic order.
class Combinations {
 public:
  Combinations(std::size_t n, std::size_t k) : n_(n), idx_(k), done_(k > n) {
    std::iota(idx_.begin(), idx_.end(), std::size_t{0});
  }

  bool done() const noexcept { return done_; }
  std::span<const std::size_t> current() const noexcept { return idx_; }

  void next() {
    const std::size_t k = idx_.size();
    std::size_t i = k;
    while (i > 0 && idx_[i - 1] == n_ - k + i - 1) --i;
    if (i == 0) {
      done_ = true;
      return;
    }
    ++idx_[i - 1];
    for (std::size_t t = i; t < k; ++t) idx_[t] = idx_[t - 1] + 1;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> idx_;
  bool done_;
};

/// Enumeration limits shared by the exhaustive solvers.
struct Budget {
  std::uint64_t subsets = 20'000'000;
};

}  // namespace hypertrace
