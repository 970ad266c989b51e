#include "bundlefd/enumeration.hpp"

#include <limits>
#include <numeric>

#include "bundlefd/errors.hpp"

namespace bundlefd {

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    // result * (n-k+i) is divisible by i, and result / g is coprime to i / g.
    const std::uint64_t g = std::gcd(result, static_cast<std::uint64_t>(i));
    const std::uint64_t factor = static_cast<std::uint64_t>(n - k + i) / (static_cast<std::uint64_t>(i) / g);
    result = saturating_mul(result / g, factor);
    if (result == kMax) return kMax;
  }
  return result;
}

Combination::Combination(int n, int k) : n_(n) {
  if (k < 0 || n < 0) throw InvalidArgument("Combination: negative size");
  if (k > n) {
    done_ = true;
    return;
  }
  items_.resize(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) items_[i] = i;
}

Combination Combination::unrank(int n, int k, std::uint64_t rank) {
  Combination c(n, k);
  if (c.done_) return c;
  if (rank >= binomial(n, k)) {
    c.done_ = true;
    return c;
  }
  int hi = n - 1;
  for (int i = k - 1; i >= 0; --i) {
    // Largest value v with C(v, i+1) <= rank.
    int v = hi;
    while (binomial(v, i + 1) > rank) --v;
    c.items_[i] = v;
    rank -= binomial(v, i + 1);
    hi = v - 1;
  }
  return c;
}

std::uint64_t Combination::rank() const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < items_.size(); ++i) r += binomial(items_[i], static_cast<int>(i) + 1);
  return r;
}

bool Combination::next() {
  if (done_) return false;
  const std::size_t k = items_.size();
  for (std::size_t i = 0; i < k; ++i) {
    const int limit = i + 1 < k ? items_[i + 1] : n_;
    if (items_[i] + 1 < limit) {
      ++items_[i];
      for (std::size_t j = 0; j < i; ++j) items_[j] = static_cast<int>(j);
      return true;
    }
  }
  done_ = true;
  return false;
}

}  // namespace bundlefd
