#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace bundlefd {

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(int n, int k);

/// Saturating product.
std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b);

/// k-subsets of {0, ..., n-1} in colexicographic order.
///
/// The first subset is {0, ..., k-1}; rank() is the position in colex order.
class Combination {
 public:
  Combination(int n, int k);

  static Combination unrank(int n, int k, std::uint64_t rank);

  std::span<const int> current() const { return items_; }
  std::uint64_t rank() const;

  /// Advances to the colex successor. Returns false once the last subset is passed.
  bool next();

  /// True when the range has been exhausted by next().
  bool done() const { return done_; }

 private:
  int n_;
  std::vector<int> items_;
  bool done_ = false;
};

/// Limits for exhaustive fault-set enumeration.
struct EnumerationOptions {
  /// Largest number of (vertex subset, edge subset) pairs one call may evaluate.
  std::uint64_t budget = 10'000'000;
  /// Worker threads; 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

}  // namespace bundlefd
