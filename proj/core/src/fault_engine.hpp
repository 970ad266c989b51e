#pragma once

// Bit-parallel evaluation of faulted subgraphs and the deterministic
// parallel driver shared by the connectivity and fault-metrics modules.

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "bundlefd/enumeration.hpp"
#include "bundlefd/errors.hpp"
#include "bundlefd/graph.hpp"

namespace bundlefd::detail {

/// Graph copy with one bit row per vertex; rows are edited in place while a
/// fault set is applied and restored afterwards.
class FaultEvaluator {
 public:
  static constexpr int kInfinite = INT_MAX;

  explicit FaultEvaluator(const Graph& g)
      : g_(&g), n_(g.order()), words_((g.order() + 63) / 64), adj_(static_cast<std::size_t>(n_) * words_, 0),
        alive_(words_, 0), visited_(words_), frontier_(words_), next_(words_) {
    for (const Edge& e : g.edges()) {
      set_bit(row(e.u), e.v);
      set_bit(row(e.v), e.u);
    }
    for (int v = 0; v < n_; ++v) set_bit(alive_.data(), v);
  }

  /// Applies vertex faults X and edge faults Y (edge ids), evaluates, restores.
  template <class F>
  int with_faults(std::span<const int> vertices, std::span<const int> edge_ids, F&& eval) {
    for (int v : vertices) clear_bit(alive_.data(), v);
    for (int id : edge_ids) {
      const Edge& e = g_->edge(static_cast<std::size_t>(id));
      clear_bit(row(e.u), e.v);
      clear_bit(row(e.v), e.u);
    }
    alive_count_ = n_ - static_cast<int>(vertices.size());
    const int result = eval(*this);
    for (int id : edge_ids) {
      const Edge& e = g_->edge(static_cast<std::size_t>(id));
      set_bit(row(e.u), e.v);
      set_bit(row(e.v), e.u);
    }
    for (int v : vertices) set_bit(alive_.data(), v);
    return result;
  }

  /// Eccentricity of s among alive vertices, or kInfinite if some alive vertex is unreachable.
  int eccentricity(int s) {
    std::fill(visited_.begin(), visited_.end(), 0);
    std::fill(frontier_.begin(), frontier_.end(), 0);
    set_bit(visited_.data(), s);
    set_bit(frontier_.data(), s);
    int reached = 1;
    int depth = 0;
    while (true) {
      std::fill(next_.begin(), next_.end(), 0);
      for (int w = 0; w < words_; ++w) {
        std::uint64_t bits = frontier_[w];
        while (bits) {
          const int v = w * 64 + std::countr_zero(bits);
          bits &= bits - 1;
          const std::uint64_t* r = row(v);
          for (int k = 0; k < words_; ++k) next_[k] |= r[k];
        }
      }
      int added = 0;
      for (int k = 0; k < words_; ++k) {
        next_[k] &= alive_[k] & ~visited_[k];
        visited_[k] |= next_[k];
        added += std::popcount(next_[k]);
      }
      if (added == 0) break;
      reached += added;
      ++depth;
      frontier_.swap(next_);
    }
    return reached == alive_count_ ? depth : kInfinite;
  }

  /// Diameter of the current faulted graph (kInfinite when disconnected or fewer than two vertices).
  int diameter() {
    if (alive_count_ < 2) return kInfinite;
    int best = 0;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = alive_[w];
      while (bits) {
        const int v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        const int ecc = eccentricity(v);
        if (ecc == kInfinite) return kInfinite;
        best = std::max(best, ecc);
      }
    }
    return best;
  }

  /// 0 when the faulted graph is connected, kInfinite otherwise.
  int disconnection() {
    if (alive_count_ < 2) return kInfinite;
    for (int w = 0; w < words_; ++w) {
      if (alive_[w]) return eccentricity(w * 64 + std::countr_zero(alive_[w])) == kInfinite ? kInfinite : 0;
    }
    return kInfinite;
  }

 private:
  std::uint64_t* row(int v) { return adj_.data() + static_cast<std::size_t>(v) * words_; }
  static void set_bit(std::uint64_t* bits, int v) { bits[v >> 6] |= std::uint64_t{1} << (v & 63); }
  static void clear_bit(std::uint64_t* bits, int v) { bits[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  const Graph* g_;
  int n_;
  int words_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::uint64_t> alive_;
  std::vector<std::uint64_t> visited_, frontier_, next_;
  int alive_count_ = 0;
};

struct EnumerationOutcome {
  int value = 0;
  std::uint64_t rank = 0;       // linear rank of the first fault set attaining value
  std::uint64_t evaluated = 0;  // fault sets actually evaluated
  bool any = false;             // false when there are no fault sets at all
};

inline std::uint64_t fault_set_count(const Graph& g, int p, int q) {
  return saturating_mul(binomial(g.order(), p), binomial(static_cast<int>(g.size()), q));
}

inline void enforce_budget(const Graph& g, int p, int q, const EnumerationOptions& options) {
  const std::uint64_t count = fault_set_count(g, p, q);
  if (count > options.budget) {
    throw BudgetExceeded("enumerating " + std::to_string(count) + " fault sets (p=" + std::to_string(p) +
                             ", q=" + std::to_string(q) + ") exceeds the budget of " +
                             std::to_string(options.budget),
                         count, options.budget);
  }
}

/// Decodes a linear rank into (vertex subset, edge subset): vertex subsets
/// are the outer colex order, edge subsets the inner colex order.
inline std::pair<Combination, Combination> unrank_fault_set(const Graph& g, int p, int q, std::uint64_t rank) {
  const std::uint64_t inner = binomial(static_cast<int>(g.size()), q);
  return {Combination::unrank(g.order(), p, rank / inner),
          Combination::unrank(static_cast<int>(g.size()), q, rank % inner)};
}

/// Maximises eval over every (X, Y) with |X| = p, |Y| = q.
///
/// The result is the maximum together with the smallest linear rank that
/// attains it, independent of the thread count. Enumeration stops early once
/// kInfinite is found, since nothing can exceed it.
template <class Eval>
EnumerationOutcome maximise_over_fault_sets(const Graph& g, int p, int q, const EnumerationOptions& options,
                                            Eval eval) {
  enforce_budget(g, p, q, options);
  const std::uint64_t total = fault_set_count(g, p, q);
  EnumerationOutcome result;
  if (total == 0) return result;

  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, total / 64)));
  std::atomic<std::uint64_t> stop_rank{std::numeric_limits<std::uint64_t>::max()};
  std::vector<EnumerationOutcome> partial(threads);

  auto worker = [&](unsigned t) {
    const std::uint64_t begin = total / threads * t + std::min<std::uint64_t>(t, total % threads);
    const std::uint64_t end = begin + total / threads + (t < total % threads ? 1 : 0);
    if (begin >= end) return;
    FaultEvaluator evaluator(g);
    auto [xs, ys] = unrank_fault_set(g, p, q, begin);
    EnumerationOutcome& out = partial[t];
    for (std::uint64_t r = begin; r < end; ++r) {
      if (r > stop_rank.load(std::memory_order_relaxed)) break;
      const int value = evaluator.with_faults(xs.current(), ys.current(), eval);
      ++out.evaluated;
      if (!out.any || value > out.value) {
        out.value = value;
        out.rank = r;
        out.any = true;
      }
      if (value == FaultEvaluator::kInfinite) {
        std::uint64_t seen = stop_rank.load();
        while (r < seen && !stop_rank.compare_exchange_weak(seen, r)) {
        }
        break;
      }
      if (!ys.next()) {
        ys = Combination(static_cast<int>(g.size()), q);
        xs.next();
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  for (const EnumerationOutcome& part : partial) {
    result.evaluated += part.evaluated;
    if (!part.any) continue;
    if (!result.any || part.value > result.value || (part.value == result.value && part.rank < result.rank)) {
      result.value = part.value;
      result.rank = part.rank;
      result.any = true;
    }
  }
  return result;
}

}  // namespace bundlefd::detail
