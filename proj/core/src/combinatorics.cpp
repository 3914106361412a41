#include "w1/combinatorics.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <numeric>
#include <thread>

#include <boost/multiprecision/cpp_int.hpp>

namespace w1 {

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) return std::numeric_limits<std::uint64_t>::max();
  return out;
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) out = saturating_mul(out, base);
  return out;
}

std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  // Exact as long as it fits: out * (n - i) is divisible by (i + 1).
  boost::multiprecision::uint128_t out = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    out = out * (n - i) / (i + 1);
    if (out > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(out);
}

std::optional<SubsetHit> search_subsets(std::size_t n, std::size_t k, unsigned jobs, bool deterministic,
                                        const std::function<bool(std::span<const std::size_t>, unsigned)>& visit) {
  if (k > n) return std::nullopt;
  jobs = std::max(1u, jobs);
  constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();
  std::atomic<std::uint64_t> best{kNone};
  std::atomic<bool> stop{false};

  auto run = [&](unsigned worker) {
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::uint64_t rank = 0;
    do {
      if (stop.load(std::memory_order_relaxed)) return;
      if (deterministic && rank > best.load(std::memory_order_relaxed)) return;
      if (rank % jobs == worker && visit(idx, worker)) {
        std::uint64_t cur = best.load();
        while (rank < cur && !best.compare_exchange_weak(cur, rank)) {
        }
        if (!deterministic) stop = true;
        return;
      }
      ++rank;
    } while (next_combination(idx, n));
  };

  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread> threads;
    for (unsigned j = 0; j < jobs; ++j) {
      threads.emplace_back([&, j] {
        try {
          run(j);
        } catch (...) {
          errors[j] = std::current_exception();
          stop = true;
        }
      });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  const std::uint64_t r = best.load();
  if (r == kNone) return std::nullopt;
  return SubsetHit{r, static_cast<unsigned>(r % jobs)};
}

}  // namespace w1
