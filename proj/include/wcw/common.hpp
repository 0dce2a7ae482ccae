#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace wcw {

// Thrown when an explicit construction would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by the exact solver when the node budget runs out.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::uint64_t nodes)
      : std::runtime_error(what), nodes_expanded(nodes) {}
  std::uint64_t nodes_expanded;
};

// Thrown by the engine when a strategy produces an illegal move; `offender`
// names the side so strategy bugs surface in tests.
class IllegalMove : public std::runtime_error {
 public:
  IllegalMove(const std::string& offender, const std::string& what)
      : std::runtime_error(offender + ": " + what), offender(offender) {}
  std::string offender;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Per-task RNG seed derived from (master seed, task index) so parallel
// sweeps reproduce regardless of scheduling.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed ^ splitmix64(index + 1));
}

// Kahan compensated accumulator.
class KahanSum {
 public:
  void add(double x) {
    double y = x - c_;
    double t = s_ + y;
    c_ = (t - s_) - y;
    s_ = t;
  }
  double value() const { return s_; }

 private:
  double s_ = 0.0;
  double c_ = 0.0;
};

// Runs fn(i) for i in [0, count) across a small thread pool; results are
// written to a vector indexed by i, so reduction order is deterministic.
template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<T> out(count);
  unsigned workers = std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::thread> pool;
  std::atomic<std::size_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t i = next.fetch_add(1);
        if (i >= count) return;
        out[i] = fn(i);
      }
    });
  }
  for (auto& t : pool) t.join();
  return out;
}

}  // namespace wcw
