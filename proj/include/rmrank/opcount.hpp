#pragma once

#include <cstdint>

namespace rmrank::opcount {

// Thread-local counter of base-field operations (one tick per scalar
// add/sub/mul/div/inv in a leaf field). Benchmarks read deltas around a
// decoding call; nothing else depends on it.
inline thread_local std::uint64_t k_ops = 0;

inline void tick() { ++k_ops; }

inline std::uint64_t now() { return k_ops; }

class Span {
  public:
    Span() : start_(k_ops) {}
    std::uint64_t elapsed() const { return k_ops - start_; }

  private:
    std::uint64_t start_;
};

}  // namespace rmrank::opcount
