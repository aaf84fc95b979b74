#pragma once

#include <cstdint>
#include <random>

namespace uavcover {

// Seeded generator with hand-rolled uniform draws so identical seeds produce
// identical streams on every standard library.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  int uniform_int(int lo, int hi) {  // inclusive bounds
    return lo + static_cast<int>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
  }

private:
  std::mt19937_64 gen_;
};

}  // namespace uavcover
