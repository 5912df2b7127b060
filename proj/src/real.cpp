#include "latwalk/real.hpp"

namespace latwalk {

namespace {
std::atomic<int> g_precision_bits{53};
}

int default_precision_bits() { return g_precision_bits.load(std::memory_order_relaxed); }

void set_default_precision_bits(int bits) {
  if (bits < 24 || bits > 1 << 20) throw std::invalid_argument("precision bits out of range");
  g_precision_bits.store(bits, std::memory_order_relaxed);
}

} // namespace latwalk
