#include "visidim/kernels.hpp"

#include <algorithm>

namespace visidim::kernels::scalar {

void fill_min(std::int32_t* env, std::size_t n, std::int32_t v) {
  for (std::size_t i = 0; i < n; ++i) env[i] = std::min(env[i], v);
}

bool any_greater(const std::int32_t* env, std::size_t n, std::int32_t v) {
  for (std::size_t i = 0; i < n; ++i) {
    if (env[i] > v) return true;
  }
  return false;
}

void column_lowest(const std::uint8_t* grid, std::size_t rows, std::size_t cols, std::int32_t* out) {
  std::fill(out, out + cols, kEmpty);
  for (std::size_t r = rows; r-- > 0;) {
    const std::uint8_t* row = grid + r * cols;
    for (std::size_t c = 0; c < cols; ++c) {
      if (row[c]) out[c] = static_cast<std::int32_t>(r);
    }
  }
}

}  // namespace visidim::kernels::scalar
