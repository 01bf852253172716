#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <string_view>

namespace visidim::kernels {

inline constexpr std::int32_t kEmpty = std::numeric_limits<std::int32_t>::max();

// env[i] = min(env[i], v) for i in [0, n).
using FillMinFn = void (*)(std::int32_t* env, std::size_t n, std::int32_t v);
// True when some env[i] > v, i in [0, n).
using AnyGreaterFn = bool (*)(const std::int32_t* env, std::size_t n, std::int32_t v);
// For a row-major byte grid, lowest nonzero row per column (kEmpty if none).
using ColumnLowestFn = void (*)(const std::uint8_t* grid, std::size_t rows, std::size_t cols, std::int32_t* out);

struct Table {
  FillMinFn fill_min;
  AnyGreaterFn any_greater;
  ColumnLowestFn column_lowest;
  std::string_view name;
};

namespace scalar {
void fill_min(std::int32_t* env, std::size_t n, std::int32_t v);
bool any_greater(const std::int32_t* env, std::size_t n, std::int32_t v);
void column_lowest(const std::uint8_t* grid, std::size_t rows, std::size_t cols, std::int32_t* out);
}  // namespace scalar

namespace avx2 {
bool available();
void fill_min(std::int32_t* env, std::size_t n, std::int32_t v);
bool any_greater(const std::int32_t* env, std::size_t n, std::int32_t v);
void column_lowest(const std::uint8_t* grid, std::size_t rows, std::size_t cols, std::int32_t* out);
}  // namespace avx2

const Table& scalar_table();
/// Null when the CPU (or build) lacks AVX2.
const Table* avx2_table();

/// Selected once: AVX2 when supported unless VISIDIM_SIMD=scalar.
const Table& active();

}  // namespace visidim::kernels
