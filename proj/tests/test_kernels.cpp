#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "visidim/kernels.hpp"

using namespace visidim;
namespace k = visidim::kernels;

namespace {

std::vector<const k::Table*> tables() {
  std::vector<const k::Table*> out{&k::scalar_table()};
  if (const auto* t = k::avx2_table()) out.push_back(t);
  return out;
}

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("active table is one of the known tables") {
  const auto& a = k::active();
  CHECK((a.name == k::scalar_table().name || (k::avx2_table() && a.name == k::avx2_table()->name)));
  MESSAGE("active kernels: " << a.name);
}

TEST_CASE("fill_min matches the naive loop") {
  std::mt19937 rng(1);
  for (const auto* t : tables()) {
    for (std::size_t n : {0u, 1u, 7u, 8u, 9u, 31u, 64u, 1000u}) {
      for (int rep = 0; rep < 20; ++rep) {
        std::vector<std::int32_t> env(n);
        for (auto& e : env) e = (rng() % 4 == 0) ? k::kEmpty : static_cast<std::int32_t>(rng() % 100);
        auto expect = env;
        const auto v = static_cast<std::int32_t>(rng() % 100);
        for (auto& e : expect) e = std::min(e, v);
        t->fill_min(env.data(), n, v);
        CHECK(env == expect);
      }
    }
  }
}

TEST_CASE("any_greater matches the naive loop") {
  std::mt19937 rng(2);
  for (const auto* t : tables()) {
    for (std::size_t n : {0u, 1u, 5u, 8u, 15u, 16u, 17u, 333u}) {
      for (int rep = 0; rep < 50; ++rep) {
        std::vector<std::int32_t> env(n);
        for (auto& e : env) e = static_cast<std::int32_t>(rng() % 50);
        if (n && rep % 3 == 0) env[rng() % n] = k::kEmpty;
        const auto v = static_cast<std::int32_t>(rng() % 60);
        const bool expect = std::any_of(env.begin(), env.end(), [&](std::int32_t e) { return e > v; });
        CHECK(t->any_greater(env.data(), n, v) == expect);
      }
    }
  }
}

TEST_CASE("column_lowest matches the naive scan") {
  std::mt19937 rng(3);
  for (const auto* t : tables()) {
    for (std::size_t cols : {1u, 7u, 32u, 33u, 100u}) {
      for (std::size_t rows : {1u, 4u, 29u}) {
        std::vector<std::uint8_t> grid(rows * cols);
        for (auto& g : grid) g = rng() % 9 == 0;
        std::vector<std::int32_t> expect(cols, k::kEmpty), got(cols);
        for (std::size_t c = 0; c < cols; ++c) {
          for (std::size_t r = 0; r < rows; ++r) {
            if (grid[r * cols + c]) {
              expect[c] = static_cast<std::int32_t>(r);
              break;
            }
          }
        }
        t->column_lowest(grid.data(), rows, cols, got.data());
        CHECK(got == expect);
      }
    }
  }
}

TEST_CASE("scalar and avx2 agree on identical inputs") {
  const auto* avx = k::avx2_table();
  if (!avx) return;
  std::mt19937 rng(4);
  for (int rep = 0; rep < 200; ++rep) {
    const std::size_t n = rng() % 300;
    std::vector<std::int32_t> a(n);
    for (auto& e : a) e = static_cast<std::int32_t>(rng() % 1000);
    auto b = a;
    const auto v = static_cast<std::int32_t>(rng() % 1000);
    CHECK(k::scalar_table().any_greater(a.data(), n, v) == avx->any_greater(b.data(), n, v));
    k::scalar_table().fill_min(a.data(), n, v);
    avx->fill_min(b.data(), n, v);
    CHECK(a == b);
  }
}

}
