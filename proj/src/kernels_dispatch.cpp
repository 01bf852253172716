#include <cstdlib>
#include <string>

#include "visidim/kernels.hpp"

namespace visidim::kernels {

const Table& scalar_table() {
  static const Table t{scalar::fill_min, scalar::any_greater, scalar::column_lowest, "scalar"};
  return t;
}

const Table* avx2_table() {
  static const Table t{avx2::fill_min, avx2::any_greater, avx2::column_lowest, "avx2"};
  return avx2::available() ? &t : nullptr;
}

const Table& active() {
  static const Table& chosen = [] () -> const Table& {
    const char* env = std::getenv("VISIDIM_SIMD");
    if (env && std::string(env) == "scalar") return scalar_table();
    if (const Table* t = avx2_table()) return *t;
    return scalar_table();
  }();
  return chosen;
}

}  // namespace visidim::kernels
