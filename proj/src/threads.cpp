#include "visidim/threads.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <thread>

namespace visidim {

std::size_t worker_count() {
  if (const char* env = std::getenv("VISIDIM_THREADS")) {
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), n);
    if (ec == std::errc() && n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace visidim
