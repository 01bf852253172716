#pragma once

#include <cstddef>

namespace visidim {

/// Worker count: VISIDIM_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
std::size_t worker_count();

}  // namespace visidim
