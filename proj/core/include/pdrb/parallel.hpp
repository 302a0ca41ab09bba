#pragma once

#include <cstddef>
#include <functional>

namespace pdrb {

/// Worker count for library-internal loops. Reads PDRB_THREADS once per call:
/// unset or 0 means std::thread::hardware_concurrency().
[[nodiscard]] std::size_t thread_count();

/// Runs body(i) for i in [0, n). Iterations must only write to slots indexed
/// by i so results do not depend on scheduling. The first exception thrown by
/// any iteration is rethrown on the calling thread. Calls made from inside a
/// body run serially.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace pdrb
