#pragma once

#include <cstdint>

namespace anncat {

enum class ExecMode { serial, parallel };

// Execution policy for the tuple-scanning kernels. `workers == 0` leaves the
// thread count to the OpenMP runtime; any positive value pins it. Results are
// identical across modes and worker counts by construction (first witness =
// lexicographically least failing tuple).
struct ExecPolicy {
    ExecMode mode = ExecMode::parallel;
    int workers = 0;
};

inline ExecPolicy serial_policy() { return {ExecMode::serial, 0}; }

} // namespace anncat
