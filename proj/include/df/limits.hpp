#pragma once

// Runtime-adjustable safety caps for the enumeration routines.  Defaults are
// safe for interactive use; the CLI exposes them as flags.

#include <cstddef>

namespace df {

struct Limits {
    // cap on determinant-group orders and subgroup indices during component
    // expansion, dual-character enumeration, and the theta scan
    static long long det_group_order;
    // cap on hypersurface support size for the admissible partition search
    static std::size_t hypersurface_support;
};

}  // namespace df
