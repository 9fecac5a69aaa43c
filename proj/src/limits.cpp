#include "df/limits.hpp"

namespace df {

long long Limits::det_group_order = 10000;
std::size_t Limits::hypersurface_support = 12;

}  // namespace df
