#include "grid_search.hpp"

#include <cmath>

#include "njconst/errors.hpp"
#include "njconst/spaces.hpp"

namespace njconst::detail {

unsigned resolve_workers(unsigned requested) {
    if (requested != 0) return requested;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

double pow_half(double u, double p) {
    if (u < 0.0) {
        if (u < -1e-12) throw InternalError("negative base " + format_number(u) + " in fractional power");
        return 0.0;
    }
    if (p == 2.0) return u;
    if (p == 4.0) return u * u;
    if (p == 3.0) return u * std::sqrt(u);
    if (p == 6.0) return u * u * u;
    if (p == 1.0) return std::sqrt(u);
    return std::pow(u, 0.5 * p);
}

}  // namespace njconst::detail
