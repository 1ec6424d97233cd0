#pragma once

namespace njconst::detail {

/// u^(p/2); u in [-1e-12, 0) is treated as rounding residue and clamped to 0,
/// anything more negative throws InternalError.
[[nodiscard]] double pow_half(double u, double p);

}  // namespace njconst::detail
