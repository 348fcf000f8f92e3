#pragma once

#include "innerfn/inner.hpp"

namespace innerfn {

/// w -> i z dw/dz, i.e. c_0 -> 0, c_k -> i k c_k. Always proper.
TaylorCoefficients angular_derivative(const TaylorCoefficients& tc);

/// Inverse of angular_derivative on proper functions: c_0 -> 0, c_k -> -i c_k / k.
TaylorCoefficients angular_primitive(const TaylorCoefficients& tc);

/// Drops the constant term: c_0 -> 0.
TaylorCoefficients proper_projection(const TaylorCoefficients& tc);

inline constexpr int kDefaultMaxOffset = 8;

/// A link of an integral-differential chain: the proper reference link plus
/// how far along the chain it sits (positive = differentiation direction).
class ChainPosition {
public:
    explicit ChainPosition(const TaylorCoefficients& link, int offset = 0,
                           int max_offset = kDefaultMaxOffset);

    const TaylorCoefficients& base() const noexcept { return base_; }
    int offset() const noexcept { return offset_; }
    int max_offset() const noexcept { return max_offset_; }

private:
    TaylorCoefficients base_;
    int offset_;
    int max_offset_;
};

/// Applies `steps` angular derivatives (steps > 0) or primitives (steps < 0)
/// to the link at `pos`. Throws OffsetBoundError if the walk would leave
/// [-max_offset, max_offset].
TaylorCoefficients navigate(const ChainPosition& pos, int steps);

/// navigate(), returned as a position on the same chain.
ChainPosition walk(const ChainPosition& pos, int steps);

}  // namespace innerfn
