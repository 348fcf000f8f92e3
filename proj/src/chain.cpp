#include "innerfn/chain.hpp"

#include <cstdlib>
#include <string>

#include "innerfn/errors.hpp"

namespace innerfn {

TaylorCoefficients angular_derivative(const TaylorCoefficients& tc) {
    std::vector<complex> c(tc.c().size());
    for (std::size_t k = 1; k < c.size(); ++k) {
        const double kk = static_cast<double>(k);
        // i k (a + ib) = -k b + i k a
        c[k] = complex{-kk * tc[k].imag(), kk * tc[k].real()};
    }
    TailBound tail = tc.tail();
    tail.growth += 1;
    return TaylorCoefficients(std::move(c), tc.provenance() + " |> D", tail);
}

TaylorCoefficients angular_primitive(const TaylorCoefficients& tc) {
    std::vector<complex> c(tc.c().size());
    for (std::size_t k = 1; k < c.size(); ++k) {
        const double kk = static_cast<double>(k);
        // -i (a + ib) / k = b / k - i a / k
        c[k] = complex{tc[k].imag() / kk, -tc[k].real() / kk};
    }
    TailBound tail = tc.tail();
    tail.growth -= 1;
    return TaylorCoefficients(std::move(c), tc.provenance() + " |> I", tail);
}

TaylorCoefficients proper_projection(const TaylorCoefficients& tc) {
    if (tc.is_proper()) {
        return tc;
    }
    std::vector<complex> c = tc.c();
    c[0] = complex{};
    return TaylorCoefficients(std::move(c), tc.provenance() + " |> proper", tc.tail());
}

ChainPosition::ChainPosition(const TaylorCoefficients& link, int offset, int max_offset)
    : base_(proper_projection(link)), offset_(offset), max_offset_(max_offset) {
    if (max_offset < 0 || std::abs(offset) > max_offset) {
        throw OffsetBoundError("chain offset " + std::to_string(offset) + " outside [-" +
                               std::to_string(max_offset) + ", " + std::to_string(max_offset) +
                               "]");
    }
}

TaylorCoefficients navigate(const ChainPosition& pos, int steps) {
    const int target = pos.offset() + steps;
    if (std::abs(target) > pos.max_offset()) {
        throw OffsetBoundError("walking " + std::to_string(steps) + " steps from offset " +
                               std::to_string(pos.offset()) + " exceeds the bound " +
                               std::to_string(pos.max_offset()));
    }
    TaylorCoefficients link = pos.base();
    for (int i = 0; i < std::abs(steps); ++i) {
        link = steps > 0 ? angular_derivative(link) : angular_primitive(link);
    }
    return link;
}

ChainPosition walk(const ChainPosition& pos, int steps) {
    return ChainPosition(navigate(pos, steps), pos.offset() + steps, pos.max_offset());
}

}  // namespace innerfn
