#include "enriques7/invariants.hpp"

#include "enriques7/errors.hpp"

namespace enr7 {

CoverData::CoverData(long b_square, long k) : b_square(b_square), k(k) {
    if (b_square % 2 != 0)
        throw DegenerateInput("branch self-intersection must be even");
    if (k < 0)
        throw DegenerateInput("node count must be nonnegative");
}

CoverInvariants cover_invariants(const CoverData& c) {
    long num = c.b_square - 2 * c.k;
    if (num % 4 != 0)
        throw NotDivisible("B^2 - 2k = " + std::to_string(num) +
                           " is not divisible by 4");
    CoverInvariants out;
    out.l_square = num / 4;
    out.chi = Rat(2) + Rat(out.l_square) / 2;
    out.p_g = out.chi > 1 ? out.chi - 1 : Rat(0);
    out.k_square = c.b_square / 2;
    out.admissible = out.l_square % 2 == 0;
    return out;
}

std::vector<long> divisibility_filter(long b_square, long k_max) {
    std::vector<long> out;
    for (long k = 0; k <= k_max; ++k) {
        long r = (b_square - 2 * k) % 8;
        if (r < 0) r += 8;
        if (r == 0) out.push_back(k);
    }
    return out;
}

std::optional<long> noether_chi(long k_square, long euler) {
    long num = k_square + euler;
    if (num % 12 != 0)
        return std::nullopt;
    return num / 12;
}

} // namespace enr7
