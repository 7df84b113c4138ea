#pragma once

#include "enriques7/gaussian.hpp"

#include <optional>
#include <vector>

namespace enr7 {

// Branch data for a double cover of an Enriques surface: a divisor of
// self-intersection b_square plus k nodes halved into the branch class.
struct CoverData {
    long b_square;
    long k;
    CoverData(long b_square, long k);
};

struct CoverInvariants {
    long l_square = 0;     // (B² − 2k)/4
    Rat chi;               // 2 + L²/2
    Rat p_g;               // max(χ − 1, 0), irregularity 0 for this family
    long k_square = 0;     // B²/2
    bool admissible = true; // false when L² is odd (even-lattice violation)
};

CoverInvariants cover_invariants(const CoverData& c); // NotDivisible if 4 ∤ B²−2k

// All k in [0, k_max] with (b_square − 2k) ≡ 0 (mod 8), i.e. L² even+integral.
std::vector<long> divisibility_filter(long b_square, long k_max);

// Noether bookkeeping χ = (K² + e)/12 when the Euler number is supplied.
std::optional<long> noether_chi(long k_square, long euler);

} // namespace enr7
