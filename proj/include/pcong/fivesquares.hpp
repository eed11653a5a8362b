#pragma once

#include <cstdint>
#include <vector>

#include "pcong/series.hpp"

namespace pcong {

/* r5(0..N) as exact integers.  Construction routes: direct lattice
   enumeration (the oracle) or the theta-series convolution theta(q)^5. */
struct R5Table {
    int N = 0;
    std::vector<std::int64_t> values;

    static R5Table from_enumeration(int N);
    static R5Table from_series(int N);

    std::int64_t at(std::int64_t n) const;
};

/* Count of integer 5-tuples with x1^2+...+x5^2 = n, by nested loops over
   non-negative coordinates with sign multiplicities.  Oracle range n <= 2000. */
std::int64_t r5_enumerate(std::int64_t n);

/* theta(q)^5 with theta(q) = 1 + 2*sum q^{n^2}, built by iterated squaring. */
TruncatedSeries r5_series(int order, CoefficientRing ring);

/* Right side of the recurrence
     r5(ell^2 n) = (ell^3 - ell*(n/ell) + 1) r5(n) - ell^3 r5(n/ell^2)
   with (n/ell) the Legendre symbol and r5(n/ell^2) = 0 unless ell^2 | n.
   n = 0 takes ell^2 | 0 as true, so the subtrahend uses r5(0). */
std::int64_t r5_hecke_rhs(std::int64_t ell, std::int64_t n, const R5Table& table);

}  // namespace pcong
