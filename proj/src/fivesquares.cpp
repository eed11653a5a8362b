#include "pcong/fivesquares.hpp"

#include <cmath>
#include <stdexcept>

#include "pcong/arith.hpp"

namespace pcong {

static const std::int64_t kEnumerationCap = 2000;

R5Table R5Table::from_enumeration(int N) {
    if (N < 0 || N > kEnumerationCap)
        throw std::invalid_argument("enumeration table supports 0 <= N <= 2000");
    R5Table t;
    t.N = N;
    t.values.assign(static_cast<std::size_t>(N) + 1, 0);
    /* One scan over non-negative 5-tuples; each nonzero coordinate doubles
       the sign count. */
    for (std::int64_t x1 = 0; x1 * x1 <= N; x1++) {
        std::int64_t s1 = x1 * x1, m1 = x1 ? 2 : 1;
        for (std::int64_t x2 = 0; s1 + x2 * x2 <= N; x2++) {
            std::int64_t s2 = s1 + x2 * x2, m2 = x2 ? 2 * m1 : m1;
            for (std::int64_t x3 = 0; s2 + x3 * x3 <= N; x3++) {
                std::int64_t s3 = s2 + x3 * x3, m3 = x3 ? 2 * m2 : m2;
                for (std::int64_t x4 = 0; s3 + x4 * x4 <= N; x4++) {
                    std::int64_t s4 = s3 + x4 * x4, m4 = x4 ? 2 * m3 : m3;
                    for (std::int64_t x5 = 0; s4 + x5 * x5 <= N; x5++)
                        t.values[static_cast<std::size_t>(s4 + x5 * x5)] +=
                            x5 ? 2 * m4 : m4;
                }
            }
        }
    }
    return t;
}

R5Table R5Table::from_series(int N) {
    TruncatedSeries s = r5_series(N, CoefficientRing::exact());
    R5Table t;
    t.N = N;
    t.values.assign(static_cast<std::size_t>(N) + 1, 0);
    for (int k = 0; k <= N; k++) {
        int128 v = s.coeff(k);
        if (v < 0 || v > static_cast<int128>(INT64_MAX))
            throw std::overflow_error("r5 value does not fit 64 bits");
        t.values[static_cast<std::size_t>(k)] = static_cast<std::int64_t>(v);
    }
    return t;
}

std::int64_t R5Table::at(std::int64_t n) const {
    if (n < 0 || n > N) throw std::out_of_range("r5 table index out of range");
    return values[static_cast<std::size_t>(n)];
}

std::int64_t r5_enumerate(std::int64_t n) {
    if (n < 0) throw std::invalid_argument("r5_enumerate requires n >= 0");
    if (n > kEnumerationCap)
        throw std::invalid_argument("r5 enumeration supports n <= 2000 only");
    std::int64_t total = 0;
    for (std::int64_t x1 = 0; x1 * x1 <= n; x1++) {
        std::int64_t r1 = n - x1 * x1, m1 = x1 ? 2 : 1;
        for (std::int64_t x2 = 0; x2 * x2 <= r1; x2++) {
            std::int64_t r2 = r1 - x2 * x2, m2 = x2 ? 2 * m1 : m1;
            for (std::int64_t x3 = 0; x3 * x3 <= r2; x3++) {
                std::int64_t r3 = r2 - x3 * x3, m3 = x3 ? 2 * m2 : m2;
                for (std::int64_t x4 = 0; x4 * x4 <= r3; x4++) {
                    std::int64_t r4 = r3 - x4 * x4, m4 = x4 ? 2 * m3 : m3;
                    std::int64_t r = static_cast<std::int64_t>(
                        std::sqrt(static_cast<double>(r4)));
                    while (r > 0 && r * r > r4) r--;
                    while ((r + 1) * (r + 1) <= r4) r++;
                    if (r * r == r4) total += r ? 2 * m4 : m4;
                }
            }
        }
    }
    return total;
}

TruncatedSeries r5_series(int order, CoefficientRing ring) {
    TruncatedSeries theta(ring, order);
    theta.set_coeff(0, 1);
    for (std::int64_t n = 1; n * n <= order; n++)
        theta.set_coeff(static_cast<int>(n * n), 2);
    TruncatedSeries sq = mul(theta, theta);
    return mul(mul(sq, sq), theta);
}

std::int64_t r5_hecke_rhs(std::int64_t ell, std::int64_t n, const R5Table& table) {
    if (ell < 3 || !is_prime(ell) || ell % 2 == 0)
        throw std::invalid_argument("recurrence requires an odd prime ell");
    if (n < 0 || ell * ell * n > table.N)
        throw std::out_of_range("ell^2 * n exceeds the r5 table bound");
    std::int64_t sub = (n % (ell * ell) == 0) ? table.at(n / (ell * ell)) : 0;
    return (ell * ell * ell - ell * legendre(n, ell) + 1) * table.at(n) -
           ell * ell * ell * sub;
}

}  // namespace pcong
