#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pcong/int128.hpp"

namespace pcong {

/* Coefficient domain for truncated series.  Exact mode works on signed
   128-bit integers and throws std::overflow_error instead of wrapping;
   mod-m mode keeps canonical representatives in [0, m). */
struct CoefficientRing {
    enum class Kind { ExactInt, ModM };

    Kind kind = Kind::ExactInt;
    std::int64_t modulus = 0;

    static CoefficientRing exact() { return {Kind::ExactInt, 0}; }
    static CoefficientRing mod(std::int64_t m);

    bool operator==(const CoefficientRing&) const = default;

    bool is_exact() const { return kind == Kind::ExactInt; }

    int128 normalize(int128 v) const;
    int128 add(int128 x, int128 y) const;
    int128 sub(int128 x, int128 y) const;
    int128 mul(int128 x, int128 y) const;
    int128 neg(int128 x) const;
    bool is_unit(int128 x) const;
    int128 unit_inverse(int128 x) const;
};

/* Power series truncated at q^N: coefficients c_0..c_N, understood modulo
   q^{N+1}.  Values are immutable through the arithmetic API; every operation
   returns a fresh series whose order is the minimum of the operand orders. */
class TruncatedSeries {
public:
    TruncatedSeries(CoefficientRing ring, int order);

    const CoefficientRing& ring() const { return ring_; }
    int order() const { return order_; }
    int128 coeff(int k) const;
    void set_coeff(int k, int128 v);
    const std::vector<int128>& coeffs() const { return coeffs_; }

private:
    CoefficientRing ring_;
    int order_;
    std::vector<int128> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/* Multiplicative inverse via the standard recurrence
   u_k = -c_0^{-1} * sum_{j=1..k} c_j u_{k-j}; requires a unit constant term. */
TruncatedSeries invert(const TruncatedSeries& s);

/* D(q) = sum over all integers n of (-1)^n q^{n^2}. */
TruncatedSeries theta_D(int order, CoefficientRing ring);

/* psi(q) = sum over n >= 0 of q^{n(n+1)/2}. */
TruncatedSeries theta_psi(int order, CoefficientRing ring);

/* q -> q^m; the truncation order is kept. */
TruncatedSeries substitute_power(const TruncatedSeries& s, int m);

/* q -> -q, i.e. c_k -> (-1)^k c_k. */
TruncatedSeries substitute_negate(const TruncatedSeries& s);

/* Product of (1 + sign*q^j) over j = first, first+step, ... up to the order.
   sign=+1 builds (-q^first; q^step)_inf style products, sign=-1 the plain
   (q^first; q^step)_inf ones. */
TruncatedSeries pochhammer_product(int sign, int first, int step, int order,
                                   CoefficientRing ring);

/* Coefficients at indices residue, residue+modulus, ... as a new series. */
TruncatedSeries extract_progression(const TruncatedSeries& s, int modulus,
                                    int residue);

/* Debug dump: one "k<TAB>c_k" line per nonzero coefficient. */
std::string dump_nonzero(const TruncatedSeries& s);

}  // namespace pcong
