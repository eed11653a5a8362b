#include "pcong/series.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace pcong {

std::string to_string(int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    /* Negate via unsigned to survive the minimum value. */
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    char buf[48];
    int pos = 48;
    while (u > 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<int>(u % 10));
        u /= 10;
    }
    std::string out(buf + pos, 48 - pos);
    return neg ? "-" + out : out;
}

CoefficientRing CoefficientRing::mod(std::int64_t m) {
    if (m < 2 || m > std::numeric_limits<std::int32_t>::max())
        throw std::invalid_argument("modulus must be in [2, 2^31)");
    return {Kind::ModM, m};
}

int128 CoefficientRing::normalize(int128 v) const {
    if (kind == Kind::ExactInt) return v;
    int128 r = v % modulus;
    if (r < 0) r += modulus;
    return r;
}

static void check_overflow(bool bad) {
    if (bad) throw std::overflow_error("exact coefficient overflow (128-bit)");
}

int128 CoefficientRing::add(int128 x, int128 y) const {
    if (kind == Kind::ModM) return normalize(x + y);
    int128 r;
    check_overflow(__builtin_add_overflow(x, y, &r));
    return r;
}

int128 CoefficientRing::sub(int128 x, int128 y) const {
    if (kind == Kind::ModM) return normalize(x - y);
    int128 r;
    check_overflow(__builtin_sub_overflow(x, y, &r));
    return r;
}

int128 CoefficientRing::mul(int128 x, int128 y) const {
    if (kind == Kind::ModM) return normalize(x * y);
    int128 r;
    check_overflow(__builtin_mul_overflow(x, y, &r));
    return r;
}

int128 CoefficientRing::neg(int128 x) const {
    if (kind == Kind::ModM) return normalize(-x);
    int128 r;
    check_overflow(__builtin_sub_overflow(static_cast<int128>(0), x, &r));
    return r;
}

bool CoefficientRing::is_unit(int128 x) const {
    if (kind == Kind::ExactInt) return x == 1 || x == -1;
    return std::gcd(static_cast<std::int64_t>(normalize(x)), modulus) == 1;
}

int128 CoefficientRing::unit_inverse(int128 x) const {
    if (!is_unit(x)) throw std::invalid_argument("not a unit in the ring");
    if (kind == Kind::ExactInt) return x;  /* +1 and -1 are self-inverse */
    std::int64_t a = static_cast<std::int64_t>(normalize(x)), m = modulus;
    std::int64_t r0 = m, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
        std::int64_t q = r0 / r1;
        std::int64_t r2 = r0 - q * r1; r0 = r1; r1 = r2;
        std::int64_t s2 = s0 - q * s1; s0 = s1; s1 = s2;
    }
    return normalize(s0);
}

TruncatedSeries::TruncatedSeries(CoefficientRing ring, int order)
    : ring_(ring), order_(order) {
    if (order < 0) throw std::invalid_argument("order must be >= 0");
    coeffs_.assign(static_cast<std::size_t>(order) + 1, 0);
}

int128 TruncatedSeries::coeff(int k) const {
    if (k < 0 || k > order_) throw std::out_of_range("coefficient index out of range");
    return coeffs_[static_cast<std::size_t>(k)];
}

void TruncatedSeries::set_coeff(int k, int128 v) {
    if (k < 0 || k > order_) throw std::out_of_range("coefficient index out of range");
    coeffs_[static_cast<std::size_t>(k)] = ring_.normalize(v);
}

static void require_same_ring(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (!(a.ring() == b.ring()))
        throw std::invalid_argument("operands use different coefficient rings");
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    TruncatedSeries out(a.ring(), std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); k++)
        out.set_coeff(k, a.ring().add(a.coeff(k), b.coeff(k)));
    return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    TruncatedSeries out(a.ring(), std::min(a.order(), b.order()));
    for (int k = 0; k <= out.order(); k++)
        out.set_coeff(k, a.ring().sub(a.coeff(k), b.coeff(k)));
    return out;
}

/* The mod-m kernels below run on 32-bit scratch copies.  With canonical
   values < m and m < 2^16, an unsigned 64-bit accumulator absorbs a full
   convolution row without intermediate reduction as long as
   (N+1)*(m-1)^2 stays below 2^64, which holds for every order this
   artifact ever uses (checked before dispatch). */
static bool small_mod_kernel_fits(const CoefficientRing& ring, int order) {
    if (ring.kind != CoefficientRing::Kind::ModM || ring.modulus >= 65536)
        return false;
    unsigned long long span = static_cast<unsigned long long>(ring.modulus - 1);
    unsigned long long per_term = span * span;
    if (per_term == 0) return true;
    return static_cast<unsigned long long>(order) + 1 <=
           std::numeric_limits<unsigned long long>::max() / per_term;
}

static std::vector<std::uint32_t> to_u32(const TruncatedSeries& s, int order) {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(order) + 1);
    for (int k = 0; k <= order; k++)
        v[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(s.coeff(k));
    return v;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_ring(a, b);
    const CoefficientRing& ring = a.ring();
    const int N = std::min(a.order(), b.order());
    TruncatedSeries out(ring, N);

    if (small_mod_kernel_fits(ring, N)) {
        const std::uint64_t m = static_cast<std::uint64_t>(ring.modulus);
        std::vector<std::uint32_t> av = to_u32(a, N), bv = to_u32(b, N);
        std::vector<std::uint64_t> acc(static_cast<std::size_t>(N) + 1, 0);
        for (int i = 0; i <= N; i++) {
            const std::uint64_t ai = av[static_cast<std::size_t>(i)];
            if (ai == 0) continue;
            const std::uint32_t* bp = bv.data();
            std::uint64_t* op = acc.data() + i;
            const int len = N - i + 1;
            for (int j = 0; j < len; j++) op[j] += ai * bp[j];
        }
        for (int k = 0; k <= N; k++)
            out.set_coeff(k, static_cast<int128>(acc[static_cast<std::size_t>(k)] % m));
        return out;
    }

    for (int i = 0; i <= N; i++) {
        int128 ai = a.coeff(i);
        if (ai == 0) continue;
        for (int j = 0; j + i <= N; j++) {
            if (b.coeff(j) == 0) continue;
            out.set_coeff(i + j, ring.add(out.coeff(i + j), ring.mul(ai, b.coeff(j))));
        }
    }
    return out;
}

TruncatedSeries invert(const TruncatedSeries& s) {
    const CoefficientRing& ring = s.ring();
    if (!ring.is_unit(s.coeff(0)))
        throw std::invalid_argument("inversion requires a unit constant term");
    const int N = s.order();
    TruncatedSeries out(ring, N);
    const int128 inv0 = ring.unit_inverse(s.coeff(0));

    if (small_mod_kernel_fits(ring, N)) {
        const std::uint64_t m = static_cast<std::uint64_t>(ring.modulus);
        const std::uint64_t i0 = static_cast<std::uint64_t>(inv0);
        std::vector<std::uint32_t> cv = to_u32(s, N);
        std::vector<std::uint32_t> u(static_cast<std::size_t>(N) + 1, 0);
        u[0] = static_cast<std::uint32_t>(i0);
        for (int k = 1; k <= N; k++) {
            const std::uint32_t* cp = cv.data() + 1;
            const std::uint32_t* up = u.data();
            std::uint64_t acc = 0;
            for (int j = 0; j < k; j++) acc += static_cast<std::uint64_t>(cp[j]) * up[k - 1 - j];
            std::uint64_t v = i0 * (acc % m) % m;
            u[static_cast<std::size_t>(k)] = static_cast<std::uint32_t>(v == 0 ? 0 : m - v);
        }
        for (int k = 0; k <= N; k++)
            out.set_coeff(k, static_cast<int128>(u[static_cast<std::size_t>(k)]));
        return out;
    }

    out.set_coeff(0, inv0);
    for (int k = 1; k <= N; k++) {
        int128 acc = 0;
        for (int j = 1; j <= k; j++) {
            if (s.coeff(j) == 0) continue;
            acc = ring.add(acc, ring.mul(s.coeff(j), out.coeff(k - j)));
        }
        out.set_coeff(k, ring.neg(ring.mul(inv0, acc)));
    }
    return out;
}

TruncatedSeries theta_D(int order, CoefficientRing ring) {
    TruncatedSeries out(ring, order);
    out.set_coeff(0, 1);
    for (std::int64_t n = 1; n * n <= order; n++)
        out.set_coeff(static_cast<int>(n * n), (n % 2 == 0) ? 2 : -2);
    return out;
}

TruncatedSeries theta_psi(int order, CoefficientRing ring) {
    TruncatedSeries out(ring, order);
    for (std::int64_t n = 0; n * (n + 1) / 2 <= order; n++)
        out.set_coeff(static_cast<int>(n * (n + 1) / 2), 1);
    return out;
}

TruncatedSeries substitute_power(const TruncatedSeries& s, int m) {
    if (m < 1) throw std::invalid_argument("substitution power must be >= 1");
    TruncatedSeries out(s.ring(), s.order());
    for (int k = 0; static_cast<std::int64_t>(k) * m <= s.order(); k++)
        out.set_coeff(k * m, s.coeff(k));
    return out;
}

TruncatedSeries substitute_negate(const TruncatedSeries& s) {
    TruncatedSeries out(s.ring(), s.order());
    for (int k = 0; k <= s.order(); k++)
        out.set_coeff(k, (k % 2 == 0) ? s.coeff(k) : s.ring().neg(s.coeff(k)));
    return out;
}

TruncatedSeries pochhammer_product(int sign, int first, int step, int order,
                                   CoefficientRing ring) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("pochhammer sign must be +1 or -1");
    if (first < 1 || step < 1)
        throw std::invalid_argument("pochhammer exponents must be >= 1");
    const int N = order;

    /* Multiply factors (1 + sign*q^s) in place, highest index first so each
       pass reads only pre-pass values. */
    if (ring.kind == CoefficientRing::Kind::ModM && ring.modulus < 65536) {
        const std::uint32_t m = static_cast<std::uint32_t>(ring.modulus);
        std::vector<std::uint32_t> a(static_cast<std::size_t>(N) + 1, 0);
        a[0] = 1 % m;
        for (int s = first; s <= N; s += step) {
            std::uint32_t* p = a.data();
            if (sign > 0) {
                for (int i = N; i >= s; i--) {
                    std::uint32_t t = p[i] + p[i - s];
                    p[i] = t >= m ? t - m : t;
                }
            } else {
                for (int i = N; i >= s; i--) {
                    std::uint32_t t = p[i] + m - p[i - s];
                    p[i] = t >= m ? t - m : t;
                }
            }
        }
        TruncatedSeries out(ring, N);
        for (int k = 0; k <= N; k++)
            out.set_coeff(k, static_cast<int128>(a[static_cast<std::size_t>(k)]));
        return out;
    }

    TruncatedSeries out(ring, N);
    out.set_coeff(0, 1);
    for (int s = first; s <= N; s += step) {
        for (int i = N; i >= s; i--) {
            int128 lower = out.coeff(i - s);
            if (lower == 0) continue;
            out.set_coeff(i, sign > 0 ? ring.add(out.coeff(i), lower)
                                      : ring.sub(out.coeff(i), lower));
        }
    }
    return out;
}

TruncatedSeries extract_progression(const TruncatedSeries& s, int modulus,
                                    int residue) {
    if (modulus < 1 || residue < 0 || residue >= modulus)
        throw std::invalid_argument("need modulus >= 1 and residue in [0, modulus)");
    if (residue > s.order())
        throw std::invalid_argument("residue lies beyond the truncation order");
    TruncatedSeries out(s.ring(), (s.order() - residue) / modulus);
    for (int k = 0; k <= out.order(); k++)
        out.set_coeff(k, s.coeff(residue + k * modulus));
    return out;
}

std::string dump_nonzero(const TruncatedSeries& s) {
    std::string out;
    for (int k = 0; k <= s.order(); k++)
        if (s.coeff(k) != 0)
            out += std::to_string(k) + "\t" + to_string(s.coeff(k)) + "\n";
    return out;
}

}  // namespace pcong
