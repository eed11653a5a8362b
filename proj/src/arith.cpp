#include "pcong/arith.hpp"

#include <stdexcept>
#include <string>

namespace pcong {

Factorization::Factorization(std::int64_t n_, int two_exp_, int three_exp_,
                             std::vector<std::pair<std::int64_t, int>> class_p_,
                             std::vector<std::pair<std::int64_t, int>> class_q_,
                             int t_)
    : n(n_), two_exp(two_exp_), three_exp(three_exp_),
      class_p(std::move(class_p_)), class_q(std::move(class_q_)), t(t_) {
    __int128 prod = 1;
    for (int i = 0; i < two_exp; i++) prod *= 2;
    for (int i = 0; i < three_exp; i++) prod *= 3;
    int t_check = 0;
    std::int64_t prev = 0;
    for (const auto& [p, v] : class_p) {
        std::int64_t r = p % 24;
        if (r != 1 && r != 5 && r != 7 && r != 11)
            throw std::invalid_argument("prime " + std::to_string(p) +
                                        " is not in residue class {1,5,7,11} mod 24");
        if (p <= prev) throw std::invalid_argument("primes not strictly increasing");
        prev = p;
        for (int i = 0; i < v; i++) prod *= p;
        if (r == 5 || r == 11) t_check += v;
    }
    prev = 0;
    for (const auto& [q, w] : class_q) {
        std::int64_t r = q % 24;
        if (r != 13 && r != 17 && r != 19 && r != 23)
            throw std::invalid_argument("prime " + std::to_string(q) +
                                        " is not in residue class {13,17,19,23} mod 24");
        if (q <= prev) throw std::invalid_argument("primes not strictly increasing");
        prev = q;
        for (int i = 0; i < w; i++) prod *= q;
    }
    if (prod != n)
        throw std::invalid_argument("factor lists do not multiply back to n");
    if (t_check != t)
        throw std::invalid_argument("t does not match the 5,11 (mod 24) exponent sum");
}

Factorization factorize(std::int64_t n) {
    if (n <= 0) throw std::invalid_argument("factorize requires n >= 1");
    std::int64_t orig = n;
    int a = 0, b = 0, t = 0;
    while (n % 2 == 0) { n /= 2; a++; }
    while (n % 3 == 0) { n /= 3; b++; }
    std::vector<std::pair<std::int64_t, int>> cp, cq;
    auto record = [&](std::int64_t p, int v) {
        std::int64_t r = p % 24;
        if (r == 1 || r == 5 || r == 7 || r == 11) {
            cp.emplace_back(p, v);
            if (r == 5 || r == 11) t += v;
        } else {
            cq.emplace_back(p, v);
        }
    };
    /* Remaining part is coprime to 6; step through 6k +/- 1 candidates. */
    for (std::int64_t d = 5; d * d <= n;) {
        if (n % d == 0) {
            int v = 0;
            while (n % d == 0) { n /= d; v++; }
            record(d, v);
        }
        d += (d % 6 == 5) ? 2 : 4;
    }
    if (n > 1) record(n, 1);
    return Factorization(orig, a, b, std::move(cp), std::move(cq), t);
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::int64_t d = 5; d * d <= n;) {
        if (n % d == 0) return false;
        d += (d % 6 == 5) ? 2 : 4;
    }
    return true;
}

int legendre(std::int64_t a, std::int64_t ell) {
    if (ell < 3 || ell % 2 == 0 || !is_prime(ell))
        throw std::invalid_argument("legendre requires an odd prime modulus");
    std::int64_t r = a % ell;
    if (r < 0) r += ell;
    if (r == 0) return 0;
    /* Euler's criterion: a^((ell-1)/2) is +1 or -1 mod ell. */
    __int128 base = r, pow = 1;
    std::int64_t e = (ell - 1) / 2;
    while (e > 0) {
        if (e & 1) pow = pow * base % ell;
        base = base * base % ell;
        e >>= 1;
    }
    return pow == 1 ? 1 : -1;
}

int f_sign(std::int64_t n) {
    std::int64_t r = n % 12;
    if (r < 0) r += 12;
    return (r == 1 || r == 6 || r == 9 || r == 10) ? -1 : 1;
}

}  // namespace pcong
