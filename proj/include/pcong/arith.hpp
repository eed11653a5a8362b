#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace pcong {

/* Factorization of n = 2^a 3^b * prod p_i^{v_i} * prod q_j^{w_j}, where the
   p_i are the primes congruent to 1, 5, 7 or 11 (mod 24) and the q_j those
   congruent to 13, 17, 19 or 23 (mod 24).  t counts prime factors congruent
   to 5 or 11 (mod 24) with multiplicity; it feeds the sign (-1)^{a+b+t} in
   the closed-form representation counts. */
struct Factorization {
    std::int64_t n = 0;
    int two_exp = 0;
    int three_exp = 0;
    std::vector<std::pair<std::int64_t, int>> class_p;
    std::vector<std::pair<std::int64_t, int>> class_q;
    int t = 0;

    Factorization(std::int64_t n, int two_exp, int three_exp,
                  std::vector<std::pair<std::int64_t, int>> class_p,
                  std::vector<std::pair<std::int64_t, int>> class_q, int t);
};

/* Deterministic trial division.  Rejects n = 0 (callers that need n = 0
   handle it before calling). */
Factorization factorize(std::int64_t n);

bool is_prime(std::int64_t n);

/* Legendre symbol (a/ell) for an odd prime ell, via Euler's criterion. */
int legendre(std::int64_t a, std::int64_t ell);

/* -1 when n = 1, 6, 9, 10 (mod 12), +1 otherwise. */
int f_sign(std::int64_t n);

}  // namespace pcong
