#pragma once

#include <cstdint>
#include <vector>

namespace pcong {

/* Diagonal quadratic form c_1 x_1^2 + ... + c_k x_k^2 with positive integer
   coefficients.  The three instances in use are (1,6), (2,3) and (1,1,3). */
struct DiagonalForm {
    std::vector<std::int64_t> coeffs;

    explicit DiagonalForm(std::vector<std::int64_t> c);
};

/* R(n, Q): number of integer tuples representing n, counting signs and
   coordinate order.  Zero coordinates count once, nonzero ones twice. */
std::int64_t count_representations(std::int64_t n, const DiagonalForm& form);

/* Multiplicative closed form for R(n, x^2+6y^2):
   with n = 2^a 3^b prod p_i^{v_i} prod q_j^{w_j} split by residue classes
   mod 24 and t the (5,11)-class exponent sum,
     (1 + (-1)^{a+b+t}) * prod (1+v_i) * prod (1+(-1)^{w_j})/2.  */
std::int64_t count_x2_6y2_formula(std::int64_t n);

/* Same with leading factor (1 - (-1)^{a+b+t}): R(n, 2x^2+3y^2). */
std::int64_t count_2x2_3y2_formula(std::int64_t n);

}  // namespace pcong
