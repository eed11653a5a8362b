#include "pcong/quadforms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pcong/arith.hpp"

namespace pcong {

DiagonalForm::DiagonalForm(std::vector<std::int64_t> c) : coeffs(std::move(c)) {
    if (coeffs.empty()) throw std::invalid_argument("form needs at least one coefficient");
    for (std::int64_t ci : coeffs)
        if (ci < 1) throw std::invalid_argument("form coefficients must be >= 1");
}

static std::int64_t isqrt_floor(std::int64_t n) {
    if (n < 0) return -1;
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) r--;
    while ((r + 1) * (r + 1) <= n) r++;
    return r;
}

/* Recurse over coordinates, largest coefficient first to keep the outer
   loops short; the final coordinate is settled by a square test. */
static std::int64_t count_rec(std::int64_t rem,
                              const std::vector<std::int64_t>& coeffs,
                              std::size_t idx) {
    const std::int64_t c = coeffs[idx];
    if (idx + 1 == coeffs.size()) {
        if (rem % c != 0) return 0;
        std::int64_t v = rem / c;
        std::int64_t r = isqrt_floor(v);
        if (r * r != v) return 0;
        return v == 0 ? 1 : 2;
    }
    std::int64_t total = 0;
    for (std::int64_t x = 0; c * x * x <= rem; x++) {
        std::int64_t sub = count_rec(rem - c * x * x, coeffs, idx + 1);
        total += (x == 0) ? sub : 2 * sub;
    }
    return total;
}

std::int64_t count_representations(std::int64_t n, const DiagonalForm& form) {
    if (n < 0) throw std::invalid_argument("count_representations requires n >= 0");
    std::vector<std::int64_t> sorted = form.coeffs;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    return count_rec(n, sorted, 0);
}

static std::int64_t class_product_formula(std::int64_t n, int lead_sign) {
    if (n < 1)
        throw std::invalid_argument("closed-form counts are defined for n >= 1");
    Factorization f = factorize(n);
    int parity = (f.two_exp + f.three_exp + f.t) % 2;
    std::int64_t lead = 1 + lead_sign * (parity == 0 ? 1 : -1);
    if (lead == 0) return 0;
    std::int64_t prod = lead;
    for (const auto& [p, v] : f.class_p) {
        (void)p;
        prod *= (1 + v);
    }
    for (const auto& [q, w] : f.class_q) {
        (void)q;
        if (w % 2 != 0) return 0;  /* (1+(-1)^w)/2 vanishes for odd w */
    }
    return prod;
}

std::int64_t count_x2_6y2_formula(std::int64_t n) {
    return class_product_formula(n, +1);
}

std::int64_t count_2x2_3y2_formula(std::int64_t n) {
    return class_product_formula(n, -1);
}

}  // namespace pcong
