#include "pcong/verify.hpp"

#include <algorithm>
#include <set>

#include "pcong/arith.hpp"
#include "pcong/quadforms.hpp"

namespace pcong {

void CheckReport::tally(std::int64_t n,
                        std::vector<std::pair<std::string, std::int64_t>> params,
                        int128 lhs, int128 rhs) {
    tested++;
    if (lhs != rhs) {
        passed = false;
        if (counterexamples.size() < 10)
            counterexamples.push_back({n, std::move(params), lhs, rhs});
    }
}

CheckContext::CheckContext(std::optional<Perturbation> perturb)
    : perturb_(std::move(perturb)) {}

static std::tuple<int, int, std::int64_t> series_key(PartitionKind kind,
                                                     const CoefficientRing& ring) {
    return {static_cast<int>(kind), static_cast<int>(ring.kind), ring.modulus};
}

void CheckContext::reserve_partition(PartitionKind kind,
                                     const CoefficientRing& ring, int order) {
    int& slot = reserved_[series_key(kind, ring)];
    slot = std::max(slot, order);
}

void CheckContext::reserve_theta5_mod3(int order) {
    theta5_reserved_ = std::max(theta5_reserved_, order);
}

void CheckContext::reserve_r5_table(int n) {
    r5_reserved_ = std::max(r5_reserved_, n);
}

void CheckContext::build_reserved() {
    for (const auto& [key, order] : reserved_) {
        auto [kind, ring_kind, modulus] = key;
        CoefficientRing ring =
            ring_kind == static_cast<int>(CoefficientRing::Kind::ExactInt)
                ? CoefficientRing::exact()
                : CoefficientRing::mod(modulus);
        partition(static_cast<PartitionKind>(kind), ring, order);
    }
    reserved_.clear();
    if (theta5_reserved_ > 0) theta5_mod3(theta5_reserved_);
    if (r5_reserved_ > 0) r5_table(r5_reserved_);
}

const TruncatedSeries& CheckContext::partition(PartitionKind kind,
                                               const CoefficientRing& ring,
                                               int order) {
    auto key = series_key(kind, ring);
    auto it = series_.find(key);
    if (it != series_.end() && it->second.order() >= order) return it->second;
    TruncatedSeries s = partition_series(kind, order, ring);
    if (perturb_ && perturb_->first == kind && perturb_->second <= order)
        s.set_coeff(perturb_->second, ring.add(s.coeff(perturb_->second), 1));
    if (it != series_.end()) {
        it->second = std::move(s);
        return it->second;
    }
    return series_.emplace(key, std::move(s)).first->second;
}

const TruncatedSeries& CheckContext::theta5_mod3(int order) {
    if (!theta5_ || theta5_->order() < order)
        theta5_ = r5_series(order, CoefficientRing::mod(3));
    return *theta5_;
}

const R5Table& CheckContext::r5_table(int n) {
    if (!r5_ || r5_->N < n) r5_ = R5Table::from_enumeration(n);
    return *r5_;
}

int exit_code_for(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports)
        if (!r.passed) return 1;
    return 0;
}

/* ---------------------------------------------------------------------- */

namespace {

int mod3(int128 v) {
    int r = static_cast<int>(v % 3);
    return r < 0 ? r + 3 : r;
}

/* Exact partition series stay inside checked 128-bit arithmetic up to this
   order; mod-m sweeps get a larger cap as a time/memory guard.  Family
   checks truncate at a fixed order so that "every argument that fits the
   series" stays a bounded quantifier; points beyond a cap are skipped and
   counted as such. */
constexpr int kExactOrderCeiling = 650;
constexpr int kModOrderCeiling = 262144;
constexpr int kFamilyOrder = 150000;

/* Bounds on user-supplied parameters, generous for any honest run while
   keeping every internal product inside int64. */
constexpr std::int64_t kNMaxBound = 100000000;
constexpr int kAlphaBound = 15;
constexpr std::int64_t kPrimeBound = 100000;

struct Resolved {
    std::int64_t n_max = 0;
    int alpha_max = 0;
    std::vector<std::int64_t> primes;
    CoefficientRing ring = CoefficientRing::mod(3);
    std::string ring_label = "mod3";
};

int capped_order(std::int64_t desired, const Resolved& r,
                 std::int64_t mod_cap = kModOrderCeiling) {
    std::int64_t cap = r.ring.is_exact() ? kExactOrderCeiling : mod_cap;
    return static_cast<int>(std::min(desired, cap));
}

/* For identity checks the full order is required, not merely preferred, so
   overshooting the ring's cap is a configuration error rather than a skip. */
int required_order(const Resolved& r, std::int64_t multiplier, std::int64_t shift) {
    std::int64_t needed = multiplier * r.n_max + shift;
    std::int64_t cap = r.ring.is_exact() ? kExactOrderCeiling : kModOrderCeiling;
    if (needed > cap)
        throw ConfigError("series order " + std::to_string(needed) +
                          " exceeds the " + std::to_string(cap) +
                          " cap for this check's ring; reduce --n-max");
    return static_cast<int>(needed);
}

int theta5_order(std::int64_t desired) {
    return static_cast<int>(std::min<std::int64_t>(desired, kModOrderCeiling));
}

enum PrimeRule { kNoPrimes = 0, kOddPrime, kOddPrimeSmallSquare, kMod24Class, kTwoMod3 };

struct CheckDef {
    const char* name;
    const char* statement;
    std::int64_t default_n_max;
    int default_alpha_max;                    /* -1 when not applicable */
    std::vector<std::int64_t> default_primes; /* empty when not applicable */
    PrimeRule prime_rule;
    int fixed_ring;                           /* 0 follow config, 1 exact, 2 mod3 */
    void (*demands)(const Resolved&, CheckContext&);
    void (*run)(const Resolved&, CheckContext&, CheckReport&);
};

/* ---- theorem sweeps ---- */

void demands_pbar_o_form(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::OverpartitionOdd, r.ring,
                          capped_order(3 * r.n_max, r));
}

void run_pbar_o_form(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    const int order = capped_order(3 * r.n_max, r);
    const TruncatedSeries& gf =
        ctx.partition(PartitionKind::OverpartitionOdd, r.ring, order);
    DiagonalForm form({1, 6});
    for (std::int64_t n = 0; n <= r.n_max; n++) {
        if (3 * n > order) {
            rep.skip();
            if (n >= 1) rep.skip();
            continue;
        }
        int lhs = mod3(gf.coeff(static_cast<int>(3 * n)));
        rep.tally(n, {{"leg", 0}}, lhs,
                  mod3(f_sign(n) * count_representations(n, form)));
        if (n >= 1)
            rep.tally(n, {{"leg", 1}}, lhs,
                      mod3(f_sign(n) * count_x2_6y2_formula(n)));
    }
}

void demands_ped_form(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::Ped, r.ring,
                          capped_order(3 * r.n_max + 1, r));
}

void run_ped_form(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    const int order = capped_order(3 * r.n_max + 1, r);
    const TruncatedSeries& gf = ctx.partition(PartitionKind::Ped, r.ring, order);
    DiagonalForm form({2, 3});
    for (std::int64_t n = 0; n <= r.n_max; n++) {
        if (3 * n + 1 > order) { rep.skip(); continue; }
        int sign = (n % 2 == 0) ? -1 : 1;  /* (-1)^(n+1) */
        rep.tally(n, {}, mod3(gf.coeff(static_cast<int>(3 * n + 1))),
                  mod3(sign * count_representations(8 * n + 3, form)));
    }
}

void demands_ped_pbar_o(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::Ped, r.ring,
                          capped_order(3 * r.n_max + 1, r));
    ctx.reserve_partition(PartitionKind::OverpartitionOdd, r.ring,
                          capped_order(48 * r.n_max + 18, r));
}

void run_ped_pbar_o(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    const int order3 = capped_order(3 * r.n_max + 1, r);
    const int order48 = capped_order(48 * r.n_max + 18, r);
    const TruncatedSeries& ped = ctx.partition(PartitionKind::Ped, r.ring, order3);
    const TruncatedSeries& pbo =
        ctx.partition(PartitionKind::OverpartitionOdd, r.ring, order48);
    for (std::int64_t n = 0; n <= r.n_max; n++) {
        if (3 * n + 1 > order3 || 48 * n + 18 > order48) { rep.skip(); continue; }
        int sign = (n % 2 == 0) ? 1 : -1;
        int pedv = mod3(ped.coeff(static_cast<int>(3 * n + 1)));
        rep.tally(n, {}, mod3(sign * pedv),
                  mod3(pbo.coeff(static_cast<int>(48 * n + 18))));
    }
}

void demands_pbar_r5(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::Overpartition, r.ring,
                          capped_order(3 * r.n_max, r));
    if (r.n_max <= 2000)
        ctx.reserve_r5_table(static_cast<int>(r.n_max));
    else
        ctx.reserve_theta5_mod3(theta5_order(r.n_max));
}

void run_pbar_r5(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    const int order = capped_order(3 * r.n_max, r);
    const bool use_table = r.n_max <= 2000;
    const int t5o = theta5_order(r.n_max);
    const TruncatedSeries& gf =
        ctx.partition(PartitionKind::Overpartition, r.ring, order);
    const R5Table* table =
        use_table ? &ctx.r5_table(static_cast<int>(r.n_max)) : nullptr;
    const TruncatedSeries* th5 = use_table ? nullptr : &ctx.theta5_mod3(t5o);
    for (std::int64_t n = 0; n <= r.n_max; n++) {
        if (3 * n > order || (!use_table && n > t5o)) { rep.skip(); continue; }
        std::int64_t r5v =
            use_table ? table->at(n)
                      : static_cast<std::int64_t>(th5->coeff(static_cast<int>(n)));
        int sign = (n % 2 == 0) ? 1 : -1;
        rep.tally(n, {}, mod3(gf.coeff(static_cast<int>(3 * n))), mod3(sign * r5v));
    }
}

void demands_pod_r5(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::Pod, r.ring,
                          capped_order(3 * r.n_max + 2, r));
    ctx.reserve_partition(PartitionKind::Overpartition, r.ring,
                          capped_order(24 * r.n_max + 15, r));
    ctx.reserve_theta5_mod3(theta5_order(8 * r.n_max + 5));
}

void run_pod_r5(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    const int order_pod = capped_order(3 * r.n_max + 2, r);
    const int order_pbar = capped_order(24 * r.n_max + 15, r);
    const int t5o = theta5_order(8 * r.n_max + 5);
    const TruncatedSeries& pod = ctx.partition(PartitionKind::Pod, r.ring, order_pod);
    const TruncatedSeries& pbar =
        ctx.partition(PartitionKind::Overpartition, r.ring, order_pbar);
    const TruncatedSeries& th5 = ctx.theta5_mod3(t5o);
    for (std::int64_t n = 0; n <= r.n_max; n++) {
        if (3 * n + 2 > order_pod) {
            rep.skip();
            rep.skip();
            continue;
        }
        int sign = (n % 2 == 0) ? 1 : -1;
        int podv = mod3(pod.coeff(static_cast<int>(3 * n + 2)));
        if (8 * n + 5 <= t5o)
            rep.tally(n, {{"leg", 0}}, podv,
                      mod3(sign * static_cast<std::int64_t>(
                                      th5.coeff(static_cast<int>(8 * n + 5)))));
        else
            rep.skip();
        if (24 * n + 15 <= order_pbar)
            rep.tally(n, {{"leg", 1}}, mod3(-sign * podv),
                      mod3(pbar.coeff(static_cast<int>(24 * n + 15))));
        else
            rep.skip();
    }
}

void demands_hecke_pbar(const Resolved& r, CheckContext& ctx) {
    std::int64_t ell_max = *std::max_element(r.primes.begin(), r.primes.end());
    ctx.reserve_partition(PartitionKind::Overpartition, r.ring,
                          capped_order(3 * ell_max * ell_max * r.n_max, r));
}

void run_hecke_pbar(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    std::int64_t ell_max = *std::max_element(r.primes.begin(), r.primes.end());
    const int order = capped_order(3 * ell_max * ell_max * r.n_max, r);
    const TruncatedSeries& gf =
        ctx.partition(PartitionKind::Overpartition, r.ring, order);
    for (std::int64_t ell : r.primes) {
        for (std::int64_t n = 0; n <= r.n_max; n++) {
            std::int64_t arg = 3 * ell * ell * n;
            if (arg > order || 3 * n > order) { rep.skip(); continue; }
            int lhs = mod3(gf.coeff(static_cast<int>(arg)));
            /* pbar(3n/ell^2) is 0 unless ell^2 divides 3n; ell^2 divides 0,
               so n = 0 subtracts ell * pbar(0). */
            std::int64_t sub = 0;
            if ((3 * n) % (ell * ell) == 0)
                sub = mod3(gf.coeff(static_cast<int>(3 * n / (ell * ell))));
            std::int64_t rhs = (ell - ell * legendre(n, ell) + 1) *
                                   mod3(gf.coeff(static_cast<int>(3 * n))) -
                               ell * sub;
            rep.tally(n, {{"ell", ell}}, lhs, mod3(rhs));
        }
    }
}

void demands_hecke_r5(const Resolved& r, CheckContext& ctx) {
    (void)r;
    ctx.reserve_r5_table(2000);
}

void run_hecke_r5(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    const R5Table& table = ctx.r5_table(2000);
    for (std::int64_t ell : r.primes) {
        std::int64_t n_stop = std::min<std::int64_t>(r.n_max, table.N / (ell * ell));
        for (std::int64_t n = 0; n <= n_stop; n++)
            rep.tally(n, {{"ell", ell}}, table.at(ell * ell * n),
                      r5_hecke_rhs(ell, n, table));
    }
}

/* ---- congruence families ---- */

using Params = std::vector<std::pair<std::string, std::int64_t>>;

struct FamilyLeg {
    std::int64_t A = 0;
    std::int64_t B = 0;
    Params tags;
    std::int64_t coprime_to = 0;  /* skip multiples of this n (0 = none) */
};

/* Size the series to what the sweep can actually reach, never beyond the
   family window; a small --n-max then gets a small, fast build while the
   defaults fill the full window. */
int family_order(const Resolved& r, const std::vector<FamilyLeg>& legs) {
    int128 needed = 1;
    for (const FamilyLeg& leg : legs)
        needed = std::max(needed, static_cast<int128>(leg.A) * r.n_max + leg.B);
    std::int64_t clamped =
        static_cast<std::int64_t>(std::min<int128>(needed, kFamilyOrder));
    return capped_order(clamped, r, kFamilyOrder);
}

void sweep_family(const Resolved& r, CheckContext& ctx, CheckReport& rep,
                  PartitionKind kind, const std::vector<FamilyLeg>& legs) {
    const int order = family_order(r, legs);
    const TruncatedSeries& gf = ctx.partition(kind, r.ring, order);
    for (const FamilyLeg& leg : legs) {
        for (std::int64_t n = 0; n <= r.n_max; n++) {
            if (leg.coprime_to != 0 && n % leg.coprime_to == 0) continue;
            int128 arg = static_cast<int128>(leg.A) * n + leg.B;
            if (arg > order) { rep.skip(); continue; }
            rep.tally(n, leg.tags, mod3(gf.coeff(static_cast<int>(arg))), 0);
        }
    }
    if (rep.tested == 0) throw ConfigError("empty effective range");
}

std::int64_t pow_i64(std::int64_t base, int exp) {
    std::int64_t v = 1;
    for (int i = 0; i < exp; i++) v *= base;
    return v;
}

std::vector<FamilyLeg> legs_cong_11(const Resolved& r) {
    std::vector<FamilyLeg> legs;
    for (int a = 0; a <= r.alpha_max; a++) {
        std::int64_t s = pow_i64(9, a);
        legs.push_back({s * 9, s * 6, {{"alpha", a}, {"progression", 0}}, 0});
        legs.push_back({s * 27, s * 9, {{"alpha", a}, {"progression", 1}}, 0});
    }
    return legs;
}

std::vector<FamilyLeg> legs_cong_12(const Resolved& r) {
    std::vector<FamilyLeg> legs;
    for (int a = 0; a <= r.alpha_max; a++) {
        std::int64_t s = pow_i64(9, a);
        legs.push_back(
            {27 * s, (153 * s - 1) / 8, {{"alpha", a}, {"progression", 0}}, 0});
        legs.push_back(
            {9 * s, (57 * s - 1) / 8, {{"alpha", a}, {"progression", 1}}, 0});
    }
    return legs;
}

std::vector<FamilyLeg> legs_cong_13(const Resolved& r) {
    std::vector<FamilyLeg> legs;
    for (int a = 0; a <= r.alpha_max; a++) {
        std::int64_t s = pow_i64(9, a);
        legs.push_back({s * 27, s * 18, {{"alpha", a}}, 0});
    }
    return legs;
}

std::vector<FamilyLeg> legs_cong_14(const Resolved& r) {
    std::vector<FamilyLeg> legs;
    for (int a = 0; a <= r.alpha_max; a++) {
        std::int64_t s = pow_i64(9, a);
        legs.push_back({27 * s, (207 * s + 1) / 8, {{"alpha", a}}, 0});
    }
    return legs;
}

std::vector<FamilyLeg> legs_cor_12(const Resolved& r) {
    std::vector<FamilyLeg> legs;
    for (int a = 0; a <= r.alpha_max; a++) {
        std::int64_t s = pow_i64(4, a);
        legs.push_back({24 * s, 9 * s, {{"alpha", a}, {"progression", 0}}, 0});
        legs.push_back({24 * s, 15 * s, {{"alpha", a}, {"progression", 1}}, 0});
    }
    return legs;
}

std::vector<FamilyLeg> legs_cor_13(const Resolved& r) {
    std::vector<FamilyLeg> legs;
    for (std::int64_t ell : r.primes)
        legs.push_back({3 * ell * ell, 0, {{"ell", ell}}, ell});
    return legs;
}

std::vector<FamilyLeg> legs_cor_15(const Resolved& r) {
    std::vector<FamilyLeg> legs;
    for (std::int64_t ell : r.primes)
        legs.push_back({3 * ell * ell * ell, 0, {{"ell", ell}}, ell});
    return legs;
}

void demands_cong_11(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::OverpartitionOdd, r.ring,
                          family_order(r, legs_cong_11(r)));
}

void demands_cong_12(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::Ped, r.ring,
                          family_order(r, legs_cong_12(r)));
}

void demands_cong_13(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::Overpartition, r.ring,
                          family_order(r, legs_cong_13(r)));
}

void demands_cong_14(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::Pod, r.ring,
                          family_order(r, legs_cong_14(r)));
}

void demands_cor_12(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::OverpartitionOdd, r.ring,
                          family_order(r, legs_cor_12(r)));
}

void demands_cor_13(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::OverpartitionOdd, r.ring,
                          family_order(r, legs_cor_13(r)));
}

void demands_cor_15(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::Overpartition, r.ring,
                          family_order(r, legs_cor_15(r)));
}

void run_cong_11(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    sweep_family(r, ctx, rep, PartitionKind::OverpartitionOdd, legs_cong_11(r));
}

void run_cong_12(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    sweep_family(r, ctx, rep, PartitionKind::Ped, legs_cong_12(r));
}

void run_cong_13(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    sweep_family(r, ctx, rep, PartitionKind::Overpartition, legs_cong_13(r));
}

void run_cong_14(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    /* The argument is 3^(2a+3)*n + (23*3^(2a+2)+1)/8.  Its n-free reading
       (the same expression with the multiplier absorbed) is the n = 1 point;
       that point is tallied separately under a "literal" tag so both
       readings stay visible in the report. */
    std::vector<FamilyLeg> legs = legs_cong_14(r);
    const int order = family_order(r, legs);
    const TruncatedSeries& gf = ctx.partition(PartitionKind::Pod, r.ring, order);
    for (const FamilyLeg& leg : legs) {
        std::int64_t literal = leg.A + leg.B;
        Params tags = leg.tags;
        tags.push_back({"literal", 1});
        if (literal <= order)
            rep.tally(1, std::move(tags),
                      mod3(gf.coeff(static_cast<int>(literal))), 0);
        else
            rep.skip();
    }
    sweep_family(r, ctx, rep, PartitionKind::Pod, legs);
}

void run_cor_12(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    sweep_family(r, ctx, rep, PartitionKind::OverpartitionOdd, legs_cor_12(r));
}

void run_cor_13(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    sweep_family(r, ctx, rep, PartitionKind::OverpartitionOdd, legs_cor_13(r));
}

void run_cor_15(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    sweep_family(r, ctx, rep, PartitionKind::Overpartition, legs_cor_15(r));
}

/* ---- series identities ---- */

void compare_series(CheckReport& rep, const TruncatedSeries& lhs,
                    const TruncatedSeries& rhs, int order) {
    for (int k = 0; k <= order; k++)
        rep.tally(k, {}, lhs.coeff(k), rhs.coeff(k));
}

void demands_ident_pbar_o(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::OverpartitionOdd, CoefficientRing::exact(),
                          required_order(r, 3, 0));
}

void run_ident_pbar_o(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    const int N = static_cast<int>(r.n_max);
    const CoefficientRing ring = CoefficientRing::exact();
    const TruncatedSeries& gf =
        ctx.partition(PartitionKind::OverpartitionOdd, ring, required_order(r, 3, 0));
    TruncatedSeries part = extract_progression(gf, 3, 0);
    TruncatedSeries D = theta_D(N, ring);
    TruncatedSeries lhs = mul(part, mul(D, D));
    TruncatedSeries rhs = mul(substitute_power(D, 3), substitute_power(D, 6));
    compare_series(rep, lhs, rhs, N);
}

void demands_ident_ped(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::Ped, CoefficientRing::exact(),
                          required_order(r, 3, 1));
}

void run_ident_ped(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    const int N = static_cast<int>(r.n_max);
    const CoefficientRing ring = CoefficientRing::exact();
    const TruncatedSeries& gf =
        ctx.partition(PartitionKind::Ped, ring, required_order(r, 3, 1));
    TruncatedSeries part = extract_progression(gf, 3, 1);
    TruncatedSeries D = theta_D(N, ring);
    TruncatedSeries psi_neg_cubed =
        substitute_power(substitute_negate(theta_psi(N, ring)), 3);
    TruncatedSeries lhs = mul(part, mul(D, D));
    TruncatedSeries rhs = mul(substitute_power(D, 3), psi_neg_cubed);
    compare_series(rep, lhs, rhs, N);
}

void demands_ident_pbar(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::Overpartition, CoefficientRing::mod(3),
                          required_order(r, 3, 0));
}

void run_ident_pbar(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    const int N = static_cast<int>(r.n_max);
    const CoefficientRing ring = CoefficientRing::mod(3);
    const TruncatedSeries& gf =
        ctx.partition(PartitionKind::Overpartition, ring, required_order(r, 3, 0));
    TruncatedSeries part = extract_progression(gf, 3, 0);
    TruncatedSeries D = theta_D(N, ring);
    TruncatedSeries D3 = substitute_power(D, 3);
    compare_series(rep, mul(part, D), mul(D3, D3), N);
}

void demands_ident_pod(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_partition(PartitionKind::Pod, CoefficientRing::exact(),
                          required_order(r, 3, 2));
}

void run_ident_pod(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    const int N = static_cast<int>(r.n_max);
    const CoefficientRing ring = CoefficientRing::exact();
    const TruncatedSeries& gf =
        ctx.partition(PartitionKind::Pod, ring, required_order(r, 3, 2));
    TruncatedSeries part = substitute_negate(extract_progression(gf, 3, 2));
    TruncatedSeries psi = theta_psi(N, ring);
    TruncatedSeries psi2 = mul(psi, psi);
    TruncatedSeries lhs = mul(part, mul(psi2, psi2));
    TruncatedSeries rhs = substitute_power(mul(psi2, psi), 3);
    compare_series(rep, lhs, rhs, N);
}

void demands_ident_psi5(const Resolved& r, CheckContext& ctx) {
    ctx.reserve_theta5_mod3(required_order(r, 8, 5));
}

void run_ident_psi5(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    const int N = static_cast<int>(r.n_max);
    const CoefficientRing ring = CoefficientRing::mod(3);
    TruncatedSeries psi = theta_psi(N, ring);
    TruncatedSeries psi2 = mul(psi, psi);
    TruncatedSeries psi5 = mul(mul(psi2, psi2), psi);
    const TruncatedSeries& th5 = ctx.theta5_mod3(required_order(r, 8, 5));
    TruncatedSeries r5part = extract_progression(th5, 8, 5);
    compare_series(rep, psi5, r5part, N);
}

/* ---- vanishing and divisibility ---- */

void demands_none(const Resolved&, CheckContext&) {}

void run_vanish_x2_6y2(const Resolved& r, CheckContext&, CheckReport& rep) {
    DiagonalForm form({1, 6});
    for (std::int64_t n = 0; n <= r.n_max; n++) {
        rep.tally(n, {{"progression", 0}}, count_representations(3 * n + 2, form), 0);
        rep.tally(n, {{"progression", 1}}, count_representations(9 * n + 3, form), 0);
    }
}

void run_vanish_ternary(const Resolved& r, CheckContext&, CheckReport& rep) {
    DiagonalForm form({1, 1, 3});
    for (std::int64_t n = 0; n <= r.n_max; n++)
        rep.tally(n, {}, count_representations(9 * n + 6, form), 0);
}

void demands_divis_r5(const Resolved& r, CheckContext& ctx) {
    if (9 * r.n_max + 6 <= 2000)
        ctx.reserve_r5_table(static_cast<int>(9 * r.n_max + 6));
    else
        ctx.reserve_theta5_mod3(theta5_order(9 * r.n_max + 6));
}

void run_divis_r5(const Resolved& r, CheckContext& ctx, CheckReport& rep) {
    const bool use_table = 9 * r.n_max + 6 <= 2000;
    const int t5o = theta5_order(9 * r.n_max + 6);
    const R5Table* table =
        use_table ? &ctx.r5_table(static_cast<int>(9 * r.n_max + 6)) : nullptr;
    const TruncatedSeries* th5 = use_table ? nullptr : &ctx.theta5_mod3(t5o);
    for (std::int64_t n = 0; n <= r.n_max; n++) {
        if (!use_table && 9 * n + 6 > t5o) { rep.skip(); continue; }
        std::int64_t v = use_table
                             ? table->at(9 * n + 6)
                             : static_cast<std::int64_t>(
                                   th5->coeff(static_cast<int>(9 * n + 6)));
        rep.tally(n, {}, mod3(v), 0);
    }
}

/* ---- registry ---- */

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"thm1.1-pbar_o",
         "pbar_o(3n) == f(n)*R(n, x^2+6y^2) (mod 3), with R by lattice "
         "enumeration (leg 0) and by the multiplicative class formula (leg 1)",
         5000, -1, {}, kNoPrimes, 0, demands_pbar_o_form, run_pbar_o_form},
        {"thm1.1-ped",
         "ped(3n+1) == (-1)^(n+1)*R(8n+3, 2x^2+3y^2) (mod 3)",
         5000, -1, {}, kNoPrimes, 0, demands_ped_form, run_ped_form},
        {"rel-1.8",
         "(-1)^n*ped(3n+1) == pbar_o(48n+18) (mod 3)",
         5000, -1, {}, kNoPrimes, 0, demands_ped_pbar_o, run_ped_pbar_o},
        {"thm1.4-pbar",
         "pbar(3n) == (-1)^n*r5(n) (mod 3)",
         2000, -1, {}, kNoPrimes, 0, demands_pbar_r5, run_pbar_r5},
        {"thm1.4-pod",
         "pod(3n+2) == (-1)^n*r5(8n+5) (mod 3) (leg 0) and "
         "(-1)^(n+1)*pod(3n+2) == pbar(24n+15) (mod 3) (leg 1)",
         1000, -1, {}, kNoPrimes, 0, demands_pod_r5, run_pod_r5},
        {"hecke-1.9",
         "pbar(3*ell^2*n) == (ell - ell*(n|ell) + 1)*pbar(3n) - ell*pbar(3n/ell^2) "
         "(mod 3) for odd primes ell, where pbar(3n/ell^2) = 0 unless ell^2 "
         "divides 3n",
         300, -1, {3, 5, 7}, kOddPrime, 0, demands_hecke_pbar, run_hecke_pbar},
        {"lemma-r5",
         "r5(ell^2*n) == (ell^3 - ell*(n|ell) + 1)*r5(n) - ell^3*r5(n/ell^2) "
         "as exact integers, against the enumerated table up to 2000",
         2000, -1, {3, 5}, kOddPrimeSmallSquare, 0, demands_hecke_r5, run_hecke_r5},
        {"cong-1.1",
         "pbar_o(3^(2a)*(9n+6)) == 0 and pbar_o(3^(2a)*(27n+9)) == 0 (mod 3)",
         16666, 1, {}, kNoPrimes, 0, demands_cong_11, run_cong_11},
        {"cong-1.2",
         "ped(3^(2a+3)*n + (17*3^(2a+2)-1)/8) == 0 and "
         "ped(3^(2a+2)*n + (19*3^(2a+1)-1)/8) == 0 (mod 3)",
         16665, 1, {}, kNoPrimes, 0, demands_cong_12, run_cong_12},
        {"cong-1.3",
         "pbar(3^(2a)*(27n+18)) == 0 (mod 3)",
         5554, 1, {}, kNoPrimes, 0, demands_cong_13, run_cong_13},
        {"cong-1.4",
         "pod(3^(2a+3)*n + (23*3^(2a+2)+1)/8) == 0 (mod 3); the n-free reading "
         "of the argument is its n=1 point, tallied under a literal tag",
         5554, 1, {}, kNoPrimes, 0, demands_cong_14, run_cong_14},
        {"cor-1.2",
         "pbar_o(2^(2a)*(24n+9)) == 0 and pbar_o(2^(2a)*(24n+15)) == 0 (mod 3)",
         6249, 2, {}, kNoPrimes, 0, demands_cor_12, run_cor_12},
        {"cor-1.3",
         "pbar_o(3*ell^2*n) == 0 (mod 3) for primes ell == 1,5,7,11 (mod 24) "
         "with ell not dividing n",
         2000, -1, {5, 7, 11, 29}, kMod24Class, 0, demands_cor_13, run_cor_13},
        {"cor-1.5",
         "pbar(3*ell^3*n) == 0 (mod 3) for primes ell == 2 (mod 3) with ell not "
         "dividing n; ell = 2 is admissible but false (pbar(24) = 23528 == 2 "
         "mod 3), so the default prime set is {5, 11}",
         400, -1, {5, 11}, kTwoMod3, 0, demands_cor_15, run_cor_15},
        {"ident-pbar_o",
         "(sum pbar_o(3n) q^n) * D(q)^2 == D(q^3)*D(q^6) with exact integer "
         "coefficients",
         200, -1, {}, kNoPrimes, 1, demands_ident_pbar_o, run_ident_pbar_o},
        {"ident-ped",
         "(sum ped(3n+1) q^n) * D(q)^2 == D(q^3)*psi(-q^3) with exact integer "
         "coefficients",
         200, -1, {}, kNoPrimes, 1, demands_ident_ped, run_ident_ped},
        {"ident-pbar",
         "(sum pbar(3n) q^n) * D(q) == D(q^3)^2 (mod 3)",
         2000, -1, {}, kNoPrimes, 2, demands_ident_pbar, run_ident_pbar},
        {"ident-pod",
         "(sum (-1)^n*pod(3n+2) q^n) * psi(q)^4 == psi(q^3)^3 with exact "
         "integer coefficients",
         200, -1, {}, kNoPrimes, 1, demands_ident_pod, run_ident_pod},
        {"ident-psi5",
         "coefficient n of psi(q)^5 == r5(8n+5) (mod 3)",
         200, -1, {}, kNoPrimes, 2, demands_ident_psi5, run_ident_psi5},
        {"vanish-x2-6y2",
         "R(3n+2, x^2+6y^2) == 0 and R(9n+3, x^2+6y^2) == 0",
         3000, -1, {}, kNoPrimes, 0, demands_none, run_vanish_x2_6y2},
        {"vanish-ternary",
         "R(9n+6, x^2+y^2+3z^2) == 0",
         1000, -1, {}, kNoPrimes, 0, demands_none, run_vanish_ternary},
        {"divis-r5",
         "r5(9n+6) == 0 (mod 3)",
         200, -1, {}, kNoPrimes, 0, demands_divis_r5, run_divis_r5},
    };
    return defs;
}

bool prime_admissible(PrimeRule rule, std::int64_t ell) {
    switch (rule) {
        case kOddPrime: return ell >= 3;
        case kOddPrimeSmallSquare: return ell >= 3 && ell * ell <= 2000;
        case kMod24Class: {
            std::int64_t r = ell % 24;
            return r == 1 || r == 5 || r == 7 || r == 11;
        }
        case kTwoMod3: return ell % 3 == 2;
        default: return false;
    }
}

Resolved resolve(const CheckDef& def, const RunConfig& config) {
    Resolved r;
    r.n_max = config.n_max.value_or(def.default_n_max);
    if (r.n_max < 1) throw ConfigError("empty effective range");
    if (r.n_max > kNMaxBound)
        throw ConfigError("n bound larger than " + std::to_string(kNMaxBound) +
                          " is not supported");
    if (def.default_alpha_max >= 0) {
        r.alpha_max = config.alpha_max.value_or(def.default_alpha_max);
        if (r.alpha_max < 0) throw ConfigError("alpha bound must be >= 0");
        if (r.alpha_max > kAlphaBound)
            throw ConfigError("alpha bound larger than " +
                              std::to_string(kAlphaBound) + " is not supported");
    }
    if (def.prime_rule != kNoPrimes) {
        std::vector<std::int64_t> source = config.primes.value_or(def.default_primes);
        for (std::int64_t ell : source) {
            if (ell >= kPrimeBound)
                throw ConfigError("prime " + std::to_string(ell) +
                                  " is out of range (must be below " +
                                  std::to_string(kPrimeBound) + ")");
            if (!is_prime(ell))
                throw ConfigError(std::to_string(ell) + " is not prime");
        }
        for (std::int64_t ell : source)
            if (prime_admissible(def.prime_rule, ell)) r.primes.push_back(ell);
        if (r.primes.empty())
            throw ConfigError(std::string("no admissible primes for check ") +
                              def.name);
    }
    if (def.fixed_ring == 1) {
        r.ring = CoefficientRing::exact();
        r.ring_label = "exact";
    } else if (def.fixed_ring == 2) {
        r.ring = CoefficientRing::mod(3);
        r.ring_label = "mod3";
    } else if (config.exact_ring) {
        r.ring = CoefficientRing::exact();
        r.ring_label = "exact";
    }
    return r;
}

CheckSpec spec_for(const CheckDef& def, const Resolved& r) {
    CheckSpec spec;
    spec.name = def.name;
    spec.statement = def.statement;
    spec.n_max = r.n_max;
    spec.ring = r.ring_label;
    if (def.default_alpha_max >= 0) spec.alpha_max = r.alpha_max;
    if (def.prime_rule != kNoPrimes) spec.primes = r.primes;
    return spec;
}

}  /* namespace */

std::vector<CheckInfo> registered_checks() {
    std::vector<CheckInfo> out;
    for (const CheckDef& def : registry()) {
        CheckInfo info;
        info.name = def.name;
        info.statement = def.statement;
        info.default_n_max = def.default_n_max;
        if (def.default_alpha_max >= 0) info.default_alpha_max = def.default_alpha_max;
        if (def.prime_rule != kNoPrimes) info.default_primes = def.default_primes;
        out.push_back(std::move(info));
    }
    return out;
}

std::vector<CheckReport> run_all(const RunConfig& config) {
    std::vector<const CheckDef*> selected;
    if (config.checks.empty()) {
        for (const CheckDef& def : registry()) selected.push_back(&def);
    } else {
        std::set<std::string> seen;
        for (const std::string& name : config.checks) {
            if (!seen.insert(name).second) continue;
            const CheckDef* found = nullptr;
            for (const CheckDef& def : registry())
                if (name == def.name) { found = &def; break; }
            if (!found) throw ConfigError("unknown check: " + name);
            selected.push_back(found);
        }
    }

    std::vector<Resolved> resolved;
    resolved.reserve(selected.size());
    for (const CheckDef* def : selected) resolved.push_back(resolve(*def, config));

    CheckContext ctx(config.perturb);
    for (std::size_t i = 0; i < selected.size(); i++)
        selected[i]->demands(resolved[i], ctx);
    ctx.build_reserved();

    std::vector<CheckReport> reports;
    reports.reserve(selected.size());
    for (std::size_t i = 0; i < selected.size(); i++) {
        CheckReport rep;
        rep.spec = spec_for(*selected[i], resolved[i]);
        selected[i]->run(resolved[i], ctx, rep);
        if (rep.tested == 0) throw ConfigError("empty effective range");
        reports.push_back(std::move(rep));
    }
    std::sort(reports.begin(), reports.end(),
              [](const CheckReport& a, const CheckReport& b) {
                  return a.spec.name < b.spec.name;
              });
    return reports;
}

std::vector<std::int64_t> parse_int_list(const std::string& text) {
    std::vector<std::int64_t> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string tok = text.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        if (tok.empty() || tok.size() > 18 ||
            tok.find_first_not_of("0123456789") != std::string::npos)
            throw ConfigError("expected a comma-separated list of integers, got '" +
                              text + "'");
        out.push_back(std::stoll(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

PartitionKind parse_partition_kind(const std::string& name) {
    if (name == "pbar") return PartitionKind::Overpartition;
    if (name == "pbar-odd") return PartitionKind::OverpartitionOdd;
    if (name == "ped") return PartitionKind::Ped;
    if (name == "pod") return PartitionKind::Pod;
    throw ConfigError("unknown partition kind '" + name +
                      "' (expected pbar, pbar-odd, ped or pod)");
}

CheckContext::Perturbation parse_perturbation(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw ConfigError("perturbation must look like KIND:INDEX, e.g. pbar:18");
    PartitionKind kind = parse_partition_kind(text.substr(0, colon));
    std::string idx = text.substr(colon + 1);
    if (idx.empty() || idx.size() > 9 ||
        idx.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError("perturbation index must be a non-negative integer");
    return {kind, static_cast<int>(std::stoll(idx))};
}

}  // namespace pcong
