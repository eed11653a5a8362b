#include "pcong/partitions.hpp"

#include <stdexcept>

namespace pcong {

const char* partition_kind_name(PartitionKind kind) {
    switch (kind) {
        case PartitionKind::Overpartition: return "pbar";
        case PartitionKind::OverpartitionOdd: return "pbar-odd";
        case PartitionKind::Ped: return "ped";
        case PartitionKind::Pod: return "pod";
    }
    return "?";
}

static const int kExactOrderCap = 650;

TruncatedSeries partition_series(PartitionKind kind, int order,
                                 CoefficientRing ring) {
    if (ring.is_exact() && order > kExactOrderCap)
        throw std::invalid_argument(
            "exact partition series are capped at order 650; use a mod-m ring");
    int num_first, num_step, den_first, den_step;
    switch (kind) {
        case PartitionKind::Overpartition:
            num_first = 1; num_step = 1; den_first = 1; den_step = 1; break;
        case PartitionKind::OverpartitionOdd:
            num_first = 1; num_step = 2; den_first = 1; den_step = 2; break;
        case PartitionKind::Ped:
            num_first = 2; num_step = 2; den_first = 1; den_step = 2; break;
        case PartitionKind::Pod:
        default:
            num_first = 1; num_step = 2; den_first = 2; den_step = 2; break;
    }
    TruncatedSeries num = pochhammer_product(+1, num_first, num_step, order, ring);
    TruncatedSeries den = pochhammer_product(-1, den_first, den_step, order, ring);
    return mul(num, invert(den));
}

/* Count partitions of m with all parts <= k, applying the kind's
   constraints.  Each chosen part size contributes its overline factor
   (2 for the overpartition kinds, 1 otherwise). */
static std::int64_t count_rec(PartitionKind kind, int m, int k) {
    if (m == 0) return 1;
    std::int64_t total = 0;
    for (int part = k < m ? k : m; part >= 1; part--) {
        if (kind == PartitionKind::OverpartitionOdd && part % 2 == 0) continue;
        int max_copies = m / part;
        if (kind == PartitionKind::Ped && part % 2 == 0 && max_copies > 1)
            max_copies = 1;
        if (kind == PartitionKind::Pod && part % 2 == 1 && max_copies > 1)
            max_copies = 1;
        std::int64_t overline =
            (kind == PartitionKind::Overpartition ||
             kind == PartitionKind::OverpartitionOdd) ? 2 : 1;
        for (int copies = 1; copies <= max_copies; copies++)
            total += overline * count_rec(kind, m - copies * part, part - 1);
    }
    return total;
}

std::int64_t enumerate_count(PartitionKind kind, int n) {
    if (n < 0) throw std::invalid_argument("enumerate_count requires n >= 0");
    if (n > 60)
        throw std::invalid_argument("enumeration oracle supports n <= 60 only");
    return count_rec(kind, n, n);
}

}  // namespace pcong
