#pragma once

#include <cstdint>

#include "pcong/series.hpp"

namespace pcong {

/* The four counting functions:
     Overpartition     pbar(n)   parts may repeat, first occurrence of a part
                                 size may be overlined
     OverpartitionOdd  pbar_o(n) overpartitions into odd parts
     Ped               ped(n)    partitions with no repeated even part
     Pod               pod(n)    partitions with no repeated odd part       */
enum class PartitionKind { Overpartition, OverpartitionOdd, Ped, Pod };

const char* partition_kind_name(PartitionKind kind);

/* Generating-function coefficients up to q^order.  Each kind is a quotient
   of two infinite products:
     pbar   = (-q;q)_inf   / (q;q)_inf
     pbar_o = (-q;q^2)_inf / (q;q^2)_inf
     ped    = (-q^2;q^2)_inf / (q;q^2)_inf
     pod    = (-q;q^2)_inf / (q^2;q^2)_inf
   Exact mode is capped at order 650: the series products stay inside checked
   128-bit arithmetic there, and everything larger runs mod m anyway. */
TruncatedSeries partition_series(PartitionKind kind, int order,
                                 CoefficientRing ring);

/* Brute-force count by recursion over part sizes, deliberately sharing no
   code with the series engine.  Overlining contributes a factor 2 per
   distinct part size.  Supported for n <= 60. */
std::int64_t enumerate_count(PartitionKind kind, int n);

}  // namespace pcong
