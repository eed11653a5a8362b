#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pcong/fivesquares.hpp"
#include "pcong/partitions.hpp"
#include "pcong/series.hpp"

namespace pcong {

/* Configuration problems (unknown check, empty range, bad prime list) are
   distinct from verification failures: they abort the run and map to exit
   code 2, while a failed congruence is reported and maps to exit code 1. */
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Counterexample {
    std::int64_t n = 0;
    std::vector<std::pair<std::string, std::int64_t>> params;
    int128 lhs = 0;
    int128 rhs = 0;
};

/* What a check was asked to do: resolved sweep bound, parameters and ring.
   `statement` is the congruence or identity in plain notation; it is carried
   into the report's paper_ref field. */
struct CheckSpec {
    std::string name;
    std::string statement;
    std::int64_t n_max = 0;
    std::string ring;
    std::optional<int> alpha_max;
    std::optional<std::vector<std::int64_t>> primes;
};

struct CheckReport {
    CheckSpec spec;
    std::int64_t tested = 0;
    std::int64_t skipped = 0;
    bool passed = true;
    std::vector<Counterexample> counterexamples;  /* capped at first 10 */

    void tally(std::int64_t n,
               std::vector<std::pair<std::string, std::int64_t>> params,
               int128 lhs, int128 rhs);
    void skip() { skipped++; }
};

/* Prebuilt series and tables shared by the checks of one run.  Series are
   cached per (partition kind, ring) and rebuilt only when a larger order is
   requested; reserve/build lets the runner size each cache entry once for
   the whole run instead of growing it check by check. */
class CheckContext {
public:
    using Perturbation = std::pair<PartitionKind, int>;

    explicit CheckContext(std::optional<Perturbation> perturb = std::nullopt);

    void reserve_partition(PartitionKind kind, const CoefficientRing& ring,
                           int order);
    void reserve_theta5_mod3(int order);
    void reserve_r5_table(int n);
    void build_reserved();

    const TruncatedSeries& partition(PartitionKind kind,
                                     const CoefficientRing& ring, int order);
    const TruncatedSeries& theta5_mod3(int order);
    const R5Table& r5_table(int n);

private:
    using SeriesKey = std::tuple<int, int, std::int64_t>;
    std::optional<Perturbation> perturb_;
    std::map<SeriesKey, TruncatedSeries> series_;
    std::map<SeriesKey, int> reserved_;
    std::optional<TruncatedSeries> theta5_;
    int theta5_reserved_ = 0;
    std::optional<R5Table> r5_;
    int r5_reserved_ = 0;
};

struct RunConfig {
    std::vector<std::string> checks;           /* empty = every registered check */
    std::optional<std::int64_t> n_max;
    std::optional<int> alpha_max;
    std::optional<std::vector<std::int64_t>> primes;
    bool exact_ring = false;
    std::optional<CheckContext::Perturbation> perturb;
};

/* Catalog entry as printed by `verify list`. */
struct CheckInfo {
    std::string name;
    std::string statement;
    std::int64_t default_n_max = 0;
    std::optional<int> default_alpha_max;
    std::optional<std::vector<std::int64_t>> default_primes;
};

std::vector<CheckInfo> registered_checks();

/* Runs the selected checks and returns their reports sorted by name.
   Throws ConfigError on bad configuration; never throws for a failing
   congruence (that lands in the report). */
std::vector<CheckReport> run_all(const RunConfig& config);

/* 0 when everything passed, 1 otherwise (the CLI adds 2 for ConfigError). */
int exit_code_for(const std::vector<CheckReport>& reports);

/* Small argument parsers shared by the CLI and its tests. */
std::vector<std::int64_t> parse_int_list(const std::string& text);
CheckContext::Perturbation parse_perturbation(const std::string& text);
PartitionKind parse_partition_kind(const std::string& name);

}  // namespace pcong
