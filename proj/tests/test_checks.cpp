#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcong/verify.hpp"

using namespace pcong;

namespace {

const CheckReport& by_name(const std::vector<CheckReport>& reports,
                           const std::string& name) {
    for (const CheckReport& r : reports)
        if (r.spec.name == name) return r;
    throw std::logic_error("report not found: " + name);
}

std::vector<CheckReport> run_named(std::vector<std::string> names,
                                   std::int64_t n_max) {
    RunConfig cfg;
    cfg.checks = std::move(names);
    cfg.n_max = n_max;
    return run_all(cfg);
}

}  /* namespace */

TEST_SUITE("checks") {

TEST_CASE("catalog is complete") {
    std::vector<CheckInfo> infos = registered_checks();
    CHECK(infos.size() == 22);
    auto find = [&](const std::string& name) -> const CheckInfo& {
        for (const CheckInfo& info : infos)
            if (info.name == name) return info;
        throw std::logic_error("missing catalog entry: " + name);
    };
    CHECK(find("thm1.4-pbar").default_n_max == 2000);
    CHECK_FALSE(find("thm1.4-pbar").default_alpha_max.has_value());
    CHECK_FALSE(find("thm1.4-pbar").default_primes.has_value());
    CHECK(find("cong-1.1").default_alpha_max == 1);
    CHECK(find("hecke-1.9").default_primes ==
          std::vector<std::int64_t>{3, 5, 7});
    CHECK(find("cor-1.3").default_primes ==
          std::vector<std::int64_t>{5, 7, 11, 29});
    CHECK(find("cor-1.5").default_primes == std::vector<std::int64_t>{5, 11});
    for (const CheckInfo& info : infos) CHECK_FALSE(info.statement.empty());
}

TEST_CASE("tally caps stored counterexamples at ten") {
    CheckReport rep;
    for (int n = 0; n < 20; n++) rep.tally(n, {}, 1, 2);
    CHECK(rep.tested == 20);
    CHECK_FALSE(rep.passed);
    CHECK(rep.counterexamples.size() == 10);
    CHECK(rep.counterexamples.front().n == 0);
}

TEST_CASE("form sweeps pass on a short range and report sorted") {
    std::vector<CheckReport> reports =
        run_named({"thm1.1-ped", "rel-1.8", "thm1.1-pbar_o"}, 60);
    REQUIRE(reports.size() == 3);
    CHECK(reports[0].spec.name == "rel-1.8");
    CHECK(reports[1].spec.name == "thm1.1-pbar_o");
    CHECK(reports[2].spec.name == "thm1.1-ped");
    for (const CheckReport& r : reports) {
        CHECK(r.passed);
        CHECK(r.skipped == 0);
        CHECK(r.counterexamples.empty());
        CHECK(r.spec.ring == "mod3");
        CHECK(r.spec.n_max == 60);
    }
    /* pbar_o runs an enumeration leg from 0 and a formula leg from 1 */
    CHECK(by_name(reports, "thm1.1-pbar_o").tested == 121);
    CHECK(by_name(reports, "thm1.1-ped").tested == 61);
    CHECK(by_name(reports, "rel-1.8").tested == 61);
    CHECK(exit_code_for(reports) == 0);
}

TEST_CASE("five-square sweeps pass on a short range") {
    std::vector<CheckReport> reports =
        run_named({"thm1.4-pbar", "thm1.4-pod"}, 40);
    CHECK(by_name(reports, "thm1.4-pbar").passed);
    CHECK(by_name(reports, "thm1.4-pbar").tested == 41);
    CHECK(by_name(reports, "thm1.4-pod").passed);
    CHECK(by_name(reports, "thm1.4-pod").tested == 82);
}

TEST_CASE("recurrence checks pass on a short range") {
    std::vector<CheckReport> reports = run_named({"hecke-1.9"}, 20);
    CHECK(by_name(reports, "hecke-1.9").passed);
    CHECK(by_name(reports, "hecke-1.9").spec.primes ==
          std::vector<std::int64_t>{3, 5, 7});
    CHECK(by_name(reports, "hecke-1.9").tested == 63);

    reports = run_named({"lemma-r5"}, 50);
    CHECK(by_name(reports, "lemma-r5").passed);
    CHECK(by_name(reports, "lemma-r5").tested > 0);
}

TEST_CASE("family sweeps count points per leg") {
    std::vector<CheckReport> reports = run_named({"cong-1.1"}, 5);
    /* two progressions, alpha in {0, 1}, n in 0..5 */
    CHECK(by_name(reports, "cong-1.1").tested == 24);
    CHECK(by_name(reports, "cong-1.1").passed);
    CHECK(by_name(reports, "cong-1.1").spec.alpha_max == 1);

    reports = run_named({"cong-1.2"}, 5);
    CHECK(by_name(reports, "cong-1.2").tested == 24);
    CHECK(by_name(reports, "cong-1.2").passed);

    reports = run_named({"cong-1.4"}, 5);
    /* two literal points plus two legs of six */
    CHECK(by_name(reports, "cong-1.4").tested == 14);
    CHECK(by_name(reports, "cong-1.4").passed);
}

TEST_CASE("prime-indexed families drop multiples of ell") {
    RunConfig cfg;
    cfg.checks = {"cor-1.3"};
    cfg.n_max = 10;
    cfg.primes = std::vector<std::int64_t>{5};
    std::vector<CheckReport> reports = run_all(cfg);
    /* n in 0..10 minus 0, 5, 10 */
    CHECK(by_name(reports, "cor-1.3").tested == 8);
    CHECK(by_name(reports, "cor-1.3").passed);

    cfg.checks = {"cor-1.5"};
    cfg.n_max = 4;
    cfg.primes = std::vector<std::int64_t>{5, 11};
    reports = run_all(cfg);
    CHECK(by_name(reports, "cor-1.5").tested == 8);
    CHECK(by_name(reports, "cor-1.5").passed);
}

TEST_CASE("the ell = 2 case of cor-1.5 fails honestly") {
    RunConfig cfg;
    cfg.checks = {"cor-1.5"};
    cfg.n_max = 3;
    cfg.primes = std::vector<std::int64_t>{2};
    std::vector<CheckReport> reports = run_all(cfg);
    const CheckReport& rep = by_name(reports, "cor-1.5");
    CHECK(rep.tested == 2);
    CHECK_FALSE(rep.passed);
    REQUIRE_FALSE(rep.counterexamples.empty());
    const Counterexample& ce = rep.counterexamples.front();
    CHECK(ce.n == 1);
    CHECK(ce.lhs == 2);  /* pbar(24) = 23528 == 2 (mod 3) */
    CHECK(ce.rhs == 0);
    CHECK(ce.params ==
          std::vector<std::pair<std::string, std::int64_t>>{{"ell", 2}});
    CHECK(exit_code_for(reports) == 1);
}

TEST_CASE("identity checks pass on short ranges") {
    for (const char* name : {"ident-pbar_o", "ident-ped", "ident-pod"}) {
        std::vector<CheckReport> reports = run_named({name}, 50);
        CHECK(by_name(reports, name).passed);
        CHECK(by_name(reports, name).spec.ring == "exact");
    }
    std::vector<CheckReport> reports = run_named({"ident-pbar"}, 100);
    CHECK(by_name(reports, "ident-pbar").passed);
    CHECK(by_name(reports, "ident-pbar").spec.ring == "mod3");
    reports = run_named({"ident-psi5"}, 50);
    CHECK(by_name(reports, "ident-psi5").passed);
}

TEST_CASE("identity checks refuse ranges beyond the exact cap") {
    CHECK_THROWS_AS(run_named({"ident-pbar_o"}, 300), ConfigError);
    CHECK_THROWS_WITH_AS(run_named({"ident-pbar_o"}, 300),
                         "series order 900 exceeds the 650 cap for this "
                         "check's ring; reduce --n-max",
                         ConfigError);
}

TEST_CASE("vanishing and divisibility sweeps") {
    std::vector<CheckReport> reports =
        run_named({"vanish-x2-6y2", "vanish-ternary", "divis-r5"}, 60);
    for (const char* name : {"vanish-x2-6y2", "vanish-ternary", "divis-r5"})
        CHECK(by_name(reports, name).passed);
}

TEST_CASE("exact ring is honored and clamps with skips") {
    RunConfig cfg;
    cfg.checks = {"thm1.4-pbar"};
    cfg.n_max = 60;
    cfg.exact_ring = true;
    std::vector<CheckReport> reports = run_all(cfg);
    CHECK(by_name(reports, "thm1.4-pbar").spec.ring == "exact");
    CHECK(by_name(reports, "thm1.4-pbar").passed);

    /* beyond the exact cap the sweep keeps what fits and skips the rest */
    cfg.n_max = 300;
    reports = run_all(cfg);
    const CheckReport& rep = by_name(reports, "thm1.4-pbar");
    CHECK(rep.passed);
    CHECK(rep.tested == 217);
    CHECK(rep.skipped == 84);
}

TEST_CASE("perturbing one coefficient is caught where it matters") {
    RunConfig cfg;
    cfg.checks = {"thm1.4-pbar", "cong-1.3", "thm1.1-ped"};
    cfg.n_max = 50;
    cfg.perturb = CheckContext::Perturbation{PartitionKind::Overpartition, 18};
    std::vector<CheckReport> reports = run_all(cfg);

    const CheckReport& pbar = by_name(reports, "thm1.4-pbar");
    CHECK_FALSE(pbar.passed);
    REQUIRE_FALSE(pbar.counterexamples.empty());
    CHECK(pbar.counterexamples.front().n == 6);  /* 3n = 18 */

    const CheckReport& family = by_name(reports, "cong-1.3");
    CHECK_FALSE(family.passed);
    REQUIRE_FALSE(family.counterexamples.empty());
    CHECK(family.counterexamples.front().n == 0);  /* 27*0 + 18 */

    /* no overpartition coefficients appear here, so it stays green */
    CHECK(by_name(reports, "thm1.1-ped").passed);
    CHECK(exit_code_for(reports) == 1);
}

TEST_CASE("configuration errors") {
    CHECK_THROWS_WITH_AS(run_named({"nope"}, 10), "unknown check: nope",
                         ConfigError);
    CHECK_THROWS_WITH_AS(run_named({"thm1.4-pbar"}, 0),
                         "empty effective range", ConfigError);
    CHECK_THROWS_AS(run_named({"thm1.4-pbar"}, -3), ConfigError);
    CHECK_THROWS_AS(run_named({"thm1.4-pbar"}, 100000001), ConfigError);

    RunConfig cfg;
    cfg.checks = {"cong-1.1"};
    cfg.n_max = 5;
    cfg.alpha_max = 16;
    CHECK_THROWS_AS(run_all(cfg), ConfigError);

    cfg = RunConfig{};
    cfg.checks = {"hecke-1.9"};
    cfg.n_max = 10;
    cfg.primes = std::vector<std::int64_t>{4};
    CHECK_THROWS_WITH_AS(run_all(cfg), "4 is not prime", ConfigError);

    cfg.primes = std::vector<std::int64_t>{2};  /* prime but not odd */
    CHECK_THROWS_WITH_AS(run_all(cfg),
                         "no admissible primes for check hecke-1.9", ConfigError);

    cfg.checks = {"cor-1.3"};
    cfg.primes = std::vector<std::int64_t>{13};  /* 13 mod 24 is no class */
    CHECK_THROWS_AS(run_all(cfg), ConfigError);

    cfg.checks = {"hecke-1.9"};
    cfg.primes = std::vector<std::int64_t>{100003};
    CHECK_THROWS_AS(run_all(cfg), ConfigError);
}

TEST_CASE("irrelevant parameters are ignored, duplicates collapse") {
    RunConfig cfg;
    cfg.checks = {"divis-r5", "divis-r5"};
    cfg.n_max = 20;
    cfg.primes = std::vector<std::int64_t>{4};  /* not consulted here */
    cfg.alpha_max = 3;                          /* not consulted either */
    std::vector<CheckReport> reports = run_all(cfg);
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].spec.name == "divis-r5");
    CHECK(reports[0].passed);
    CHECK_FALSE(reports[0].spec.alpha_max.has_value());
    CHECK_FALSE(reports[0].spec.primes.has_value());
}

TEST_CASE("list parser") {
    CHECK(parse_int_list("3,5,7") == std::vector<std::int64_t>{3, 5, 7});
    CHECK(parse_int_list("42") == std::vector<std::int64_t>{42});
    CHECK_THROWS_AS(parse_int_list(""), ConfigError);
    CHECK_THROWS_AS(parse_int_list("3,,5"), ConfigError);
    CHECK_THROWS_AS(parse_int_list("3, 5"), ConfigError);
    CHECK_THROWS_AS(parse_int_list("a"), ConfigError);
    CHECK_THROWS_AS(parse_int_list("-3"), ConfigError);
    CHECK_THROWS_AS(parse_int_list("9999999999999999999"), ConfigError);
}

TEST_CASE("kind parser") {
    CHECK(parse_partition_kind("pbar") == PartitionKind::Overpartition);
    CHECK(parse_partition_kind("pbar-odd") == PartitionKind::OverpartitionOdd);
    CHECK(parse_partition_kind("ped") == PartitionKind::Ped);
    CHECK(parse_partition_kind("pod") == PartitionKind::Pod);
    CHECK_THROWS_AS(parse_partition_kind("qqq"), ConfigError);
}

TEST_CASE("perturbation parser") {
    CheckContext::Perturbation p = parse_perturbation("pbar:18");
    CHECK(p.first == PartitionKind::Overpartition);
    CHECK(p.second == 18);
    CHECK(parse_perturbation("ped:0").second == 0);
    CHECK_THROWS_AS(parse_perturbation("pbar"), ConfigError);
    CHECK_THROWS_AS(parse_perturbation("pbar:"), ConfigError);
    CHECK_THROWS_AS(parse_perturbation("pbar:x"), ConfigError);
    CHECK_THROWS_AS(parse_perturbation("zzz:5"), ConfigError);
    CHECK_THROWS_AS(parse_perturbation("pbar:1234567890"), ConfigError);
}

}  /* TEST_SUITE checks */
