#include "pcong/report.hpp"

#include <cstdint>
#include <ctime>
#include <sstream>

#include <json.hpp>

namespace pcong {

namespace {

/* Counts that fit a double-exact integer stay JSON numbers; anything wider
   is emitted as a decimal string so no reader silently rounds it. */
nlohmann::ordered_json json_int(int128 v) {
    constexpr int128 kSafe = static_cast<int128>(1) << 53;
    if (v <= kSafe && v >= -kSafe)
        return static_cast<std::int64_t>(v);
    return to_string(v);
}

nlohmann::ordered_json json_params(
    const std::vector<std::pair<std::string, std::int64_t>>& params) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (const auto& [key, value] : params) obj[key] = value;
    return obj;
}

std::string utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string describe_params(
    const std::vector<std::pair<std::string, std::int64_t>>& params) {
    std::ostringstream out;
    for (const auto& [key, value] : params) out << " " << key << "=" << value;
    return out.str();
}

}  /* namespace */

std::string report_json(const std::vector<CheckReport>& reports) {
    nlohmann::ordered_json root;
    root["timestamp"] = utc_timestamp();
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const CheckReport& rep : reports) {
        nlohmann::ordered_json c;
        c["name"] = rep.spec.name;
        c["paper_ref"] = rep.spec.statement;
        c["n_max"] = rep.spec.n_max;
        nlohmann::ordered_json params;
        params["ring"] = rep.spec.ring;
        if (rep.spec.alpha_max) params["alpha_max"] = *rep.spec.alpha_max;
        if (rep.spec.primes) params["primes"] = *rep.spec.primes;
        c["params"] = std::move(params);
        c["tested"] = rep.tested;
        c["skipped"] = rep.skipped;
        c["passed"] = rep.passed;
        nlohmann::ordered_json ces = nlohmann::ordered_json::array();
        for (const Counterexample& ce : rep.counterexamples) {
            nlohmann::ordered_json j;
            j["n"] = ce.n;
            j["params"] = json_params(ce.params);
            j["lhs"] = json_int(ce.lhs);
            j["rhs"] = json_int(ce.rhs);
            ces.push_back(std::move(j));
        }
        c["counterexamples"] = std::move(ces);
        checks.push_back(std::move(c));
    }
    root["checks"] = std::move(checks);
    return root.dump(2) + "\n";
}

std::string report_csv(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    out << "name,passed,ring,n_max,tested,skipped,counterexamples\n";
    for (const CheckReport& rep : reports)
        out << rep.spec.name << "," << (rep.passed ? "true" : "false") << ","
            << rep.spec.ring << "," << rep.spec.n_max << "," << rep.tested << ","
            << rep.skipped << "," << rep.counterexamples.size() << "\n";
    return out.str();
}

std::string report_text(const std::vector<CheckReport>& reports) {
    std::ostringstream out;
    std::size_t failed = 0;
    for (const CheckReport& rep : reports) {
        out << (rep.passed ? "PASS" : "FAIL") << " " << rep.spec.name
            << "  ring=" << rep.spec.ring << " n_max=" << rep.spec.n_max;
        if (rep.spec.alpha_max) out << " alpha_max=" << *rep.spec.alpha_max;
        if (rep.spec.primes) {
            out << " primes=";
            for (std::size_t i = 0; i < rep.spec.primes->size(); i++)
                out << (i ? "," : "") << (*rep.spec.primes)[i];
        }
        out << " tested=" << rep.tested << " skipped=" << rep.skipped << "\n";
        if (!rep.passed) {
            out << "     " << rep.spec.statement << "\n";
            for (const Counterexample& ce : rep.counterexamples)
                out << "     counterexample n=" << ce.n
                    << describe_params(ce.params) << ": lhs=" << to_string(ce.lhs)
                    << " rhs=" << to_string(ce.rhs) << "\n";
            failed++;
        }
    }
    out << reports.size() << " checks: " << (reports.size() - failed)
        << " passed, " << failed << " failed\n";
    return out.str();
}

}  // namespace pcong
