#pragma once

#include <string>
#include <vector>

#include "pcong/verify.hpp"

namespace pcong {

/* Serializations of a finished run.  JSON carries the full structure
   (one top-level timestamp, per-check params and counterexamples), CSV a
   one-line-per-check summary, text a human-readable digest.  All three end
   with a newline. */
std::string report_json(const std::vector<CheckReport>& reports);
std::string report_csv(const std::vector<CheckReport>& reports);
std::string report_text(const std::vector<CheckReport>& reports);

}  // namespace pcong
