#pragma once

#include <nlohmann/json.hpp>

#include "lkfree/bounds.hpp"
#include "lkfree/constructions.hpp"
#include "lkfree/enumerator.hpp"
#include "lkfree/freeness.hpp"

namespace lkfree {

// All emitters use ordered JSON with fixed key order so identical runs
// produce byte-identical output. `canonical` drops wall-clock fields, the
// only run-dependent ones, for golden-file comparison.
using Json = nlohmann::ordered_json;

Json to_json(const CountReport& report, bool canonical = false);
std::string count_report_csv_header();
std::string to_csv_row(const CountReport& report, bool canonical = false);

Json to_json(const DStat& stat, bool canonical = false);
Json to_json(const LogBound& bound);
Json to_json(const GreedyTrace& trace);
Json to_json(const FreenessReport& report);

}  // namespace lkfree
