#pragma once

#include <string>
#include <vector>

#include "lkfree/enumerator.hpp"
#include "lkfree/json_io.hpp"

namespace lkfree {

// Claimed growth form of f(n,3,4,L) for a row of the 32-list table.
enum class ClaimedForm {
  zero,             // no free graph (for the {0,4}-rows, from n = 13 on)
  one,              // exactly one
  two,              // empty and complete
  n_plus_one,       // n+1 for n >= 5
  exact_power,      // 2^binom(n-1,2)
  theta_n_log_n,    // 2^Theta(n log n)
  theta_n2_log_n,   // 2^Theta(n^2 log n)
  theta_n3,         // 2^Theta(n^3)
  full_cube,        // 2^binom(n,3)
};

enum class RowVerification {
  exact_match,       // census equals the closed form at every checked n
  bound_consistent,  // upper-bound + validated lower-bound construction
  out_of_desk_scope, // needs n >= 13 Ramsey facts; small-n census recorded
};

const char* claimed_form_name(ClaimedForm f);
const char* row_verification_name(RowVerification v);

struct TableRow {
  std::vector<int> list;
  ClaimedForm claimed = ClaimedForm::zero;
  RowVerification verification = RowVerification::exact_match;
  std::vector<int> n_checked;
  std::vector<BigCount> computed;
  bool ok = true;
  std::string note;
};

struct TableReport {
  std::vector<TableRow> rows;
  bool all_ok = true;
  double elapsed_s = 0.0;
};

ClaimedForm classify_list(const std::vector<int>& list);

// Runs the full 32-row verification harness. Exact-form rows are checked by
// census against their closed forms; Theta-rows get (i) the Theorem-style
// upper-bound comparison where the list is 3-good and (ii) a validated
// lower-bound construction, and are never marked exact_match. Rows needing
// R_3(4,4) = 13 are marked out_of_desk_scope with small-n censuses recorded.
TableReport verify_table(const CensusOptions& opts = {});

Json to_json(const TableReport& report, bool canonical = false);
std::string to_csv(const TableReport& report, bool canonical = false);

}  // namespace lkfree
