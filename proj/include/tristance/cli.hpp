#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace tristance {

struct VerifyLine {
    bool pass = true;
    int d = 0;
    std::string text;
};

// Per-diameter checks of one parameter table (1-5). Exhaustive search is run
// for d <= search_max_d; a negative value picks a per-table default.
std::vector<VerifyLine> verify_table(int table, int max_d, int search_max_d = -1);
int default_search_limit(int table);

// Exit codes: 0 ok, 1 domain error or failed check, 2 usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tristance
