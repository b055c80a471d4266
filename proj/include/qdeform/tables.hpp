#pragma once

#include <string>
#include <vector>

namespace qdeform {

// Built-in reference tables with frozen expected values; `repro` replays
// them against the current implementation.
struct TableRow {
    std::string label;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct TableResult {
    std::string name;
    std::vector<TableRow> rows;
    bool pass = true;
};

std::vector<std::string> table_names();
TableResult run_table(const std::string& name);  // throws on unknown name

}  // namespace qdeform
