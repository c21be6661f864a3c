#pragma once

// Parameter table of every packing family the library knows about, with
// optional re-verification by construction.

#include <cstdint>
#include <string>
#include <vector>

namespace grasspack {

struct TableRow {
    int m = 0;
    int n = 0;
    std::uint64_t N = 0;
    std::string d2;
    std::string source;    // "1", "1a", "2a", "2b", "2c", "2d", "2e", "3"
    std::string verified;  // "enum", "formula", "reported", "external", "partial"
    std::string note;
};

struct TableOptions {
    int max_m = 128;
    int min_m = 1;
    bool formula_only = false;
    double clique_seconds = 20;  // per clique-based row
    bool parallel = true;
};

std::vector<TableRow> table_rows(const TableOptions& options);

std::string table_text(const std::vector<TableRow>& rows);
std::string table_csv(const std::vector<TableRow>& rows);
std::string table_json(const std::vector<TableRow>& rows);

}  // namespace grasspack
