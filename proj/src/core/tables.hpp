#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace charsum {

// Machine-readable value tables. Every cell is an exact integer; elements
// of extension fields appear as their integer codes (c0 + c1 p + ...).
struct TableSpec {
    std::string family; // count_mm | count_psi24 | jacobsthal
    std::int64_t p = 0;
    int r = 1;
    std::int64_t m = 2; // count_mm only
    std::int64_t n = 3; // jacobsthal only
};

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::int64_t>> rows;
};

Table make_table(const TableSpec& spec);

std::string table_to_csv(const Table& t);
nlohmann::json table_to_json(const Table& t);

} // namespace charsum
