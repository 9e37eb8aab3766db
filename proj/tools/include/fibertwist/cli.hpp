#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibertwist/catalog.hpp"

namespace fibertwist::cli {

inline constexpr const char* kSchema = "fibertwist/1";

enum Exit { Ok = 0, Mismatch = 1, BadInput = 2 };

struct Result {
    int exit = Ok;
    std::string out;
};

std::vector<Int> parse_list(const std::string& s);  // "2,3,6"

std::string case_to_json(const CaseSpec& c);
CaseSpec case_from_json(const std::string& text);
CaseSpec load_case(const std::string& path);

Result cmd_reduce(const std::vector<Int>& weights, Int degree, bool json);
Result cmd_twist(const TwistInput& t, bool allow_non_fermat, bool json);
Result cmd_strata(const std::vector<Int>& weights, std::optional<Int> degree, bool json);
Result cmd_resolve(Int d, Int a, Int b, Int c, const std::optional<std::vector<Int>>& valuation,
                   const std::optional<std::string>& svg_path, bool json);
Result cmd_census(const CaseSpec& c, bool json);
Result cmd_fiber(const CaseSpec& c, bool json, bool dot);
Result cmd_fiber(const std::string& name, bool json, bool dot);
Result cmd_table(int n, bool json);

int run(int argc, char** argv);

}  // namespace fibertwist::cli
