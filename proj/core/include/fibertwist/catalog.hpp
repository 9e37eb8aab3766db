#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibertwist/fiber.hpp"

namespace fibertwist {

enum class Source { Published, Derived };
const char* to_string(Source s);

// A listed power g^e of a monodromy generator (A, B, C of orders 3, 4, 6).
struct MonodromyPower {
    char generator = 'C';
    Int exponent = 1;
};
Int generator_order(char generator);
Int power_order(const MonodromyPower& p);

struct Table1Row {
    int row = 0;
    TwistInput input;
    std::vector<Int> weights;
    Int degree = 0;
    Int generic_count = 0;
    std::string generic;
    std::vector<std::string> stars;
    std::vector<MonodromyPower> residuals;  // listed powers, one per distinct star entry
    bool fermat = true;
};

struct Table2Row {
    std::string name;
    std::vector<Int> exponents;
    Int milnor = 0;
    Int euler = 0;
    Int relation_order = 0;
};

struct Table3Row {
    int row = 0;
    TwistInput input;
    std::vector<Int> weights;
    Int degree = 0;
    Int euler_x = 0;
    Int generic_count = 0;
    std::string generic;
    std::vector<std::string> stars;
};

const std::vector<Table1Row>& table1();
const std::vector<Table2Row>& table2();
const std::vector<Table3Row>& table3();

struct KnownDiscrepancy {
    std::string id;
    std::string description;
};
const std::vector<KnownDiscrepancy>& known_discrepancies();

struct StarEuler {
    std::string name;
    Int euler = 0;
    Source source = Source::Derived;
    int row = 0;  // Table 3 row it was fixed by
};
// Threefold star fibers, published values first and the rest solved from
// their single-star rows.
const std::vector<StarEuler>& star_euler_catalog();
std::optional<StarEuler> star_euler(const std::string& name);

// Name a threefold star fiber by its generic type and reduced special surface.
std::optional<std::string> star_name(const std::string& generic, const WeightedForm& reduced_surface);

struct BuiltinCase {
    CaseSpec spec;
    std::string star;  // star fiber name (K3 name or Kodaira symbol)
    Source theta_source = Source::Derived;
};
const std::vector<BuiltinCase>& builtin_cases();
std::optional<BuiltinCase> builtin_case(const std::string& name);

}  // namespace fibertwist
