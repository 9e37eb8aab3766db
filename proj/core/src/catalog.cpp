#include "fibertwist/catalog.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

namespace fibertwist {

const char* to_string(Source s)
{
    return s == Source::Published ? "published" : "derived";
}

Int generator_order(char generator)
{
    switch (generator) {
    case 'A': return 3;
    case 'B': return 4;
    case 'C': return 6;
    }
    throw Error(ErrorCode::InvalidInput, std::string("unknown monodromy generator ") + generator);
}

Int power_order(const MonodromyPower& p)
{
    Int k = generator_order(p.generator);
    return k / std::gcd(k, p.exponent < 0 ? -p.exponent : p.exponent);
}

const std::vector<Table1Row>& table1()
{
    static const std::vector<Table1Row> rows = {
        {1, {{2, 1, 1}, {1, 1, 1}, 3}, {1, 1, 2, 2}, 6, 6, "IV", {}, {}},
        {2, {{2, 1, 1}, {1, 1, 2}, 4}, {1, 1, 2, 4}, 8, 8, "III", {}, {}},
        {3, {{2, 1, 1}, {1, 2, 3}, 6}, {1, 1, 4, 6}, 12, 12, "II", {}, {}},
        {4, {{3, 1, 2}, {1, 1, 2}, 4}, {1, 2, 3, 6}, 12, 6, "III", {"I0*"}, {{'B', -2}}},
        {5, {{3, 1, 2}, {1, 2, 3}, 6}, {1, 2, 6, 9}, 18, 9, "II", {"I0*"}, {{'C', -3}}},
        {6, {{4, 1, 3}, {1, 1, 1}, 3}, {1, 3, 4, 4}, 12, 4, "IV", {"IV*"}, {{'A', -1}}},
        {7, {{4, 1, 3}, {1, 2, 3}, 6}, {1, 3, 8, 12}, 24, 8, "II", {"IV*"}, {{'C', -2}}},
        {8, {{5, 1, 4}, {1, 1, 2}, 4}, {1, 4, 5, 10}, 20, 5, "III", {"III*"}, {{'B', -1}}},
        {9, {{7, 1, 6}, {1, 2, 3}, 6}, {1, 6, 14, 21}, 42, 7, "II", {"II*"}, {{'C', -1}}},
        {10, {{5, 2, 3}, {1, 2, 3}, 6}, {2, 3, 10, 15}, 30, 5, "II", {"IV*", "I0*"}, {{'C', -2}, {'C', -3}}},
        {11, {{11, 5, 6}, {1, 2, 3}, 6}, {5, 6, 22, 33}, 66, 2, "II", {"II*", "II*"}, {{'C', -1}}, false},
    };
    return rows;
}

const std::vector<Table2Row>& table2()
{
    static const std::vector<Table2Row> rows = {
        {"IV1", {6, 3, 3}, 20, 4, 6},     {"III1", {8, 4, 2}, 21, 3, 8},   {"II1", {12, 3, 2}, 22, 2, 12},
        {"IX1", {6, 4, 2}, 15, 9, 12},    {"VIII1", {9, 3, 2}, 16, 8, 18}, {"XII1", {4, 3, 3}, 12, 12, 12},
        {"X1", {8, 3, 2}, 14, 10, 24},    {"XII2", {5, 4, 2}, 12, 12, 20}, {"XII3", {7, 3, 2}, 12, 12, 42},
        {"VI1", {10, 3, 2}, 18, 6, 15},
    };
    return rows;
}

const std::vector<Table3Row>& table3()
{
    static const std::vector<Table3Row> rows = {
        {1, {{2, 1, 1}, {1, 1, 2, 2}, 6}, {1, 1, 2, 4, 4}, 12, -192, 12, "IV1", {}},
        {2, {{2, 1, 1}, {1, 2, 3, 6}, 12}, {1, 1, 4, 6, 12}, 24, -312, 24, "IX1", {}},
        {3, {{2, 1, 1}, {1, 6, 14, 21}, 42}, {1, 1, 12, 28, 42}, 84, -960, 84, "XII3", {}},
        {4, {{3, 1, 2}, {1, 1, 2, 2}, 6}, {1, 2, 3, 6, 6}, 18, -144, 9, "IV1", {"IV1*"}},
        {5, {{3, 1, 2}, {1, 2, 3, 6}, 12}, {1, 2, 6, 9, 18}, 36, -228, 18, "IX1", {"IX1*"}},
        {6, {{3, 1, 2}, {1, 6, 14, 21}, 42}, {1, 2, 18, 42, 63}, 126, -720, 63, "XII3", {"XII3*"}},
        {7, {{4, 1, 3}, {1, 1, 2, 2}, 6}, {1, 3, 4, 8, 8}, 24, -120, 8, "IV1", {"IV1**"}},
        {8, {{4, 1, 3}, {1, 2, 3, 6}, 12}, {1, 3, 8, 12, 24}, 48, -192, 16, "IX1", {"IX1**"}},
        {9, {{4, 1, 3}, {1, 6, 14, 21}, 42}, {1, 3, 24, 56, 84}, 168, -624, 56, "XII3", {"XII3**"}},
        {10, {{5, 1, 4}, {1, 2, 3, 6}, 12}, {1, 4, 10, 15, 30}, 60, -168, 15, "IX1", {"IX1***"}},
        {11, {{7, 1, 6}, {1, 2, 3, 6}, 12}, {1, 6, 14, 21, 42}, 84, -132, 14, "IX1", {"IX1****"}},
        {12, {{7, 1, 6}, {1, 6, 14, 21}, 42}, {1, 6, 42, 98, 147}, 294, -480, 49, "XII3", {"XII3***"}},
        {13, {{5, 2, 3}, {1, 1, 2, 2}, 6}, {2, 3, 5, 10, 10}, 30, -72, 5, "IV1", {"IV1*", "IV1**"}},
        {14, {{5, 2, 3}, {1, 2, 3, 6}, 12}, {2, 3, 10, 15, 30}, 60, -108, 10, "IX1", {"IX1*", "IX1**"}},
        {15, {{5, 2, 3}, {1, 6, 14, 21}, 42}, {2, 3, 30, 70, 105}, 210, -384, 35, "XII3", {"XII3*", "XII3**"}},
    };
    return rows;
}

const std::vector<KnownDiscrepancy>& known_discrepancies()
{
    static const std::vector<KnownDiscrepancy> k = {
        {"IX1**-point-type",
         "Z12 points of (1,3,8,12,24)[48]: weights give 1/12(1,3,8) (gcds 1,3,4; v=11), "
         "published text says 1/12(1,2,9) (gcds 1,2,3; v=10)"},
        {"VI1-relation-order",
         "VI1 (z^10+x^3+y^2): published relation order 15, lcm of exponents is 30"},
    };
    return k;
}

namespace {

struct StarTables {
    std::vector<StarEuler> euler;
    std::map<std::tuple<std::string, std::vector<Int>, Int>, std::string> names;
};

std::tuple<std::string, std::vector<Int>, Int> star_key(const std::string& generic, const WeightedForm& f)
{
    WeightedForm s = f.sorted();
    return {generic, s.weights, s.degree};
}

const StarTables& star_tables()
{
    static const StarTables t = [] {
        const std::map<std::string, Int> published = {{"IV1*", 12}, {"IX1*", 18}};
        StarTables st;
        for (const auto& row : table3()) {
            if (row.stars.size() != 1)
                continue;
            Census c = generic_census(twist_image(row.input));
            for (const auto& loc : c.locations)
                if (loc.star)
                    st.names[star_key(c.generic.name, loc.reduced)] = row.stars[0];
            StarEuler s;
            s.name = row.stars[0];
            s.row = row.row;
            auto it = published.find(s.name);
            if (it != published.end()) {
                s.euler = it->second;
                s.source = Source::Published;
            } else {
                s.euler = solve_euler_budget(row.euler_x, 24, {{c.generic_count, c.generic.euler}, {1, std::nullopt}});
            }
            st.euler.push_back(s);
        }
        std::stable_sort(st.euler.begin(), st.euler.end(),
                         [](const StarEuler& a, const StarEuler& b) { return a.source < b.source; });
        return st;
    }();
    return t;
}

}  // namespace

const std::vector<StarEuler>& star_euler_catalog()
{
    return star_tables().euler;
}

std::optional<StarEuler> star_euler(const std::string& name)
{
    for (const auto& s : star_euler_catalog())
        if (s.name == name)
            return s;
    return std::nullopt;
}

std::optional<std::string> star_name(const std::string& generic, const WeightedForm& reduced_surface)
{
    const auto& names = star_tables().names;
    auto it = names.find(star_key(generic, reduced_surface));
    if (it == names.end())
        return std::nullopt;
    return it->second;
}

const std::vector<BuiltinCase>& builtin_cases()
{
    static const std::vector<BuiltinCase> cases = [] {
        std::vector<BuiltinCase> out;
        for (const auto& row : table1()) {
            if (!row.fermat)
                continue;
            Census c = generic_census(twist_image(row.input));
            for (const auto& loc : c.locations) {
                if (!loc.star)
                    continue;
                BuiltinCase b;
                b.spec.name = "t1r" + std::to_string(row.row) + (loc.location == Location::Zero ? ".0" : ".inf");
                b.spec.twist = row.input;
                b.spec.location = loc.location;
                FiberGraph g = assemble_star_fiber(b.spec);
                b.star = kodaira_star_by_components(static_cast<Int>(g.components.size())).name;
                out.push_back(b);
            }
        }
        for (const auto& row : table3()) {
            Census c = generic_census(twist_image(row.input));
            for (const auto& loc : c.locations) {
                if (!loc.star)
                    continue;
                BuiltinCase b;
                auto name = star_name(c.generic.name, loc.reduced);
                if (!name)
                    throw Error(ErrorCode::UnknownFiberType, "unnamed star fiber in row " + std::to_string(row.row));
                b.star = *name;
                b.spec.name = "t3r" + std::to_string(row.row) + (loc.location == Location::Zero ? ".0" : ".inf");
                b.spec.twist = row.input;
                b.spec.location = loc.location;
                Int e = star_euler(b.star)->euler;
                b.spec.budget_euler = e;
                if (b.star == "IV1*" && row.stars.size() == 1) {
                    b.spec.theta_euler = 12;
                    b.theta_source = Source::Published;
                } else {
                    b.spec.theta_euler = theta_euler_from_budget(b.spec, e);
                }
                out.push_back(b);
            }
        }
        return out;
    }();
    return cases;
}

std::optional<BuiltinCase> builtin_case(const std::string& name)
{
    for (const auto& b : builtin_cases())
        if (b.spec.name == name)
            return b;
    // Threefold star names from single-star rows are unique aliases.
    for (const auto& b : builtin_cases())
        if (b.star == name && b.spec.name.rfind("t3r", 0) == 0) {
            int row = std::stoi(b.spec.name.substr(3));
            if (table3()[row - 1].stars.size() == 1)
                return b;
        }
    return std::nullopt;
}

}  // namespace fibertwist
