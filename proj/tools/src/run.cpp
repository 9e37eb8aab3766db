#include <iostream>

#include "CLI11.hpp"
#include "fibertwist/cli.hpp"

namespace fibertwist::cli {

int run(int argc, char** argv)
{
    CLI::App app{"Weighted Fermat forms, twist maps and star fibers"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output");

    std::string weights, pair;
    Int degree = 0;
    auto* reduce = app.add_subcommand("reduce", "reduce a weighted form to well-formed shape");
    reduce->add_option("weights", weights, "comma-separated weights")->required();
    reduce->add_option("degree", degree)->required();

    std::string w, v;
    Int ell = 0;
    bool allow_non_fermat = false;
    auto* twist = app.add_subcommand("twist", "image of the twist map");
    twist->add_option("w", w, "first weight system w0,w1,...")->required();
    twist->add_option("v", v, "second weight system v0,v1,...")->required();
    twist->add_option("ell", ell)->required();
    twist->add_flag("--allow-non-fermat", allow_non_fermat);

    std::optional<Int> strata_degree;
    auto* strata = app.add_subcommand("strata", "singular strata of a weighted space");
    strata->add_option("weights", weights)->required();
    strata->add_option("degree", strata_degree, "hypersurface degree");

    std::string type, valuation, svg;
    auto* resolve = app.add_subcommand("resolve", "junior simplex triangulation of 1/d(a,b,c)");
    resolve->add_option("type", type, "d,a,b,c")->required();
    resolve->add_option("--valuation", valuation, "pairing vector a,b,c; circles its zeros");
    resolve->add_option("--svg", svg, "write the triangulation picture");

    std::string case_path, case_name;
    auto* census = app.add_subcommand("census", "generic and star fibers of a fibration");
    auto* census_group = census->add_option_group("source");
    census_group->add_option("--case", case_path, "case file (JSON)");
    census_group->add_option("name", case_name, "built-in case");
    census_group->require_option(1);

    bool dot = false;
    auto* fiber = app.add_subcommand("fiber", "dual graph of a star fiber");
    auto* fiber_group = fiber->add_option_group("source");
    fiber_group->add_option("--case", case_path, "case file (JSON)");
    fiber_group->add_option("name", case_name, "built-in case or star name");
    fiber_group->require_option(1);
    fiber->add_flag("--dot", dot, "Graphviz output");

    int table_no = 0;
    auto* table = app.add_subcommand("table", "recompute a table against published data");
    table->add_option("n", table_no)->required()->check(CLI::Range(1, 3));

    auto* cases = app.add_subcommand("cases", "list built-in cases");

    for (auto* sub : app.get_subcommands({}))
        sub->add_flag("--json", json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? Ok : BadInput;
    }

    auto case_spec = [&]() -> CaseSpec {
        if (!case_path.empty())
            return load_case(case_path);
        auto b = builtin_case(case_name);
        if (!b)
            throw Error(ErrorCode::InvalidInput, "unknown case " + case_name);
        return b->spec;
    };

    try {
        Result r;
        if (*reduce) {
            r = cmd_reduce(parse_list(weights), degree, json);
        } else if (*twist) {
            auto wl = parse_list(w), vl = parse_list(v);
            r = cmd_twist(TwistInput{wl, vl, ell}, allow_non_fermat, json);
        } else if (*strata) {
            r = cmd_strata(parse_list(weights), strata_degree, json);
        } else if (*resolve) {
            auto t = parse_list(type);
            if (t.size() != 4)
                throw Error(ErrorCode::InvalidInput, "type needs d,a,b,c");
            std::optional<std::vector<Int>> val;
            if (!valuation.empty())
                val = parse_list(valuation);
            r = cmd_resolve(t[0], t[1], t[2], t[3], val, svg.empty() ? std::nullopt : std::optional(svg), json);
        } else if (*census) {
            r = cmd_census(case_spec(), json);
        } else if (*fiber) {
            r = cmd_fiber(case_spec(), json, dot);
        } else if (*table) {
            r = cmd_table(table_no, json);
        } else if (*cases) {
            for (const auto& b : builtin_cases())
                r.out += b.spec.name + "  " + b.star + "\n";
        }
        std::cout << r.out;
        return r.exit;
    } catch (const Error& e) {
        std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
        return BadInput;
    }
}

}  // namespace fibertwist::cli
