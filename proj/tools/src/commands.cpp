#include "fibertwist/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "json.hpp"

namespace fibertwist::cli {

using nlohmann::json;

namespace {

json form_json(const WeightedForm& f)
{
    return {{"weights", f.weights}, {"degree", f.degree}};
}

std::string list(const std::vector<Int>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::string rational(const Rational& r)
{
    return r.denominator() == 1 ? std::to_string(r.numerator())
                                : std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Result emit(json j, int exit = Ok)
{
    j["schema"] = kSchema;
    return {exit, j.dump(2) + "\n"};
}

// Reference component/section counts for the threefold star fibers.
struct ReferenceCount {
    std::string star;
    std::optional<Int> components;
    std::optional<Int> sections;
};

const std::vector<ReferenceCount>& reference_counts()
{
    static const std::vector<ReferenceCount> f = {
        {"IV1*", 3, 4},
        {"IX1***", 16, std::nullopt},
        {"IX1****", 26, std::nullopt},
        {"XII3***", 33, std::nullopt},
    };
    return f;
}

std::string star_of(const CaseSpec& c, const FiberGraph& g)
{
    WeightedForm X = c.resolved_ambient();
    if (X.size() == 4)
        return kodaira_star_by_components(static_cast<Int>(g.components.size())).name;
    Census census = generic_census(X);
    for (const auto& loc : census.locations)
        if (loc.location == c.location)
            if (auto n = star_name(census.generic.name, loc.reduced))
                return *n;
    return "?";
}

}  // namespace

std::vector<Int> parse_list(const std::string& s)
{
    std::vector<Int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t pos = 0;
        Int x;
        try {
            x = std::stoll(item, &pos);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidInput, "not an integer list: " + s);
        }
        if (pos != item.size())
            throw Error(ErrorCode::InvalidInput, "not an integer list: " + s);
        out.push_back(x);
    }
    if (out.empty())
        throw Error(ErrorCode::InvalidInput, "empty list");
    return out;
}

std::string case_to_json(const CaseSpec& c)
{
    json j;
    j["schema"] = kSchema;
    j["name"] = c.name;
    if (c.twist)
        j["twist"] = {{"w", c.twist->w}, {"v", c.twist->v}, {"ell", c.twist->ell}};
    if (c.ambient)
        j["ambient"] = form_json(*c.ambient);
    j["location"] = to_string(c.location);
    if (c.theta_euler)
        j["theta_euler"] = *c.theta_euler;
    if (c.fibration)
        j["fibration"] = *c.fibration;
    if (c.budget_euler)
        j["budget_euler"] = *c.budget_euler;
    if (!c.note.empty())
        j["note"] = c.note;
    return j.dump(2) + "\n";
}

CaseSpec case_from_json(const std::string& text)
{
    CaseSpec c;
    try {
        json j = json::parse(text);
        if (j.value("schema", std::string(kSchema)) != kSchema)
            throw Error(ErrorCode::InvalidInput, "unsupported schema " + j["schema"].get<std::string>());
        c.name = j.value("name", std::string());
        if (j.contains("twist"))
            c.twist = TwistInput{j["twist"]["w"].get<std::vector<Int>>(), j["twist"]["v"].get<std::vector<Int>>(),
                                 j["twist"]["ell"].get<Int>()};
        if (j.contains("ambient"))
            c.ambient = WeightedForm(j["ambient"]["weights"].get<std::vector<Int>>(), j["ambient"]["degree"].get<Int>());
        std::string loc = j.value("location", std::string("Cinf"));
        if (loc == "C0")
            c.location = Location::Zero;
        else if (loc == "Cinf")
            c.location = Location::Infinity;
        else
            throw Error(ErrorCode::InvalidInput, "location must be C0 or Cinf");
        if (j.contains("theta_euler"))
            c.theta_euler = j["theta_euler"].get<Int>();
        if (j.contains("fibration"))
            c.fibration = j["fibration"].get<std::vector<Int>>();
        if (j.contains("budget_euler"))
            c.budget_euler = j["budget_euler"].get<Int>();
        c.note = j.value("note", std::string());
    } catch (const json::exception& e) {
        throw Error(ErrorCode::InvalidInput, std::string("case file: ") + e.what());
    }
    if (!c.twist && !c.ambient)
        throw Error(ErrorCode::InvalidInput, "case needs a twist or an ambient form");
    return c;
}

CaseSpec load_case(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::InvalidInput, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return case_from_json(ss.str());
}

Result cmd_reduce(const std::vector<Int>& weights, Int degree, bool json_out)
{
    Reduction r = reduce_form(WeightedForm(weights, degree));
    if (!json_out)
        return {Ok, r.chain() + "\n"};
    json j;
    j["input"] = form_json(r.start);
    j["result"] = form_json(r.result);
    j["chain"] = json::array();
    for (const auto& f : r.links())
        j["chain"].push_back(to_string(f));
    j["steps"] = json::array();
    for (const auto& s : r.steps)
        j["steps"].push_back({{"rule", s.rule == ReductionStep::Rule::DivideAll ? "DivideAll" : "DivideAllButOne"},
                              {"index", s.index},
                              {"prime", s.prime}});
    return emit(j);
}

Result cmd_twist(const TwistInput& t, bool allow_non_fermat, bool json_out)
{
    TwistImage img = twist_image(t, allow_non_fermat);
    auto ex = twist_exponent_table(t);
    if (json_out) {
        json j;
        j["image"] = form_json(img.ambient);
        j["quotient_degree"] = img.quotient_degree;
        j["calabi_yau"] = img.calabi_yau;
        j["fermat"] = img.fermat;
        j["base_pair"] = {img.k1, img.k2};
        if (img.fermat)
            j["generic_fiber"] = form_json(img.generic_fiber);
        j["exponents"] = json::array();
        for (const auto& r : ex)
            j["exponents"].push_back(rational(r));
        return emit(j);
    }
    std::ostringstream os;
    os << "image          " << to_string(img.ambient) << "\n";
    os << "quotient deg   " << img.quotient_degree << "\n";
    os << "calabi-yau     " << (img.calabi_yau ? "yes" : "no") << "\n";
    os << "base pair      (" << img.k1 << "," << img.k2 << ")\n";
    if (img.fermat)
        os << "generic fiber  " << to_string(img.generic_fiber) << "\n";
    else
        os << "generic fiber  (no Fermat member)\n";
    os << "exponents     ";
    for (const auto& r : ex)
        os << " " << rational(r);
    os << "\n";
    return {Ok, os.str()};
}

Result cmd_strata(const std::vector<Int>& weights, std::optional<Int> degree, bool json_out)
{
    auto strata = singular_strata(weights);
    json arr = json::array();
    std::ostringstream os;
    std::optional<WeightedForm> X;
    if (degree)
        X = WeightedForm(weights, *degree);
    for (const auto& s : strata) {
        std::vector<Int> sw;
        for (int i : s.support)
            sw.push_back(weights.at(i));
        json j = {{"stratum", to_string(s)}, {"order", s.order}, {"dim", s.dim()}, {"support_weights", sw}};
        os << to_string(s) << "  support (" << list(sw) << ")";
        if (X && s.support.size() >= 2) {
            Locus l = stratum_intersection(*X, s);
            QuotientType q = transverse_type(*X, s);
            j["transverse"] = to_string(q);
            j["canonical"] = to_string(canonical_sing_type(q));
            switch (l.kind) {
            case Locus::Kind::Points:
                j["points"] = l.count;
                os << "  -> " << l.count << " point(s) " << to_string(q);
                break;
            case Locus::Kind::Curve:
                j["curve"] = form_json(l.reduced);
                j["genus"] = l.genus;
                os << "  -> curve " << to_string(l.reduced) << " g=" << l.genus << " transverse " << to_string(q);
                break;
            case Locus::Kind::Surface:
                j["surface"] = form_json(l.reduced);
                j["calabi_yau"] = l.calabi_yau;
                os << "  -> surface " << to_string(l.reduced);
                break;
            }
        } else if (X) {
            os << "  -> empty on X";
            j["empty"] = true;
        }
        os << "\n";
        arr.push_back(j);
    }
    if (json_out)
        return emit({{"weights", weights}, {"strata", arr}});
    if (strata.empty())
        os << "no singular strata\n";
    return {Ok, os.str()};
}

Result cmd_resolve(Int d, Int a, Int b, Int c, const std::optional<std::vector<Int>>& valuation,
                   const std::optional<std::string>& svg_path, bool json_out)
{
    QuotientType q(d, {a, b, c});
    LemmaCounts lc = lemma_counts(q);
    JuniorTriangulation t = triangulate(q);
    LemmaCounts tc = t.counts();
    auto split = t.boundary_split();
    std::vector<bool> circled(t.points.size(), false);
    std::optional<Int> sections;
    if (valuation) {
        if (valuation->size() != 3)
            throw Error(ErrorCode::InvalidInput, "valuation needs three entries");
        sections = 0;
        for (std::size_t i = 0; i < t.points.size(); ++i) {
            const auto& p = t.points[i];
            if (p.location == JuniorPoint::Location::Corner)
                continue;
            Int s = 0;
            for (int k = 0; k < 3; ++k)
                s += (*valuation)[k] * p.num[k];
            if (s == 0) {
                circled[i] = true;
                ++*sections;
            }
        }
    }
    if (svg_path) {
        std::ofstream out(*svg_path);
        if (!out)
            throw Error(ErrorCode::InvalidInput, "cannot write " + *svg_path);
        out << triangulation_svg(t, circled, {"κ1", "κ2", "κ3"});
    }
    int exit = lc == tc ? Ok : Mismatch;
    if (json_out) {
        json j = {{"type", to_string(q)},
                  {"canonical", to_string(canonical_sing_type(q))},
                  {"gcds", q.gcds()},
                  {"lemma", {{"v", lc.v}, {"e", lc.e}, {"s", lc.s}}},
                  {"triangulation", {{"v", tc.v}, {"e", tc.e}, {"s", tc.s}}},
                  {"boundary_split", split},
                  {"interior", t.interior_count()}};
        if (sections)
            j["section_vertices"] = *sections;
        return emit(j, exit);
    }
    std::ostringstream os;
    os << to_string(q) << "  (canonical " << to_string(canonical_sing_type(q)) << ", gcds " << list(q.gcds()) << ")\n";
    os << "lemma          v=" << lc.v << " e=" << lc.e << " s=" << lc.s << "\n";
    os << "triangulation  v=" << tc.v << " e=" << tc.e << " s=" << tc.s << (exit == Ok ? "" : "  MISMATCH") << "\n";
    os << "boundary       " << split[0] << "+" << split[1] << "+" << split[2] << " edge points, " << t.interior_count()
       << " interior\n";
    if (sections)
        os << "sections       " << *sections << " vertices\n";
    return {exit, os.str()};
}

Result cmd_census(const CaseSpec& c, bool json_out)
{
    WeightedForm X = c.resolved_ambient();
    Census census = generic_census(X);
    json stars = json::array();
    std::ostringstream os;
    os << "ambient   " << to_string(X) << "\n";
    os << "generic   " << census.generic_count << " x " << census.generic.name << " (e=" << census.generic.euler
       << ", order " << census.generic.monodromy_order << ")\n";
    for (const auto& loc : census.locations) {
        json j = {{"location", to_string(loc.location)},
                  {"surface", to_string(loc.surface)},
                  {"reduced", to_string(loc.reduced)},
                  {"star", loc.star}};
        os << to_string(loc.location) << "  " << to_string(loc.surface) << " -> " << to_string(loc.reduced);
        if (loc.star) {
            CaseSpec sc = c;
            sc.location = loc.location;
            std::string name;
            if (X.size() == 4) {
                FiberGraph g = assemble_star_fiber(sc);
                const auto& k = kodaira_star_by_components(static_cast<Int>(g.components.size()));
                name = k.name;
                j["local_order"] = k.monodromy_order;
            } else if (auto n = star_name(census.generic.name, loc.reduced)) {
                name = *n;
            }
            j["name"] = name;
            os << "  star " << (name.empty() ? "(unnamed)" : name);
        } else {
            os << "  smooth";
        }
        os << "\n";
        stars.push_back(j);
    }
    json j = {{"ambient", form_json(X)},
              {"generic", census.generic.name},
              {"generic_count", census.generic_count},
              {"locations", stars},
              {"total", census.total()}};
    if (census.star_count() == 1) {
        Int r = residual_monodromy_order(census.generic.monodromy_order, census.generic_count);
        j["residual_order"] = r;
        os << "residual  order " << r << "\n";
    }
    if (json_out)
        return emit(j);
    return {Ok, os.str()};
}

Result cmd_fiber(const CaseSpec& c, bool json_out, bool dot)
{
    FiberGraph g = assemble_star_fiber(c);
    std::string star = star_of(c, g);
    std::vector<std::string> diffs;
    for (const auto& f : reference_counts()) {
        if (f.star != star || c.resolved_ambient().size() != 5)
            continue;
        // Reference counts describe the single-star rows.
        auto b = builtin_case(star);
        if (!b || b->spec.resolved_ambient() != c.resolved_ambient())
            continue;
        if (f.components && *f.components != static_cast<Int>(g.components.size()))
            diffs.push_back("components: computed " + std::to_string(g.components.size()) + ", published " +
                            std::to_string(*f.components));
        if (f.sections && *f.sections != static_cast<Int>(g.sections.size()))
            diffs.push_back("sections: computed " + std::to_string(g.sections.size()) + ", published " +
                            std::to_string(*f.sections));
    }
    std::vector<std::string> notes;
    if (star == "IX1**") {
        // Show the Z12 inventory under both candidate types.
        WeightedForm X = c.resolved_ambient();
        for (const auto& s : singular_strata(X.weights)) {
            if (s.zero_set.size() != 3 || s.order != 12)
                continue;
            auto ours = point_inventory(c, s);
            auto theirs = point_inventory(c, s, QuotientType(12, {1, 2, 9}));
            auto note = [](const PointInventory& p) {
                return to_string(p.type) + ": " + std::to_string(p.interior) + " interior divisors per point, gcds " +
                       list(p.type.gcds());
            };
            notes.push_back("known-discrepancy IX1**-point-type");
            notes.push_back("computed " + note(ours) + " (" + std::to_string(ours.fiber) + " fiber, " +
                            std::to_string(ours.sections) + " sections)");
            notes.push_back("published " + note(theirs));
        }
    }
    int exit = diffs.empty() ? Ok : Mismatch;
    if (dot)
        return {exit, to_dot(g)};
    if (json_out) {
        json j = json::parse(to_json(g));
        j["star"] = star;
        j["component_count"] = g.components.size();
        j["section_count"] = g.sections.size();
        j["mismatches"] = diffs;
        j["notes"] = notes;
        return emit(j, exit);
    }
    std::ostringstream os;
    os << g.name << " (" << star << " at " << to_string(g.location) << ")\n";
    os << "components " << g.components.size() << ", sections " << g.sections.size() << ", euler " << g.euler()
       << ", triple points " << g.triple_points << "\n";
    for (const auto& comp : g.components)
        os << "  " << comp.label << "  " << to_string(comp.kind) << "  g=" << comp.genus << "  e=" << comp.euler << "\n";
    if (!g.sections.empty()) {
        os << "sections:";
        for (const auto& s : g.sections)
            os << " " << s;
        os << "\n";
    }
    for (const auto& d : diffs)
        os << "MISMATCH " << d << "\n";
    for (const auto& n : notes)
        os << "note: " << n << "\n";
    return {exit, os.str()};
}

Result cmd_fiber(const std::string& name, bool json_out, bool dot)
{
    auto b = builtin_case(name);
    if (!b)
        throw Error(ErrorCode::InvalidInput, "unknown case " + name);
    return cmd_fiber(b->spec, json_out, dot);
}

}  // namespace fibertwist::cli

namespace fibertwist::cli {

namespace {

struct Cell {
    std::string column;
    std::string published;
    std::string derived;
    std::string note;
    bool ok() const { return published == derived || !note.empty(); }
};

std::string discrepancy_for(const std::string& key)
{
    for (const auto& k : known_discrepancies())
        if (k.id == key)
            return k.id;
    return {};
}

std::string join(const std::vector<std::string>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (i ? "," : "") + v[i];
    return s.empty() ? "-" : s;
}

std::vector<std::string> derived_stars(const WeightedForm& X, const Census& census)
{
    std::vector<std::string> names;
    for (const auto& loc : census.locations) {
        if (!loc.star)
            continue;
        if (X.size() == 4) {
            CaseSpec c;
            c.ambient = X;
            c.location = loc.location;
            FiberGraph g = assemble_star_fiber(c);
            names.push_back(kodaira_star_by_components(static_cast<Int>(g.components.size())).name);
        } else {
            names.push_back(star_name(census.generic.name, loc.reduced).value_or("?"));
        }
    }
    return names;
}

std::vector<std::string> sorted(std::vector<std::string> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<std::vector<Cell>> table1_cells(std::vector<int>& rows)
{
    std::vector<std::vector<Cell>> out;
    for (const auto& r : table1()) {
        rows.push_back(r.row);
        std::vector<Cell> cells;
        TwistImage img = twist_image(r.input, !r.fermat);
        cells.push_back({"image", to_string(WeightedForm(r.weights, r.degree)), to_string(img.ambient), ""});
        if (!r.fermat) {
            cells.push_back({"fermat", "no", img.fermat ? "yes" : "no", ""});
            out.push_back(cells);
            continue;
        }
        Census c = generic_census(img);
        cells.push_back({"N", std::to_string(r.generic_count), std::to_string(c.generic_count), ""});
        cells.push_back({"generic", r.generic, c.generic.name, ""});
        auto stars = derived_stars(img.ambient, c);
        cells.push_back({"stars", join(sorted(r.stars)), join(sorted(stars)), ""});
        std::vector<std::string> pub, der;
        for (const auto& p : r.residuals)
            pub.push_back(std::to_string(power_order(p)));
        if (stars.size() == 1) {
            der.push_back(std::to_string(residual_monodromy_order(c.generic.monodromy_order, c.generic_count)));
        } else {
            for (const auto& s : r.stars)
                der.push_back(std::to_string(kodaira_star_by_name(s).monodromy_order));
            // a repeated star type is listed once
            std::sort(der.begin(), der.end());
            der.erase(std::unique(der.begin(), der.end()), der.end());
            std::sort(pub.begin(), pub.end());
        }
        cells.push_back({"residual order", join(pub), join(der), ""});
        out.push_back(cells);
    }
    return out;
}

std::vector<std::vector<Cell>> table2_cells(std::vector<int>& rows)
{
    std::vector<std::vector<Cell>> out;
    int i = 0;
    for (const auto& r : table2()) {
        rows.push_back(++i);
        FiberType t = identify_generic_type(FiberContext::K3, r.exponents);
        std::vector<Cell> cells;
        cells.push_back({"name", r.name, t.name, ""});
        cells.push_back({"milnor", std::to_string(r.milnor), std::to_string(t.milnor), ""});
        cells.push_back({"euler", std::to_string(r.euler), std::to_string(t.euler), ""});
        Int l = lcm_of(r.exponents);
        std::string note = l == r.relation_order ? "" : discrepancy_for(r.name + "-relation-order");
        cells.push_back({"relation order", std::to_string(r.relation_order), std::to_string(l), note});
        out.push_back(cells);
    }
    return out;
}

std::vector<std::vector<Cell>> table3_cells(std::vector<int>& rows)
{
    std::vector<std::vector<Cell>> out;
    for (const auto& r : table3()) {
        rows.push_back(r.row);
        std::vector<Cell> cells;
        TwistImage img = twist_image(r.input);
        cells.push_back({"image", to_string(WeightedForm(r.weights, r.degree)), to_string(img.ambient), ""});
        cells.push_back({"calabi-yau", "yes", img.calabi_yau ? "yes" : "no", ""});
        Census c = generic_census(img);
        cells.push_back({"N", std::to_string(r.generic_count), std::to_string(c.generic_count), ""});
        cells.push_back({"generic", r.generic, c.generic.name, ""});
        auto stars = derived_stars(img.ambient, c);
        cells.push_back({"stars", join(sorted(r.stars)), join(sorted(stars)), ""});
        // Single-star rows fix their star's value; multi-star rows are a check.
        std::vector<BudgetTerm> terms = {{c.generic_count, c.generic.euler}};
        bool all = stars.size() > 1;
        for (const auto& s : stars) {
            auto e = star_euler(s);
            all = all && e.has_value();
            terms.push_back({1, e ? std::optional<Int>(e->euler) : std::nullopt});
        }
        if (all) {
            Int e = 24 * (2 - c.generic_count - static_cast<Int>(stars.size()));
            for (const auto& t : terms)
                e += t.count * *t.euler;
            cells.push_back({"euler", std::to_string(r.euler_x), std::to_string(e), ""});
        }
        out.push_back(cells);
    }
    return out;
}

}  // namespace

Result cmd_table(int n, bool json_out)
{
    std::vector<int> rows;
    std::vector<std::vector<Cell>> cells;
    switch (n) {
    case 1: cells = table1_cells(rows); break;
    case 2: cells = table2_cells(rows); break;
    case 3: cells = table3_cells(rows); break;
    default: throw Error(ErrorCode::InvalidInput, "table must be 1, 2 or 3");
    }
    bool ok = true;
    json arr = json::array();
    std::ostringstream os;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        json jr = {{"row", rows[i]}, {"cells", json::array()}};
        os << "row " << rows[i] << "\n";
        for (const auto& c : cells[i]) {
            ok = ok && c.ok();
            json jc = {{"column", c.column}, {"published", c.published}, {"derived", c.derived}, {"match", c.published == c.derived}};
            if (!c.note.empty())
                jc["known_discrepancy"] = c.note;
            jr["cells"].push_back(jc);
            os << "  " << (c.published == c.derived ? "  " : c.note.empty() ? "!!" : "~~") << " " << c.column << ": "
               << c.derived;
            if (c.published != c.derived)
                os << " (published " << c.published << (c.note.empty() ? "" : "; known " + c.note) << ")";
            os << "\n";
        }
        arr.push_back(jr);
    }
    int exit = ok ? Ok : Mismatch;
    if (json_out)
        return emit({{"table", n}, {"rows", arr}, {"match", ok}}, exit);
    return {exit, os.str()};
}

}  // namespace fibertwist::cli
