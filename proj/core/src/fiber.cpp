#include "fibertwist/fiber.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace fibertwist {

namespace {

FiberType make_type(const std::string& name, FiberContext ctx, std::vector<Int> exps, Int order)
{
    FiberType t;
    t.name = name;
    t.context = ctx;
    std::sort(exps.rbegin(), exps.rend());
    t.exponents = exps;
    t.milnor = milnor_number(exps);
    t.euler = ctx == FiberContext::K3 ? 24 - t.milnor : t.milnor;
    t.monodromy_order = order;
    return t;
}

}  // namespace

const std::vector<FiberType>& generic_catalog(FiberContext ctx)
{
    static const std::vector<FiberType> elliptic = {
        make_type("II", FiberContext::Elliptic, {3, 2}, 6),
        make_type("III", FiberContext::Elliptic, {4, 2}, 4),
        make_type("IV", FiberContext::Elliptic, {3, 3}, 3),
    };
    // Monodromy orders are the declared relation orders (VI1 deliberately 15).
    static const std::vector<FiberType> k3 = {
        make_type("IV1", FiberContext::K3, {6, 3, 3}, 6),
        make_type("III1", FiberContext::K3, {8, 4, 2}, 8),
        make_type("II1", FiberContext::K3, {12, 3, 2}, 12),
        make_type("IX1", FiberContext::K3, {6, 4, 2}, 12),
        make_type("VIII1", FiberContext::K3, {9, 3, 2}, 18),
        make_type("XII1", FiberContext::K3, {4, 3, 3}, 12),
        make_type("X1", FiberContext::K3, {8, 3, 2}, 24),
        make_type("XII2", FiberContext::K3, {5, 4, 2}, 20),
        make_type("XII3", FiberContext::K3, {7, 3, 2}, 42),
        make_type("VI1", FiberContext::K3, {10, 3, 2}, 15),
    };
    return ctx == FiberContext::K3 ? k3 : elliptic;
}

FiberType identify_generic_type(FiberContext ctx, std::vector<Int> exponents)
{
    std::sort(exponents.rbegin(), exponents.rend());
    for (const auto& t : generic_catalog(ctx))
        if (t.exponents == exponents)
            return t;
    std::ostringstream os;
    for (Int e : exponents)
        os << e << " ";
    throw Error(ErrorCode::UnknownFiberType, "exponents " + os.str());
}

FiberType generic_type_by_name(const std::string& name)
{
    for (auto ctx : {FiberContext::K3, FiberContext::Elliptic})
        for (const auto& t : generic_catalog(ctx))
            if (t.name == name)
                return t;
    throw Error(ErrorCode::UnknownFiberType, name);
}

const std::vector<KodairaStar>& kodaira_star_catalog()
{
    static const std::vector<KodairaStar> c = {
        {"I0*", 5, 6, 2},
        {"IV*", 7, 8, 3},
        {"III*", 8, 9, 4},
        {"II*", 9, 10, 6},
    };
    return c;
}

const KodairaStar& kodaira_star_by_components(Int components)
{
    for (const auto& k : kodaira_star_catalog())
        if (k.components == components)
            return k;
    throw Error(ErrorCode::UnknownFiberType, "no star fiber with " + std::to_string(components) + " components");
}

const KodairaStar& kodaira_star_by_name(const std::string& name)
{
    for (const auto& k : kodaira_star_catalog())
        if (k.name == name)
            return k;
    throw Error(ErrorCode::UnknownFiberType, name);
}

const char* to_string(Location l)
{
    return l == Location::Zero ? "C0" : "Cinf";
}

std::vector<StarLocation> star_fiber_locations(const WeightedForm& ambient)
{
    if (ambient.size() < 3)
        throw Error(ErrorCode::InvalidInput, "ambient too small for a fibration");
    std::vector<StarLocation> out;
    for (Location loc : {Location::Zero, Location::Infinity}) {
        std::size_t drop = loc == Location::Zero ? 1 : 0;
        std::vector<Int> w;
        for (std::size_t i = 0; i < ambient.size(); ++i)
            if (i != drop)
                w.push_back(ambient.weights[i]);
        StarLocation s;
        s.location = loc;
        s.surface = WeightedForm(w, ambient.degree);
        s.reduced = reduce_form(s.surface).result;
        s.star = !is_calabi_yau(s.reduced);
        out.push_back(s);
    }
    return out;
}

Int Census::star_count() const
{
    return std::count_if(locations.begin(), locations.end(), [](const StarLocation& s) { return s.star; });
}

Census generic_census(const WeightedForm& ambient)
{
    if (!is_fermat(ambient))
        throw Error(ErrorCode::NotFermat, to_string(ambient));
    if (ambient.size() != 4 && ambient.size() != 5)
        throw Error(ErrorCode::InvalidInput, "census needs a surface or threefold ambient");
    Census c;
    c.generic_count = point_count(WeightedForm({ambient.weights[0], ambient.weights[1]}, ambient.degree)).count;
    std::vector<Int> exps;
    for (std::size_t i = 2; i < ambient.size(); ++i)
        exps.push_back(ambient.degree / ambient.weights[i]);
    c.generic = identify_generic_type(ambient.size() == 4 ? FiberContext::Elliptic : FiberContext::K3, exps);
    c.locations = star_fiber_locations(ambient);
    return c;
}

Census generic_census(const TwistImage& img)
{
    return generic_census(img.ambient);
}

Int residual_monodromy_order(Int k, Int generic_count, Int star_count)
{
    if (k < 1 || generic_count < 0)
        throw Error(ErrorCode::InvalidInput, "order and count must be positive");
    if (star_count != 1)
        throw Error(ErrorCode::MultipleResiduals, std::to_string(star_count) + " star fibers");
    return k / std::gcd(generic_count, k);
}

namespace {

void budget_parts(Int e_fiber, const std::vector<BudgetTerm>& terms, Int& known, int& unknown, Int& unknown_count)
{
    Int n = 0;
    known = 0;
    unknown = 0;
    unknown_count = 0;
    for (const auto& t : terms) {
        n += t.count;
        if (t.euler)
            known += t.count * *t.euler;
        else {
            ++unknown;
            unknown_count = t.count;
        }
    }
    known += e_fiber * (2 - n);
}

}  // namespace

Int solve_euler_budget(Int e_total, Int e_fiber, const std::vector<BudgetTerm>& terms)
{
    Int known, unknown_count;
    int unknown;
    budget_parts(e_fiber, terms, known, unknown, unknown_count);
    if (unknown > 1)
        throw Error(ErrorCode::Underdetermined, std::to_string(unknown) + " unknown Euler numbers");
    if (unknown == 0 || unknown_count == 0)
        throw Error(ErrorCode::InvalidInput, "no unknown Euler number to solve for");
    Int rest = e_total - known;
    if (rest % unknown_count != 0)
        throw Error(ErrorCode::InconsistentBudget, "remainder not divisible by the fiber count");
    return rest / unknown_count;
}

bool verify_euler_budget(Int e_total, Int e_fiber, const std::vector<BudgetTerm>& terms)
{
    Int known, unknown_count;
    int unknown;
    budget_parts(e_fiber, terms, known, unknown, unknown_count);
    if (unknown)
        throw Error(ErrorCode::Underdetermined, "verify needs every Euler number");
    return known == e_total;
}

WeightedForm CaseSpec::resolved_ambient() const
{
    if (ambient)
        return *ambient;
    if (twist)
        return twist_image(*twist, true).ambient;
    throw Error(ErrorCode::InvalidInput, "case " + name + " has neither ambient nor twist input");
}

std::vector<Int> CaseSpec::fibration_exponents() const
{
    WeightedForm X = resolved_ambient();
    if (fibration) {
        if (fibration->size() != X.size())
            throw Error(ErrorCode::InvalidInput, "fibration vector length differs from the ambient");
        return *fibration;
    }
    // f = z2^{k1/g} / z1^{k2/g} has weight zero.
    Int k1 = X.weights[0], k2 = X.weights[1], g = std::gcd(k1, k2);
    std::vector<Int> f(X.size(), 0);
    f[0] = -k2 / g;
    f[1] = k1 / g;
    return f;
}

const char* to_string(FiberComponent::Kind k)
{
    switch (k) {
    case FiberComponent::Kind::ProperTransform: return "ProperTransform";
    case FiberComponent::Kind::RuledOverCurve: return "RuledOverCurve";
    case FiberComponent::Kind::PointResolutionDivisor: return "PointResolutionDivisor";
    }
    return "?";
}

Int FiberGraph::euler() const
{
    Int e = triple_points;
    for (const auto& c : components)
        e += c.euler;
    for (const auto& x : edges)
        e -= x.euler;
    return e;
}

bool FiberGraph::connected() const
{
    if (components.empty())
        return false;
    std::vector<int> parent(components.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (const auto& e : edges)
        parent[find(e.a)] = find(e.b);
    int root = find(0);
    for (std::size_t i = 0; i < components.size(); ++i)
        if (find(static_cast<int>(i)) != root)
            return false;
    return true;
}

Int FiberGraph::exceptional_count() const
{
    return static_cast<Int>(components.size()) - 1 + static_cast<Int>(sections.size() + other_fiber.size());
}

namespace {

enum class Class { Fiber, Section, Other };

std::string coords_label(const std::vector<int>& zs)
{
    std::string s = "{";
    for (std::size_t i = 0; i < zs.size(); ++i)
        s += (i ? "," : "") + std::string("z") + std::to_string(zs[i] + 1);
    return s + "}";
}

struct Assembler {
    const CaseSpec& spec;
    WeightedForm X;
    std::vector<Int> f;
    int loc = 0;
    bool threefold = false;
    FiberGraph g;

    // (u, v, num_u/m) on a curve stratum -> component index or -1.
    std::map<std::tuple<int, int, Rational>, int> chain_nodes;

    explicit Assembler(const CaseSpec& c) : spec(c) {}

    Class classify(Int pairing) const
    {
        if (pairing == 0)
            return Class::Section;
        bool negative = pairing < 0;
        return negative == (loc == 0) ? Class::Fiber : Class::Other;
    }

    int add(FiberComponent c)
    {
        g.components.push_back(std::move(c));
        return static_cast<int>(g.components.size()) - 1;
    }

    void file(Class cls, const std::string& label)
    {
        if (cls == Class::Section)
            g.sections.push_back(label);
        else if (cls == Class::Other)
            g.other_fiber.push_back(label);
    }

    int corner(int coord) const { return coord == loc ? 0 : -1; }

    void chain(const Stratum& s)
    {
        Locus l = stratum_intersection(X, s);
        Int copies = threefold ? 1 : l.count;
        QuotientType q = transverse_type(X, s);
        auto pts = chain_points(q);
        int u = s.zero_set[0], v = s.zero_set[1];
        std::string base = "E" + coords_label(s.zero_set) + "/" + std::to_string(q.order);
        for (Int c = 0; c < copies; ++c) {
            std::vector<int> nodes{corner(u)};
            for (const auto& p : pts) {
                std::string label = base + "#" + std::to_string(p.j);
                if (!threefold)
                    label += "@" + std::to_string(c + 1);
                Class cls = classify(f[u] * p.num[0] + f[v] * p.num[1]);
                int node = -1;
                if (cls == Class::Fiber) {
                    FiberComponent fc;
                    fc.label = label;
                    if (threefold) {
                        fc.kind = FiberComponent::Kind::RuledOverCurve;
                        fc.genus = l.genus;
                        fc.euler = 2 * (2 - 2 * l.genus);
                    } else {
                        fc.kind = FiberComponent::Kind::PointResolutionDivisor;
                        fc.euler = 2;
                    }
                    node = add(fc);
                } else {
                    file(cls, label);
                }
                nodes.push_back(node);
                if (threefold)
                    chain_nodes[{u, v, Rational(p.num[0], q.order)}] = node;
            }
            nodes.push_back(corner(v));
            for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
                if (nodes[i] < 0 || nodes[i + 1] < 0)
                    continue;
                FiberEdge e;
                e.a = nodes[i];
                e.b = nodes[i + 1];
                if (threefold) {
                    e.genus = l.genus;
                    e.euler = 2 - 2 * l.genus;
                } else {
                    e.point = true;
                    e.euler = 1;
                }
                g.edges.push_back(e);
            }
        }
    }

    int edge_node(const Stratum& s, const JuniorPoint& p, Int m)
    {
        int a = -1, b = -1;
        for (int i = 0; i < 3; ++i)
            if (i != p.index)
                (a < 0 ? a : b) = i;
        auto it = chain_nodes.find({s.zero_set[a], s.zero_set[b], Rational(p.num[a], m)});
        if (it == chain_nodes.end())
            throw Error(ErrorCode::InvariantViolation, "boundary junior point without a curve divisor");
        return it->second;
    }

    void point(const Stratum& s)
    {
        Locus l = stratum_intersection(X, s);
        QuotientType q = transverse_type(X, s);
        JuniorTriangulation t = triangulate(q);
        std::string base = "E" + coords_label(s.zero_set) + "/" + std::to_string(q.order);
        for (Int c = 0; c < l.count; ++c) {
            std::vector<int> nodes(t.points.size(), -1);
            for (std::size_t i = 0; i < t.points.size(); ++i) {
                const JuniorPoint& p = t.points[i];
                if (p.location == JuniorPoint::Location::Corner) {
                    nodes[i] = corner(s.zero_set[p.index]);
                } else if (p.location == JuniorPoint::Location::Edge) {
                    nodes[i] = edge_node(s, p, q.order);
                } else {
                    Int pairing = 0;
                    for (int k = 0; k < 3; ++k)
                        pairing += f[s.zero_set[k]] * p.num[k];
                    std::string label = base + "#" + std::to_string(p.k) + "@" + std::to_string(c + 1);
                    Class cls = classify(pairing);
                    if (cls == Class::Fiber) {
                        FiberComponent fc;
                        fc.label = label;
                        fc.kind = FiberComponent::Kind::PointResolutionDivisor;
                        fc.euler = t.triangles_at(static_cast<int>(i));
                        nodes[i] = add(fc);
                    } else {
                        file(cls, label);
                    }
                }
            }
            for (auto [a, b] : t.edges()) {
                if (nodes[a] < 0 || nodes[b] < 0)
                    continue;
                bool same_side = false;
                for (int k = 0; k < 3; ++k)
                    if (t.points[a].num[k] == 0 && t.points[b].num[k] == 0)
                        same_side = true;
                if (same_side)
                    continue;  // a curve-level intersection, counted once globally
                FiberEdge e;
                e.a = nodes[a];
                e.b = nodes[b];
                e.euler = 2;
                g.edges.push_back(e);
            }
            for (const auto& tri : t.triangles)
                if (nodes[tri[0]] >= 0 && nodes[tri[1]] >= 0 && nodes[tri[2]] >= 0)
                    ++g.triple_points;
        }
    }

    FiberGraph run(bool need_theta)
    {
        X = spec.resolved_ambient();
        if (!is_fermat(X))
            throw Error(ErrorCode::NotFermat, spec.name + ": " + to_string(X));
        if (X.size() != 4 && X.size() != 5)
            throw Error(ErrorCode::InvalidInput, "star fibers need a surface or threefold ambient");
        threefold = X.size() == 5;
        f = spec.fibration_exponents();
        loc = spec.location == Location::Infinity ? 0 : 1;
        if (classify(f[loc]) != Class::Fiber)
            throw Error(ErrorCode::InvalidInput, "fibration vector does not vanish on the chosen location");
        g.name = spec.name;
        g.location = spec.location;

        FiberComponent theta;
        theta.label = "Theta";
        theta.kind = FiberComponent::Kind::ProperTransform;
        std::vector<Int> cw;
        for (std::size_t i = 0; i < X.size(); ++i)
            if (static_cast<int>(i) != loc)
                cw.push_back(X.weights[i]);
        if (!threefold) {
            theta.genus = curve_genus(WeightedForm(cw, X.degree));
            theta.euler = 2 - 2 * theta.genus;
        } else if (spec.theta_euler) {
            theta.euler = *spec.theta_euler;
        } else if (need_theta) {
            throw Error(ErrorCode::MissingThetaEuler, spec.name);
        }
        add(theta);

        auto strata = singular_strata(X.weights);
        for (const auto& s : strata)
            if (s.zero_set.size() == 2)
                chain(s);
        if (threefold)
            for (const auto& s : strata)
                if (s.zero_set.size() == 3)
                    point(s);
        return g;
    }
};

}  // namespace

FiberGraph assemble_star_fiber(const CaseSpec& c)
{
    FiberGraph g = Assembler(c).run(true);
    if (c.budget_euler && g.euler() != *c.budget_euler)
        throw Error(ErrorCode::InconsistentBudget,
                    c.name + ": graph Euler " + std::to_string(g.euler()) + " vs budget " + std::to_string(*c.budget_euler));
    return g;
}

Int theta_euler_from_budget(const CaseSpec& c, Int star_euler)
{
    CaseSpec copy = c;
    copy.theta_euler = 0;
    copy.budget_euler.reset();
    return star_euler - Assembler(copy).run(true).euler();
}

PointInventory point_inventory(const CaseSpec& c, const Stratum& s, const std::optional<QuotientType>& type)
{
    if (s.zero_set.size() != 3)
        throw Error(ErrorCode::InvalidInput, "inventory needs a point stratum of a threefold");
    WeightedForm X = c.resolved_ambient();
    auto f = c.fibration_exponents();
    int loc = c.location == Location::Infinity ? 0 : 1;
    PointInventory inv;
    inv.stratum = s;
    inv.type = type ? *type : transverse_type(X, s);
    inv.points = stratum_intersection(X, s).count;
    for (const auto& p : junior_points(inv.type)) {
        if (p.location != JuniorPoint::Location::Interior)
            continue;
        ++inv.interior;
        Int pairing = 0;
        for (int k = 0; k < 3; ++k)
            pairing += f[s.zero_set[k]] * p.num[k];
        if (pairing == 0)
            ++inv.sections;
        else if ((pairing < 0) == (loc == 0))
            ++inv.fiber;
        else
            ++inv.other;
    }
    return inv;
}

std::string to_json(const FiberGraph& g)
{
    nlohmann::json j;
    j["name"] = g.name;
    j["location"] = to_string(g.location);
    j["euler"] = g.euler();
    j["triple_points"] = g.triple_points;
    j["components"] = nlohmann::json::array();
    for (const auto& c : g.components)
        j["components"].push_back({{"label", c.label}, {"kind", to_string(c.kind)}, {"genus", c.genus}, {"euler", c.euler}});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges)
        j["edges"].push_back({{"a", g.components[e.a].label},
                              {"b", g.components[e.b].label},
                              {"kind", e.point ? "point" : "curve"},
                              {"genus", e.genus},
                              {"euler", e.euler}});
    j["sections"] = g.sections;
    j["other_fiber"] = g.other_fiber;
    return j.dump(2);
}

std::string to_dot(const FiberGraph& g)
{
    std::ostringstream os;
    os << "graph \"" << g.name << "\" {\n";
    for (const auto& c : g.components) {
        os << "  \"" << c.label << "\" [shape=" << (c.kind == FiberComponent::Kind::ProperTransform ? "box" : "ellipse")
           << ", label=\"" << c.label << "\\ne=" << c.euler << "\"];\n";
    }
    for (const auto& s : g.sections)
        os << "  \"" << s << "\" [style=dashed];\n";
    for (const auto& e : g.edges)
        os << "  \"" << g.components[e.a].label << "\" -- \"" << g.components[e.b].label << "\""
           << (e.point ? "" : " [label=\"g=" + std::to_string(e.genus) + "\"]") << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace fibertwist
