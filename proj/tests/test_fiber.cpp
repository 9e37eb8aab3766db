#include <gtest/gtest.h>

#include <numeric>

#include "fixtures.hpp"

using namespace fibertwist;

namespace {

// Member of the pencil: V1 collapses to one parameter of weight gcd(k1, k2).
WeightedForm pencil_member(const WeightedForm& X)
{
    std::vector<Int> w{std::gcd(X.weights[0], X.weights[1])};
    for (std::size_t i = 2; i < X.size(); ++i)
        w.push_back(X.weights[i]);
    return reduce_form(WeightedForm(w, X.degree)).result;
}

// Exceptional curves of the member's own A_n points.
Int member_exceptional_curves(const WeightedForm& F)
{
    Int n = 0;
    for (const auto& s : singular_strata(F.weights)) {
        if (s.support.size() < 2)
            continue;
        Locus l = stratum_intersection(F, s);
        if (l.kind == Locus::Kind::Points)
            n += l.count * (s.order - 1);
    }
    return n;
}

bool over_point(const std::string& label)
{
    return label.find('@') != std::string::npos;
}

}  // namespace

TEST(Fiber, GenericCatalog)
{
    EXPECT_EQ(generic_type_by_name("II1").milnor, 22);
    EXPECT_EQ(generic_type_by_name("II1").euler, 2);
    EXPECT_EQ(identify_generic_type(FiberContext::K3, {3, 6, 3}).name, "IV1");
    EXPECT_EQ(identify_generic_type(FiberContext::Elliptic, {2, 3}).name, "II");
    EXPECT_THROW(identify_generic_type(FiberContext::K3, {5, 5, 5}), Error);
}

TEST(Fiber, CensusRowFour)
{
    Census c = generic_census(WeightedForm({1, 2, 3, 6, 6}, 18));
    EXPECT_EQ(c.generic.name, "IV1");
    EXPECT_EQ(c.generic_count, 9);
    EXPECT_EQ(c.star_count(), 1);
    EXPECT_EQ(c.total(), 10);
}

TEST(Fiber, TwistGenericFiberIsPencilMember)
{
    for (const auto& r : table3()) {
        TwistImage img = twist_image(r.input);
        EXPECT_EQ(img.generic_fiber, pencil_member(img.ambient)) << r.row;
        EXPECT_EQ(img.generic_fiber, reduce_form(WeightedForm(r.input.v, r.input.ell)).result) << r.row;
    }
}

TEST(Fiber, EulerBudgetRowFour)
{
    EXPECT_EQ(solve_euler_budget(-144, 24, {{9, 4}, {1, std::nullopt}}), 12);
    EXPECT_TRUE(verify_euler_budget(-144, 24, {{9, 4}, {1, 12}}));
    EXPECT_FALSE(verify_euler_budget(-144, 24, {{9, 4}, {1, 13}}));
    EXPECT_THROW(solve_euler_budget(-144, 24, {{9, std::nullopt}, {1, std::nullopt}}), Error);
}

TEST(Fiber, ResidualOrder)
{
    EXPECT_EQ(residual_monodromy_order(4, 6), 2);
    EXPECT_EQ(residual_monodromy_order(6, 7), 6);
    EXPECT_THROW(residual_monodromy_order(6, 5, 2), Error);
}

TEST(Fiber, EveryBuiltinGraphIsConnected)
{
    for (const auto& b : builtin_cases()) {
        FiberGraph g = assemble_star_fiber(b.spec);
        EXPECT_TRUE(g.connected()) << b.spec.name;
        EXPECT_GT(g.components.size(), 0u);
    }
}

TEST(Fiber, SectionsMatchPencilMemberCurves)
{
    // Sections over base-locus points restrict to the member's exceptional curves.
    for (const auto& b : builtin_cases()) {
        WeightedForm X = b.spec.resolved_ambient();
        if (X.size() != 5)
            continue;
        FiberGraph g = assemble_star_fiber(b.spec);
        Int point_sections = 0;
        for (const auto& s : g.sections)
            point_sections += over_point(s);
        EXPECT_EQ(point_sections, member_exceptional_curves(pencil_member(X))) << b.spec.name;
    }
}

TEST(Fiber, DivisorConservation)
{
    // Every interior junior point and every chain vertex lands in exactly one
    // of: this fiber, the opposite fiber, the sections.
    for (const auto& b : builtin_cases()) {
        const CaseSpec& c = b.spec;
        WeightedForm X = c.resolved_ambient();
        FiberGraph g = assemble_star_fiber(c);
        Int total = 0;
        for (const auto& s : singular_strata(X.weights)) {
            if (s.support.size() < 2)
                continue;
            Locus l = stratum_intersection(X, s);
            QuotientType q = transverse_type(X, s);
            if (s.zero_set.size() == 2) {
                Int copies = l.kind == Locus::Kind::Points ? l.count : 1;
                total += copies * static_cast<Int>(chain_points(q).size());
            } else if (s.zero_set.size() == 3) {
                total += l.count * static_cast<Int>(triangulate(q).interior_count());
            }
        }
        EXPECT_EQ(static_cast<Int>(g.components.size() + g.sections.size() + g.other_fiber.size()), 1 + total)
            << c.name;
    }
}

TEST(Fiber, EulerMatchesStarCatalog)
{
    for (const auto& b : builtin_cases()) {
        FiberGraph g = assemble_star_fiber(b.spec);
        if (b.spec.resolved_ambient().size() == 4)
            EXPECT_EQ(g.euler(), kodaira_star_by_name(b.star).euler) << b.spec.name;
        else
            EXPECT_EQ(g.euler(), star_euler(b.star)->euler) << b.spec.name;
    }
}

TEST(Fiber, IVStarInventory)
{
    auto b = builtin_case("IV1*");
    ASSERT_TRUE(b);
    FiberGraph g = assemble_star_fiber(b->spec);
    EXPECT_EQ(g.components.size(), 3u);
    EXPECT_EQ(g.sections.size(), 4u);
    EXPECT_EQ(g.euler(), 12);
    EXPECT_EQ(b->theta_source, Source::Published);
}

TEST(Fiber, StatedSectionCounts)
{
    // IV1**: each Z8 point gives two exceptional divisors, one a section.
    auto b = builtin_case("IV1**");
    ASSERT_TRUE(b);
    WeightedForm X = b->spec.resolved_ambient();
    for (const auto& s : singular_strata(X.weights))
        if (s.zero_set.size() == 3 && s.order == 8) {
            auto inv = point_inventory(b->spec, s);
            EXPECT_EQ(inv.interior, 2);
            EXPECT_EQ(inv.sections, 1);
        }
    // IX1***: the Z5 curve gives four ruled surfaces, one a section; each
    // Z10 point adds one fiber component.
    b = builtin_case("IX1***");
    ASSERT_TRUE(b);
    X = b->spec.resolved_ambient();
    FiberGraph g = assemble_star_fiber(b->spec);
    for (const auto& s : singular_strata(X.weights)) {
        if (s.zero_set.size() == 2 && s.order == 5) {
            auto q = transverse_type(X, s);
            EXPECT_EQ(chain_points(q).size(), 4u);
        }
        if (s.zero_set.size() == 3 && s.order == 10) {
            auto inv = point_inventory(b->spec, s);
            EXPECT_EQ(inv.fiber, 1);
        }
    }
}

TEST(Fiber, TwoStarCurveSplit)
{
    // (2,3,5,10,10): the Z5 curve's four divisors are one section, one
    // component at the IV1* fiber and two at the IV1** fiber.
    CaseSpec c0 = builtin_case("t3r13.0")->spec;
    CaseSpec ci = builtin_case("t3r13.inf")->spec;
    FiberGraph g0 = assemble_star_fiber(c0), gi = assemble_star_fiber(ci);
    auto count = [](const std::vector<std::string>& v, const std::string& key) {
        Int n = 0;
        for (const auto& s : v)
            n += s.rfind(key, 0) == 0;
        return n;
    };
    auto comps = [&](const FiberGraph& g) {
        std::vector<std::string> v;
        for (const auto& x : g.components)
            v.push_back(x.label);
        return count(v, "E{z1,z2}/5");
    };
    EXPECT_EQ(comps(g0), 1);
    EXPECT_EQ(comps(gi), 2);
    EXPECT_EQ(count(g0.sections, "E{z1,z2}/5"), 1);
    EXPECT_EQ(builtin_case("t3r13.0")->star, "IV1*");
    EXPECT_EQ(builtin_case("t3r13.inf")->star, "IV1**");
}

TEST(Fiber, MissingThetaRejected)
{
    CaseSpec c;
    c.ambient = WeightedForm({1, 2, 3, 6, 6}, 18);
    try {
        assemble_star_fiber(c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::MissingThetaEuler);
    }
}

TEST(Fiber, BudgetMismatchRejected)
{
    CaseSpec c = builtin_case("IV1*")->spec;
    c.budget_euler = 13;
    EXPECT_THROW(assemble_star_fiber(c), Error);
}

TEST(Fiber, JsonAndDot)
{
    FiberGraph g = assemble_star_fiber(builtin_case("IV1*")->spec);
    std::string j = to_json(g);
    for (const char* key : {"\"label\"", "\"kind\"", "\"genus\"", "\"euler\"", "\"edges\"", "\"sections\""})
        EXPECT_NE(j.find(key), std::string::npos) << key;
    EXPECT_EQ(to_json(g), j);
    EXPECT_NE(to_dot(g).find("graph"), std::string::npos);
}
