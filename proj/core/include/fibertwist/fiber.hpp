#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibertwist/singloc.hpp"
#include "fibertwist/toric.hpp"
#include "fibertwist/twist.hpp"

namespace fibertwist {

enum class FiberContext { Elliptic, K3 };

struct FiberType {
    std::string name;
    FiberContext context = FiberContext::K3;
    std::vector<Int> exponents;  // descending
    Int milnor = 0;
    Int euler = 0;
    Int monodromy_order = 0;
};

// Generic fibers: affine Brieskorn models sum z_i^{n_i} = 0.
const std::vector<FiberType>& generic_catalog(FiberContext ctx);
FiberType identify_generic_type(FiberContext ctx, std::vector<Int> exponents);
FiberType generic_type_by_name(const std::string& name);

struct KodairaStar {
    std::string name;
    Int components = 0;
    Int euler = 0;
    Int monodromy_order = 0;
};
const std::vector<KodairaStar>& kodaira_star_catalog();
const KodairaStar& kodaira_star_by_components(Int components);
const KodairaStar& kodaira_star_by_name(const std::string& name);

enum class Location { Zero, Infinity };
const char* to_string(Location l);

struct StarLocation {
    Location location = Location::Infinity;
    WeightedForm surface;  // Fermat form of C_loc
    WeightedForm reduced;
    bool star = false;
};

// C0 = {z2 = 0}, C_inf = {z1 = 0}; in that order.
std::vector<StarLocation> star_fiber_locations(const WeightedForm& ambient);

struct Census {
    FiberType generic;
    Int generic_count = 0;
    std::vector<StarLocation> locations;
    Int star_count() const;
    Int total() const { return generic_count + star_count(); }
};

Census generic_census(const WeightedForm& ambient);
Census generic_census(const TwistImage& img);

Int residual_monodromy_order(Int k, Int generic_count, Int star_count = 1);

struct BudgetTerm {
    Int count = 0;
    std::optional<Int> euler;
};

// e_total = e_fiber * (2 - sum counts) + sum count * euler.
Int solve_euler_budget(Int e_total, Int e_fiber, const std::vector<BudgetTerm>& terms);
bool verify_euler_budget(Int e_total, Int e_fiber, const std::vector<BudgetTerm>& terms);

struct CaseSpec {
    std::string name;
    std::optional<TwistInput> twist;
    std::optional<WeightedForm> ambient;
    Location location = Location::Infinity;
    std::optional<Int> theta_euler;
    std::optional<std::vector<Int>> fibration;  // exponent vector of the fibration function
    std::optional<Int> budget_euler;
    std::string note;

    WeightedForm resolved_ambient() const;
    std::vector<Int> fibration_exponents() const;
    bool operator==(const CaseSpec&) const = default;
};

struct FiberComponent {
    enum class Kind { ProperTransform, RuledOverCurve, PointResolutionDivisor };
    std::string label;
    Kind kind = Kind::PointResolutionDivisor;
    Int genus = 0;  // base curve for ruled surfaces, the curve itself for curve components
    Int euler = 0;
};
const char* to_string(FiberComponent::Kind k);

struct FiberEdge {
    int a = 0, b = 0;
    bool point = false;  // intersection is a point (surface fibers) or a curve
    Int genus = 0;
    Int euler = 0;
};

struct FiberGraph {
    std::string name;
    Location location = Location::Infinity;
    std::vector<FiberComponent> components;
    std::vector<FiberEdge> edges;
    Int triple_points = 0;
    std::vector<std::string> sections;     // exceptional divisors dominating the base
    std::vector<std::string> other_fiber;  // exceptional divisors of the opposite star fiber

    Int euler() const;
    bool connected() const;
    Int exceptional_count() const;
};

FiberGraph assemble_star_fiber(const CaseSpec& c);

// e(Theta) that makes the graph's Euler number equal star_euler.
Int theta_euler_from_budget(const CaseSpec& c, Int star_euler);

struct PointInventory {
    Stratum stratum;
    QuotientType type;
    Int points = 0;
    Int interior = 0;
    Int fiber = 0;
    Int sections = 0;
    Int other = 0;
};

// Interior divisors over a point stratum, optionally with a substitute type
// (weights taken in the stratum's zero-set coordinate order).
PointInventory point_inventory(const CaseSpec& c, const Stratum& s,
                               const std::optional<QuotientType>& type = std::nullopt);

std::string to_json(const FiberGraph& g);
std::string to_dot(const FiberGraph& g);

}  // namespace fibertwist
