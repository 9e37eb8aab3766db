#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fibertwist/error.hpp"

namespace fibertwist {

using Int = std::int64_t;

Int gcd_of(const std::vector<Int>& v);
Int lcm_of(const std::vector<Int>& v);  // throws Overflow
std::vector<Int> prime_factors(Int n);  // with multiplicity, ascending

// P_w[d]. Weights are ordered; order is meaningful (coordinate labels).
struct WeightedForm {
    std::vector<Int> weights;
    Int degree = 0;

    WeightedForm() = default;
    WeightedForm(std::vector<Int> w, Int d);

    std::size_t size() const { return weights.size(); }
    Int weight_sum() const;
    WeightedForm sorted() const;
    bool operator==(const WeightedForm&) const = default;
};

std::string to_string(const WeightedForm& f);  // P_(2,3,6)[12]

bool is_fermat(const WeightedForm& f);
bool is_calabi_yau(const WeightedForm& f);

struct ReductionStep {
    enum class Rule { DivideAll, DivideAllButOne };
    Rule rule = Rule::DivideAll;
    int index = -1;  // exempt coordinate for DivideAllButOne
    Int prime = 0;
    WeightedForm before;
    WeightedForm after;
};

// Every rule application available on f (prime steps).
std::vector<ReductionStep> admissible_steps(const WeightedForm& f);

struct Reduction {
    WeightedForm start;
    WeightedForm result;
    std::vector<ReductionStep> steps;

    // Forms after grouping consecutive steps with the same rule and index.
    std::vector<WeightedForm> links() const;
    std::string chain() const;  // "P_(..)[..] ≅ P_(..)[..] ≅ ..."
};

Reduction reduce_form(const WeightedForm& f);  // NotFermat
std::vector<Int> normalize_weights(const std::vector<Int>& w);

// True if `to` is obtained from `from` by some sequence of rule applications.
bool is_derivable(const WeightedForm& from, const WeightedForm& to, bool up_to_permutation = false);

struct PointCount {
    Int count = 0;
    bool degenerate = false;  // d < lcm(a,b): the Fermat locus is empty
};

PointCount point_count(const WeightedForm& f);
Int point_count_lcm(Int a, Int b, Int d);
Int point_count_reduction(Int a, Int b, Int d);

Int curve_genus(const WeightedForm& f);
Int milnor_number(const std::vector<Int>& exponents);

}  // namespace fibertwist
