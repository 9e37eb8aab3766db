#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibertwist/wps.hpp"

namespace fibertwist {

struct Stratum {
    std::vector<int> zero_set;  // coordinates forced to vanish (0-based)
    std::vector<int> support;   // coordinates allowed nonzero
    Int order = 1;              // gcd of the support weights
    int dim() const { return static_cast<int>(support.size()) - 1; }
    bool operator==(const Stratum&) const = default;
};

std::string to_string(const Stratum& s);  // {z1=z2=0}_Z3

// 1/order(weights). Weights are kept reduced mod order, in coordinate order.
struct QuotientType {
    Int order = 1;
    std::vector<Int> weights;

    QuotientType() = default;
    QuotientType(Int m, std::vector<Int> w);

    std::vector<Int> gcds() const;
    bool gorenstein() const;
    bool operator==(const QuotientType&) const = default;
};

std::string to_string(const QuotientType& q);  // 1/9(1,2,6)

std::vector<Stratum> singular_strata(const std::vector<Int>& weights);

struct Locus {
    enum class Kind { Points, Curve, Surface };
    Kind kind = Kind::Points;
    WeightedForm form;     // Fermat form restricted to the support
    WeightedForm reduced;  // after reduce_form
    Int count = 0;         // points
    Int genus = 0;         // curves
    bool calabi_yau = false;
};

Locus stratum_intersection(const WeightedForm& ambient, const Stratum& s);

// Transverse type in the coordinate order of s.zero_set (not canonicalized).
QuotientType transverse_type(const WeightedForm& ambient, const Stratum& s);
QuotientType point_singularity_type(const WeightedForm& ambient, const Stratum& s);

QuotientType canonical_sing_type(const QuotientType& q);
bool same_orbit(const QuotientType& a, const QuotientType& b);

}  // namespace fibertwist
