#pragma once

#include <vector>

#include <boost/rational.hpp>

#include "fibertwist/wps.hpp"

namespace fibertwist {

using Rational = boost::rational<Int>;

// V1 = {x0^ell + p(x1..xn) = 0} in P_(w0..wn), V2 likewise in P_(v0..vm).
struct TwistInput {
    std::vector<Int> w;
    std::vector<Int> v;
    Int ell = 0;
    bool operator==(const TwistInput&) const = default;
};

struct TwistImage {
    TwistInput input;
    WeightedForm ambient;  // (v0 w1..v0 wn, w0 v1..w0 vm)[v0 w0 ell]
    Int quotient_degree = 0;
    bool calabi_yau = false;
    bool fermat = false;
    Int k1 = 0, k2 = 0;  // base pair for the fiber census
    WeightedForm generic_fiber;  // reduced; empty when not Fermat
};

// allow_non_fermat admits inputs whose image has no Fermat member (the
// generic fiber is then left empty).
TwistImage twist_image(const TwistInput& t, bool allow_non_fermat = false);

std::vector<Rational> twist_exponent_table(const TwistInput& t);

}  // namespace fibertwist
