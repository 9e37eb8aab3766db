#include "fibertwist/twist.hpp"

#include <numeric>

namespace fibertwist {

namespace {

void validate(const TwistInput& t)
{
    if (t.w.size() < 2 || t.v.size() < 2)
        throw Error(ErrorCode::InvalidInput, "twist needs at least two weights per factor");
    for (Int x : t.w)
        if (x < 1)
            throw Error(ErrorCode::InvalidInput, "weights must be positive");
    for (Int x : t.v)
        if (x < 1)
            throw Error(ErrorCode::InvalidInput, "weights must be positive");
    if (t.ell < 1)
        throw Error(ErrorCode::InvalidInput, "ell must be positive");
    if (std::gcd(std::gcd(t.w[0], t.v[0]), t.ell) > 1)
        throw Error(ErrorCode::CommonDivisor, "gcd(w0, v0, ell) > 1");
}

bool fermat_factor(const std::vector<Int>& w, Int ell)
{
    Int deg = ell * w[0];
    for (std::size_t i = 1; i < w.size(); ++i)
        if (deg % w[i] != 0)
            return false;
    return true;
}

}  // namespace

TwistImage twist_image(const TwistInput& t, bool allow_non_fermat)
{
    validate(t);
    Int w0 = t.w[0], v0 = t.v[0];
    bool fermat = fermat_factor(t.w, t.ell) && fermat_factor(t.v, t.ell);
    if (!fermat && !allow_non_fermat)
        throw Error(ErrorCode::NotFermatCompatible, "deg(V1) or deg(V2) not divisible by every weight");

    std::vector<Int> k;
    for (std::size_t i = 1; i < t.w.size(); ++i)
        k.push_back(v0 * t.w[i]);
    for (std::size_t j = 1; j < t.v.size(); ++j)
        k.push_back(w0 * t.v[j]);

    Int via_p = v0 * (t.ell * w0);
    Int via_q = w0 * (t.ell * v0);
    if (via_p != via_q)
        throw Error(ErrorCode::InvariantViolation, "degree routes disagree");

    TwistImage img;
    img.input = t;
    img.ambient = WeightedForm(k, via_p);
    img.quotient_degree = t.ell;
    img.fermat = fermat && is_fermat(img.ambient);

    Int sw = 0, sv = 0;
    for (std::size_t i = 1; i < t.w.size(); ++i)
        sw += t.w[i];
    for (std::size_t j = 1; j < t.v.size(); ++j)
        sv += t.v[j];
    img.calabi_yau = v0 * sw + w0 * sv == via_p;
    if (img.calabi_yau != is_calabi_yau(img.ambient))
        throw Error(ErrorCode::InvariantViolation, "CY tests disagree");

    img.k1 = k[0];
    img.k2 = k[1];
    if (img.fermat) {
        // Fixing the base ratio leaves one V1 parameter of weight gcd(v0 w_i).
        Int s = 0;
        for (std::size_t i = 1; i < t.w.size(); ++i)
            s = std::gcd(s, v0 * t.w[i]);
        std::vector<Int> g{s};
        for (std::size_t j = 1; j < t.v.size(); ++j)
            g.push_back(w0 * t.v[j]);
        img.generic_fiber = reduce_form(WeightedForm(g, via_p)).result;
    }
    return img;
}

std::vector<Rational> twist_exponent_table(const TwistInput& t)
{
    validate(t);
    std::vector<Rational> out;
    for (std::size_t i = 1; i < t.w.size(); ++i)
        out.emplace_back(t.w[i], t.w[0]);
    for (std::size_t j = 1; j < t.v.size(); ++j)
        out.emplace_back(t.v[j], t.v[0]);
    return out;
}

}  // namespace fibertwist
