#include "fibertwist/singloc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fibertwist {

std::string to_string(const Stratum& s)
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < s.zero_set.size(); ++i)
        os << (i ? "=" : "") << "z" << s.zero_set[i] + 1;
    os << "=0}_Z" << s.order;
    return os.str();
}

QuotientType::QuotientType(Int m, std::vector<Int> w) : order(m), weights(std::move(w))
{
    if (order < 2)
        throw Error(ErrorCode::InvalidInput, "quotient order must be at least 2");
    for (Int& x : weights) {
        x = ((x % order) + order) % order;
        if (x == 0)
            throw Error(ErrorCode::InvalidInput, "weight divisible by the order");
    }
}

std::vector<Int> QuotientType::gcds() const
{
    std::vector<Int> g;
    for (Int x : weights)
        g.push_back(std::gcd(x, order));
    return g;
}

bool QuotientType::gorenstein() const
{
    Int s = 0;
    for (Int x : weights)
        s += x;
    return s % order == 0;
}

std::string to_string(const QuotientType& q)
{
    std::ostringstream os;
    os << "1/" << q.order << "(";
    for (std::size_t i = 0; i < q.weights.size(); ++i)
        os << (i ? "," : "") << q.weights[i];
    os << ")";
    return os.str();
}

std::vector<Stratum> singular_strata(const std::vector<Int>& weights)
{
    const int n = static_cast<int>(weights.size());
    if (n > 20)
        throw Error(ErrorCode::InvalidInput, "too many coordinates");
    std::vector<Stratum> out;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        Stratum s;
        Int g = 0;
        for (int i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                s.support.push_back(i);
                g = std::gcd(g, weights[i]);
            } else {
                s.zero_set.push_back(i);
            }
        }
        if (g < 2)
            continue;
        // Only record the largest support with this stabilizer.
        bool maximal = std::all_of(s.zero_set.begin(), s.zero_set.end(),
                                   [&](int j) { return std::gcd(g, weights[j]) < g; });
        if (!maximal)
            continue;
        s.order = g;
        out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
        if (a.dim() != b.dim())
            return a.dim() > b.dim();
        if (a.order != b.order)
            return a.order > b.order;
        return a.support < b.support;
    });
    return out;
}

namespace {

WeightedForm restricted(const WeightedForm& ambient, const Stratum& s)
{
    std::vector<Int> w;
    for (int i : s.support)
        w.push_back(ambient.weights.at(i));
    return WeightedForm(w, ambient.degree);
}

}  // namespace

Locus stratum_intersection(const WeightedForm& ambient, const Stratum& s)
{
    if (!is_fermat(ambient))
        throw Error(ErrorCode::NotFermat, to_string(ambient));
    if (s.support.size() < 2)
        throw Error(ErrorCode::EmptyIntersection, to_string(s));
    Locus l;
    l.form = restricted(ambient, s);
    l.reduced = reduce_form(l.form).result;
    switch (s.support.size()) {
    case 2:
        l.kind = Locus::Kind::Points;
        l.count = point_count(l.form).count;
        break;
    case 3:
        l.kind = Locus::Kind::Curve;
        l.genus = curve_genus(l.form);
        l.calabi_yau = is_calabi_yau(l.reduced);
        break;
    default:
        l.kind = Locus::Kind::Surface;
        l.calabi_yau = is_calabi_yau(l.reduced);
        break;
    }
    return l;
}

QuotientType transverse_type(const WeightedForm& ambient, const Stratum& s)
{
    std::vector<Int> w;
    for (int i : s.zero_set)
        w.push_back(ambient.weights.at(i));
    return QuotientType(s.order, w);
}

QuotientType point_singularity_type(const WeightedForm& ambient, const Stratum& s)
{
    if (stratum_intersection(ambient, s).kind != Locus::Kind::Points)
        throw Error(ErrorCode::NotIsolatedOnX, to_string(s));
    return canonical_sing_type(transverse_type(ambient, s));
}

QuotientType canonical_sing_type(const QuotientType& q)
{
    std::vector<Int> best;
    for (Int u = 1; u < q.order; ++u) {
        if (std::gcd(u, q.order) != 1)
            continue;
        std::vector<Int> w;
        for (Int x : q.weights)
            w.push_back(static_cast<Int>((static_cast<__int128>(x) * u) % q.order));
        std::sort(w.begin(), w.end());
        if (best.empty() || w < best)
            best = w;
    }
    QuotientType c(q.order, best);
    auto g1 = q.gcds(), g2 = c.gcds();
    std::sort(g1.begin(), g1.end());
    std::sort(g2.begin(), g2.end());
    if (g1 != g2)
        throw Error(ErrorCode::InvariantViolation, "canonical form changed the gcd multiset");
    return c;
}

bool same_orbit(const QuotientType& a, const QuotientType& b)
{
    return a.order == b.order && a.weights.size() == b.weights.size() &&
           canonical_sing_type(a) == canonical_sing_type(b);
}

}  // namespace fibertwist
