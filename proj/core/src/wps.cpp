#include "fibertwist/wps.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace fibertwist {

namespace {

Int mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw Error(ErrorCode::Overflow, "integer product out of range");
    return r;
}

bool divides_all_but(const std::vector<Int>& w, std::size_t skip, Int p)
{
    for (std::size_t j = 0; j < w.size(); ++j)
        if (j != skip && w[j] % p != 0)
            return false;
    return true;
}

ReductionStep make_step(const WeightedForm& f, ReductionStep::Rule rule, int index, Int p)
{
    ReductionStep s;
    s.rule = rule;
    s.index = index;
    s.prime = p;
    s.before = f;
    std::vector<Int> w = f.weights;
    for (std::size_t j = 0; j < w.size(); ++j)
        if (rule == ReductionStep::Rule::DivideAll || static_cast<int>(j) != index)
            w[j] /= p;
    s.after = WeightedForm(std::move(w), f.degree / p);
    return s;
}

}  // namespace

Int gcd_of(const std::vector<Int>& v)
{
    Int g = 0;
    for (Int x : v)
        g = std::gcd(g, x);
    return g;
}

Int lcm_of(const std::vector<Int>& v)
{
    Int l = 1;
    for (Int x : v)
        l = mul(l / std::gcd(l, x), x);
    return l;
}

std::vector<Int> prime_factors(Int n)
{
    std::vector<Int> out;
    for (Int p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            out.push_back(p);
            n /= p;
        }
    if (n > 1)
        out.push_back(n);
    return out;
}

WeightedForm::WeightedForm(std::vector<Int> w, Int d) : weights(std::move(w)), degree(d)
{
    if (weights.empty())
        throw Error(ErrorCode::InvalidInput, "empty weight vector");
    for (Int x : weights)
        if (x < 1)
            throw Error(ErrorCode::InvalidInput, "weights must be positive");
    if (degree < 1)
        throw Error(ErrorCode::InvalidInput, "degree must be positive");
}

Int WeightedForm::weight_sum() const
{
    Int s = 0;
    for (Int x : weights)
        if (__builtin_add_overflow(s, x, &s))
            throw Error(ErrorCode::Overflow, "weight sum out of range");
    return s;
}

WeightedForm WeightedForm::sorted() const
{
    WeightedForm f = *this;
    std::sort(f.weights.begin(), f.weights.end());
    return f;
}

std::string to_string(const WeightedForm& f)
{
    std::ostringstream os;
    os << "P_(";
    for (std::size_t i = 0; i < f.weights.size(); ++i)
        os << (i ? "," : "") << f.weights[i];
    os << ")[" << f.degree << "]";
    return os.str();
}

bool is_fermat(const WeightedForm& f)
{
    return std::all_of(f.weights.begin(), f.weights.end(), [&](Int w) { return f.degree % w == 0; });
}

bool is_calabi_yau(const WeightedForm& f)
{
    return f.degree == f.weight_sum();
}

std::vector<ReductionStep> admissible_steps(const WeightedForm& f)
{
    std::vector<ReductionStep> out;
    std::set<Int> primes;
    for (Int w : f.weights)
        for (Int p : prime_factors(w))
            primes.insert(p);
    for (Int p : primes) {
        if (f.degree % p != 0)
            continue;
        bool all = std::all_of(f.weights.begin(), f.weights.end(), [&](Int w) { return w % p == 0; });
        if (all) {
            out.push_back(make_step(f, ReductionStep::Rule::DivideAll, -1, p));
            continue;
        }
        if (f.size() < 2)
            continue;
        for (std::size_t i = 0; i < f.size(); ++i)
            if (f.weights[i] % p != 0 && divides_all_but(f.weights, i, p))
                out.push_back(make_step(f, ReductionStep::Rule::DivideAllButOne, static_cast<int>(i), p));
    }
    return out;
}

Reduction reduce_form(const WeightedForm& f)
{
    if (!is_fermat(f))
        throw Error(ErrorCode::NotFermat, to_string(f));
    Reduction r;
    r.start = f;
    WeightedForm cur = f;
    for (;;) {
        Int g = gcd_of(cur.weights);
        if (g > 1) {
            for (Int p : prime_factors(g)) {
                r.steps.push_back(make_step(cur, ReductionStep::Rule::DivideAll, -1, p));
                cur = r.steps.back().after;
            }
            continue;
        }
        bool moved = false;
        for (std::size_t i = 0; i < cur.size() && !moved && cur.size() > 1; ++i) {
            std::vector<Int> others;
            for (std::size_t j = 0; j < cur.size(); ++j)
                if (j != i)
                    others.push_back(cur.weights[j]);
            Int gi = gcd_of(others);
            for (Int p : prime_factors(gi)) {
                if (cur.weights[i] % p == 0)
                    continue;
                r.steps.push_back(make_step(cur, ReductionStep::Rule::DivideAllButOne, static_cast<int>(i), p));
                cur = r.steps.back().after;
                moved = true;
            }
        }
        if (!moved)
            break;
    }
    r.result = cur;
    return r;
}

std::vector<WeightedForm> Reduction::links() const
{
    std::vector<WeightedForm> out{start};
    for (std::size_t i = 0; i < steps.size(); ++i) {
        bool last_of_group = i + 1 == steps.size() || steps[i + 1].rule != steps[i].rule ||
                             steps[i + 1].index != steps[i].index;
        if (last_of_group)
            out.push_back(steps[i].after);
    }
    return out;
}

std::string Reduction::chain() const
{
    std::string s;
    for (const auto& f : links()) {
        if (!s.empty())
            s += " ≅ ";
        s += to_string(f);
    }
    return s;
}

std::vector<Int> normalize_weights(const std::vector<Int>& w)
{
    // The weight part of the reduction does not depend on the degree; use the
    // lcm as a Fermat degree.
    return reduce_form(WeightedForm(w, lcm_of(w))).result.weights;
}

bool is_derivable(const WeightedForm& from, const WeightedForm& to, bool up_to_permutation)
{
    auto same = [&](const WeightedForm& a) {
        return up_to_permutation ? a.sorted() == to.sorted() : a == to;
    };
    std::set<std::pair<std::vector<Int>, Int>> seen;
    std::vector<WeightedForm> stack{from};
    while (!stack.empty()) {
        WeightedForm cur = stack.back();
        stack.pop_back();
        if (same(cur))
            return true;
        if (!seen.insert({cur.weights, cur.degree}).second)
            continue;
        for (const auto& s : admissible_steps(cur))
            stack.push_back(s.after);
    }
    return false;
}

Int point_count_lcm(Int a, Int b, Int d)
{
    return d / lcm_of({a, b});
}

Int point_count_reduction(Int a, Int b, Int d)
{
    WeightedForm r = reduce_form(WeightedForm({a, b}, d)).result;
    if (r.weights != std::vector<Int>{1, 1})
        throw Error(ErrorCode::InvariantViolation, "binary form did not reduce to P_(1,1)");
    return r.degree;
}

PointCount point_count(const WeightedForm& f)
{
    if (f.size() != 2)
        throw Error(ErrorCode::InvalidInput, "point_count needs two weights");
    Int a = f.weights[0], b = f.weights[1], d = f.degree;
    if (d < lcm_of({a, b}))
        return {0, true};
    if (!is_fermat(f))
        throw Error(ErrorCode::NotFermat, to_string(f));
    Int n1 = point_count_lcm(a, b, d);
    Int n2 = point_count_reduction(a, b, d);
    if (n1 != n2)
        throw Error(ErrorCode::InvariantViolation, "point count methods disagree");
    return {n1, false};
}

Int curve_genus(const WeightedForm& f)
{
    if (f.size() != 3)
        throw Error(ErrorCode::InvalidInput, "curve_genus needs three weights");
    WeightedForm r = reduce_form(f).result;
    __int128 a = r.weights[0], b = r.weights[1], c = r.weights[2], d = r.degree;
    __int128 num = d * (d - a - b - c);
    __int128 den = a * b * c;
    if (num % den != 0)
        throw Error(ErrorCode::NonIntegerGenus, to_string(f));
    __int128 twog = num / den + 2;
    if (twog < 0 || twog % 2 != 0)
        throw Error(ErrorCode::NonIntegerGenus, to_string(f));
    return static_cast<Int>(twog / 2);
}

Int milnor_number(const std::vector<Int>& exponents)
{
    Int mu = 1;
    for (Int n : exponents) {
        if (n < 1)
            throw Error(ErrorCode::InvalidInput, "exponents must be positive");
        mu = mul(mu, n - 1);
    }
    return mu;
}

}  // namespace fibertwist
