#include "fibertwist/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace fibertwist {

namespace {

void validate3(const QuotientType& q)
{
    if (q.weights.size() != 3)
        throw Error(ErrorCode::InvalidInput, "expected a three-dimensional type");
    if (!q.gorenstein())
        throw Error(ErrorCode::InvalidInput, to_string(q) + " is not Gorenstein");
    if (std::gcd(gcd_of(q.weights), q.order) != 1)
        throw Error(ErrorCode::InvalidInput, to_string(q) + " does not act faithfully");
}

Int orient(const JuniorPoint& a, const JuniorPoint& b, const JuniorPoint& c)
{
    return (b.num[0] - a.num[0]) * (c.num[1] - a.num[1]) - (b.num[1] - a.num[1]) * (c.num[0] - a.num[0]);
}

}  // namespace

LemmaCounts lemma_counts(const QuotientType& q)
{
    validate3(q);
    Int sd = 0;
    for (Int g : q.gcds())
        sd += g;
    if ((q.order + sd) % 2 != 0 || (3 * q.order + sd) % 2 != 0)
        throw Error(ErrorCode::ParityViolation, to_string(q));
    return {(q.order + 2 + sd) / 2, (3 * q.order + sd) / 2, q.order};
}

std::vector<JuniorPoint> junior_points(const QuotientType& q)
{
    validate3(q);
    const Int d = q.order;
    std::vector<JuniorPoint> out;
    for (int i = 0; i < 3; ++i) {
        JuniorPoint p;
        p.num[i] = d;
        p.location = JuniorPoint::Location::Corner;
        p.index = i;
        out.push_back(p);
    }
    for (Int k = 1; k < d; ++k) {
        JuniorPoint p;
        p.k = k;
        Int sum = 0;
        int zeros = 0;
        for (int i = 0; i < 3; ++i) {
            p.num[i] = (k * q.weights[i]) % d;
            sum += p.num[i];
            if (p.num[i] == 0) {
                ++zeros;
                p.index = i;
            }
        }
        if (sum != d)
            continue;
        p.location = zeros ? JuniorPoint::Location::Edge : JuniorPoint::Location::Interior;
        if (!zeros)
            p.index = -1;
        out.push_back(p);
    }
    return out;
}

std::vector<std::pair<int, int>> JuniorTriangulation::edges() const
{
    std::set<std::pair<int, int>> s;
    for (const auto& t : triangles)
        for (int i = 0; i < 3; ++i) {
            int a = t[i], b = t[(i + 1) % 3];
            s.insert({std::min(a, b), std::max(a, b)});
        }
    return {s.begin(), s.end()};
}

int JuniorTriangulation::triangles_at(int vertex) const
{
    return static_cast<int>(std::count_if(triangles.begin(), triangles.end(), [&](const auto& t) {
        return t[0] == vertex || t[1] == vertex || t[2] == vertex;
    }));
}

LemmaCounts JuniorTriangulation::counts() const
{
    return {static_cast<Int>(points.size()), static_cast<Int>(edges().size()),
            static_cast<Int>(triangles.size())};
}

std::array<Int, 3> JuniorTriangulation::boundary_split() const
{
    std::array<Int, 3> s{};
    for (const auto& p : points)
        if (p.location == JuniorPoint::Location::Edge)
            ++s[p.index];
    return s;
}

Int JuniorTriangulation::interior_count() const
{
    return std::count_if(points.begin(), points.end(),
                         [](const JuniorPoint& p) { return p.location == JuniorPoint::Location::Interior; });
}

JuniorTriangulation triangulate(const QuotientType& q)
{
    auto pts = junior_points(q);
    std::vector<int> order;
    for (int pass = 0; pass < 2; ++pass)
        for (int i = 3; i < static_cast<int>(pts.size()); ++i) {
            bool interior = pts[i].location == JuniorPoint::Location::Interior;
            if (interior == (pass == 0))
                order.push_back(i);
        }
    return triangulate(q, order);
}

JuniorTriangulation triangulate(const QuotientType& q, const std::vector<int>& order)
{
    JuniorTriangulation t;
    t.type = q;
    t.points = junior_points(q);
    std::vector<int> check = order;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i)
        if (check[i] != static_cast<int>(i) + 3)
            throw Error(ErrorCode::InvalidInput, "placing order must list every non-corner point once");
    if (check.size() + 3 != t.points.size())
        throw Error(ErrorCode::InvalidInput, "placing order must list every non-corner point once");

    // Corners in counter-clockwise order for the (num0, num1) chart.
    t.triangles.push_back({0, 1, 2});
    if (orient(t.points[0], t.points[1], t.points[2]) < 0)
        t.triangles.back() = {0, 2, 1};

    for (int p : order) {
        const JuniorPoint& P = t.points[p];
        std::vector<std::array<int, 3>> next;
        for (const auto& tri : t.triangles) {
            Int o[3];
            for (int i = 0; i < 3; ++i)
                o[i] = orient(t.points[tri[i]], t.points[tri[(i + 1) % 3]], P);
            if (o[0] < 0 || o[1] < 0 || o[2] < 0) {
                next.push_back(tri);
                continue;
            }
            int zero = -1;
            for (int i = 0; i < 3; ++i)
                if (o[i] == 0)
                    zero = i;
            if (zero < 0) {
                next.push_back({tri[0], tri[1], p});
                next.push_back({tri[1], tri[2], p});
                next.push_back({tri[2], tri[0], p});
            } else {
                int a = tri[zero], b = tri[(zero + 1) % 3], c = tri[(zero + 2) % 3];
                next.push_back({a, p, c});
                next.push_back({p, b, c});
            }
        }
        t.triangles = std::move(next);
    }
    verify_triangulation(t);
    return t;
}

void verify_triangulation(const JuniorTriangulation& t)
{
    const Int d = t.type.order;
    for (const auto& tri : t.triangles) {
        Int a = orient(t.points[tri[0]], t.points[tri[1]], t.points[tri[2]]);
        if (a != d)
            throw Error(ErrorCode::InvariantViolation, "triangle is not unimodular");
    }
    LemmaCounts c = t.counts();
    if (c.s != d)
        throw Error(ErrorCode::InvariantViolation, "triangle count differs from the order");
    if (c.v - c.e + c.s != 1)
        throw Error(ErrorCode::InvariantViolation, "Euler relation fails");
    for (int i = 0; i < static_cast<int>(t.points.size()); ++i)
        if (t.triangles_at(i) == 0)
            throw Error(ErrorCode::InvariantViolation, "unused junior point");
}

Int hj_chain(const QuotientType& q)
{
    if (q.weights.size() != 2)
        throw Error(ErrorCode::InvalidInput, "expected a surface type");
    if (!q.gorenstein())
        throw Error(ErrorCode::NotGorensteinSurface, to_string(q));
    return q.order - 1;
}

std::vector<ChainPoint> chain_points(const QuotientType& q)
{
    hj_chain(q);
    if (std::gcd(q.weights[0], q.order) != 1)
        throw Error(ErrorCode::InvalidInput, to_string(q) + " does not act faithfully");
    std::vector<ChainPoint> out;
    for (Int j = 1; j < q.order; ++j)
        out.push_back({j, {(j * q.weights[0]) % q.order, (j * q.weights[1]) % q.order}});
    std::sort(out.begin(), out.end(), [](const ChainPoint& a, const ChainPoint& b) { return a.num[0] > b.num[0]; });
    return out;
}

std::string triangulation_svg(const JuniorTriangulation& t, const std::vector<bool>& circled,
                              const std::array<std::string, 3>& corner_labels)
{
    // Affine image of the simplex; straight lines and lattice area ratios are preserved.
    const double X[3] = {200, 30, 370}, Y[3] = {30, 320, 320};
    const double d = static_cast<double>(t.type.order);
    auto xy = [&](const JuniorPoint& p) {
        double x = 0, y = 0;
        for (int i = 0; i < 3; ++i) {
            x += X[i] * p.num[i] / d;
            y += Y[i] * p.num[i] / d;
        }
        return std::pair<double, double>{x, y};
    };
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"360\" viewBox=\"0 0 400 360\">\n";
    os << "<title>" << to_string(t.type) << "</title>\n";
    for (auto [a, b] : t.edges()) {
        auto [x1, y1] = xy(t.points[a]);
        auto [x2, y2] = xy(t.points[b]);
        os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
           << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    }
    for (std::size_t i = 0; i < t.points.size(); ++i) {
        auto [x, y] = xy(t.points[i]);
        os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"3\" fill=\"black\"/>\n";
        if (i < circled.size() && circled[i])
            os << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"7\" fill=\"none\" stroke=\"black\"/>\n";
    }
    const double dx[3] = {-8, -22, 8}, dy[3] = {-8, 16, 16};
    for (int i = 0; i < 3; ++i)
        os << "<text x=\"" << X[i] + dx[i] << "\" y=\"" << Y[i] + dy[i] << "\" font-size=\"12\">"
           << corner_labels[i] << "</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace fibertwist
