#include "polyatlas/rational.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyatlas {

// mpq's own string parser accepts "6/4" and "1/0" without canonicalizing,
// so the two halves are read as integers.
Rational parse_rational(const std::string& text) {
    auto bad = [&] { return std::invalid_argument("not a rational number: '" + text + "'"); };
    size_t slash = text.find('/');
    Integer num, den = 1;
    try {
        num = Integer(text.substr(0, slash));
        if (slash != std::string::npos) den = Integer(text.substr(slash + 1));
    } catch (const std::exception&) {
        throw bad();
    }
    if (den == 0) throw bad();
    return Rational(num, den);
}

std::string format_rational(const Rational& r) { return r.str(); }

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Point scale(const Point& a, const Rational& s) {
    Point r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
    return r;
}

Point centroid(const std::vector<Point>& pts) {
    if (pts.empty()) throw std::invalid_argument("centroid of empty set");
    Point c(pts[0].size(), Rational(0));
    for (const auto& p : pts)
        for (size_t i = 0; i < c.size(); ++i) c[i] += p[i];
    for (auto& x : c) x /= static_cast<long>(pts.size());
    return c;
}

bool lex_less(const Point& a, const Point& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace polyatlas
