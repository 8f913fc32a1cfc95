#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

namespace polyatlas {

// GMP keeps every value in lowest terms with a positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

using Point = std::vector<Rational>;
using Matrix = std::vector<std::vector<Rational>>;

Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& r);

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);
Point add(const Point& a, const Point& b);
Point sub(const Point& a, const Point& b);
Point scale(const Point& a, const Rational& s);
Point centroid(const std::vector<Point>& pts);

// Lexicographic comparison of coordinate vectors.
bool lex_less(const Point& a, const Point& b);

}  // namespace polyatlas
