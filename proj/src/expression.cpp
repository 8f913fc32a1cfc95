#include "polyatlas/expression.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "polyatlas/families.hpp"
#include "polyatlas/lattice.hpp"

namespace polyatlas {

namespace {

struct Node;
using Arg = std::variant<long, VertexSet, Node>;

struct Node {
    std::string name;
    int power = 1;
    std::vector<Arg> args;
};

class Parser {
public:
    explicit Parser(const std::string& s) : s_(s) {}

    Node parse() {
        Node n = node();
        skip();
        if (i_ != s_.size()) fail("trailing input");
        return n;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::invalid_argument("expression: " + msg + " at offset " + std::to_string(i_) + " in '" + s_ + "'");
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    long number() {
        skip();
        size_t start = i_;
        if (i_ < s_.size() && s_[i_] == '-') ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected a number");
        return std::stol(s_.substr(start, i_ - start));
    }
    std::string ident() {
        skip();
        size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        if (start == i_) fail("expected a name");
        return s_.substr(start, i_ - start);
    }
    Node node() {
        Node n;
        n.name = ident();
        if (eat('^')) n.power = static_cast<int>(number());
        if (eat('(')) {
            if (!eat(')')) {
                do n.args.push_back(arg());
                while (eat(','));
                if (!eat(')')) fail("expected ')'");
            }
        }
        return n;
    }
    Arg arg() {
        skip();
        if (i_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[i_])) || s_[i_] == '-')) return number();
        if (i_ + 1 < s_.size() && s_[i_] == 'f' && s_[i_ + 1] == '{') {
            i_ += 2;
            VertexSet f;
            if (!eat('}')) {
                do f.set(static_cast<int>(number()));
                while (eat(','));
                if (!eat('}')) fail("expected '}'");
            }
            return f;
        }
        if (i_ + 1 < s_.size() && s_[i_] == 'v' && std::isdigit(static_cast<unsigned char>(s_[i_ + 1]))) {
            ++i_;
            return VertexSet{static_cast<int>(number())};
        }
        return node();
    }

    std::string s_;
    size_t i_ = 0;
};

Polytope eval(const Node& n);

long int_arg(const Node& n, size_t k) {
    if (k >= n.args.size() || !std::holds_alternative<long>(n.args[k]))
        throw std::invalid_argument("expression: " + n.name + " expects an integer argument " + std::to_string(k + 1));
    return std::get<long>(n.args[k]);
}

Polytope poly_arg(const Node& n, size_t k) {
    if (k >= n.args.size() || !std::holds_alternative<Node>(n.args[k]))
        throw std::invalid_argument("expression: " + n.name + " expects a polytope argument " + std::to_string(k + 1));
    return eval(std::get<Node>(n.args[k]));
}

VertexSet face_arg(const Node& n, size_t k) {
    if (k >= n.args.size() || !std::holds_alternative<VertexSet>(n.args[k]))
        throw std::invalid_argument("expression: " + n.name + " expects a face argument " + std::to_string(k + 1));
    return std::get<VertexSet>(n.args[k]);
}

void arity(const Node& n, size_t k) {
    if (n.args.size() != k)
        throw std::invalid_argument("expression: " + n.name + " takes " + std::to_string(k) + " arguments");
}

Polytope eval(const Node& n) {
    const std::string& f = n.name;
    if (n.power != 1 && f != "pyr") throw std::invalid_argument("expression: only pyr accepts a power");
    auto i = [&](size_t k) { return static_cast<int>(int_arg(n, k)); };
    if (f == "simplex") return arity(n, 1), simplex(i(0));
    if (f == "segment") return arity(n, 0), simplex(1);
    if (f == "prism") return arity(n, 1), prism(i(0));
    if (f == "cube") return arity(n, 1), cube(i(0));
    if (f == "pentagon") return arity(n, 0), polygon(5);
    if (f == "polygon") return arity(n, 1), polygon(i(0));
    if (f == "delta") {
        std::vector<int> dims;
        for (size_t k = 0; k < n.args.size(); ++k) dims.push_back(i(k));
        return simplex_product(dims);
    }
    if (f == "pyr") return arity(n, 1), pyramid(poly_arg(n, 0), n.power);
    if (f == "triplex") return arity(n, 2), triplex(i(0), i(1));
    if (f == "pentasm") return arity(n, 1), pentasm(i(0));
    if (f == "pentasm_by_truncation") return arity(n, 1), pentasm_by_truncation(i(0));
    if (f == "capped_prism") return arity(n, 2), capped_prism(i(0), i(1));
    if (f == "capped_prism_comb") return arity(n, 2), capped_prism_combinatorial(i(0), i(1));
    if (f == "A") return arity(n, 1), family_abcs(AbcsKind::A, i(0));
    if (f == "B") return arity(n, 1), family_abcs(AbcsKind::B, i(0));
    if (f == "C") return arity(n, 1), family_abcs(AbcsKind::C, i(0));
    if (f == "Sigma") return arity(n, 1), family_abcs(AbcsKind::Sigma, i(0));
    if (f == "sigma_mink") return arity(n, 1), sigma_as_minkowski_sum(i(0));
    if (f == "gamma") return arity(n, 2), gamma(i(0), i(1));
    if (f == "J") return arity(n, 1), family_j(i(0));
    if (f == "antiwedge" || f == "TA") return arity(n, 0), antiwedge();
    if (f == "cyclic") return arity(n, 2), cyclic(i(0), i(1));
    if (f == "bipyramid") return arity(n, 1), bipyramid(i(0));
    if (f == "free_sum") return arity(n, 2), free_sum(poly_arg(n, 0), poly_arg(n, 1));
    if (f == "product") return arity(n, 2), product(poly_arg(n, 0), poly_arg(n, 1));
    if (f == "minkowski") return arity(n, 2), minkowski_sum(poly_arg(n, 0), poly_arg(n, 1));
    if (f == "truncate") return arity(n, 2), truncate(poly_arg(n, 0), face_arg(n, 1)).polytope;
    if (f == "stack") return arity(n, 2), stack(poly_arg(n, 0), i(1));
    if (f == "beyond") return arity(n, 2), beyond(poly_arg(n, 0), face_arg(n, 1));
    if (f == "dual") return arity(n, 1), dual(poly_arg(n, 0));
    throw std::invalid_argument("expression: unknown constructor '" + f + "'");
}

}  // namespace

Polytope evaluate_expression(const std::string& text) { return eval(Parser(text).parse()); }

}  // namespace polyatlas
