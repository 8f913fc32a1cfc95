#include "polyatlas/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace polyatlas {

Json point_to_json(const Point& p) {
    Json a = Json::array();
    for (const auto& x : p) a.push_back(format_rational(x));
    return a;
}

Point point_from_json(const Json& j) {
    Point p;
    for (const auto& x : j) {
        if (x.is_string()) p.push_back(parse_rational(x.get<std::string>()));
        else if (x.is_number_integer()) p.push_back(Rational(x.get<long long>()));
        else throw std::invalid_argument("coordinate must be a rational string or integer");
    }
    return p;
}

Json to_json(const Polytope& p) {
    Json j;
    j["dim"] = p.dim;
    if (p.realization) {
        Json vs = Json::array();
        for (const auto& pt : *p.realization) vs.push_back(point_to_json(pt));
        j["vertices"] = vs;
    } else {
        j["num_vertices"] = p.num_vertices;
    }
    Json fs = Json::array();
    for (const auto& f : p.facets) fs.push_back(f.indices());
    j["facets"] = fs;
    j["name"] = p.name;
    j["provenance"] = p.provenance;
    return j;
}

Polytope polytope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("facets"))
        throw std::invalid_argument("polytope document needs 'dim' and 'facets'");
    Polytope p;
    p.dim = j.at("dim").get<int>();
    int maxv = -1;
    for (const auto& f : j.at("facets")) {
        VertexSet s;
        for (const auto& v : f) {
            int i = v.get<int>();
            if (i < 0) throw std::invalid_argument("negative vertex index");
            s.set(i);
            maxv = std::max(maxv, i);
        }
        p.facets.push_back(s);
    }
    if (j.contains("vertices") && !j.at("vertices").is_null()) {
        std::vector<Point> pts;
        for (const auto& v : j.at("vertices")) pts.push_back(point_from_json(v));
        p.num_vertices = static_cast<int>(pts.size());
        if (maxv >= p.num_vertices) throw std::invalid_argument("facet index beyond vertex list");
        p.realization = std::move(pts);
    } else if (j.contains("num_vertices")) {
        p.num_vertices = j.at("num_vertices").get<int>();
    } else {
        p.num_vertices = maxv + 1;
    }
    std::sort(p.facets.begin(), p.facets.end());
    if (j.contains("name") && j.at("name").is_string()) p.name = j.at("name").get<std::string>();
    if (j.contains("provenance") && j.at("provenance").is_string()) p.provenance = j.at("provenance").get<std::string>();
    return p;
}

std::string write_polytope(const Polytope& p) { return to_json(p).dump(2) + "\n"; }

Polytope read_polytope(const std::string& text) { return polytope_from_json(Json::parse(text)); }

void save_polytope(const Polytope& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << write_polytope(p);
}

Polytope load_polytope(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return read_polytope(ss.str());
}

}  // namespace polyatlas
