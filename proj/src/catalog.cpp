#include "polyatlas/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "polyatlas/analysis.hpp"

namespace polyatlas {

CatalogEntry make_entry(const Polytope& p) {
    FaceLattice l = build_lattice(p);
    CatalogEntry e;
    e.form = canonical_form(p);
    e.dim = p.dim;
    e.f_vector = f_vector(l);
    ExcessReport ex = excess(p, l);
    e.excess = ex.total;
    e.simple = ex.simple();
    e.semisimple = facet_profile(p, l).semisimple;
    e.pyramid_fold = pyramid_structure(p, l).r;
    e.shephard_count = static_cast<int>(shephard_facets(p, l).size());
    e.provenance = p.provenance;
    e.polytope = p;
    return e;
}

Json entry_to_json(const CatalogEntry& e) {
    Json j;
    j["canonical"] = e.form.hex();
    j["dim"] = e.dim;
    j["f_vector"] = e.f_vector;
    j["excess"] = e.excess;
    j["flags"] = {{"simple", e.simple},
                  {"semisimple", e.semisimple},
                  {"pyramid_fold", e.pyramid_fold},
                  {"shephard_count", e.shephard_count}};
    j["provenance"] = e.provenance;
    j["notes"] = e.notes;
    if (e.verdict) j["verdict"] = *e.verdict;
    j["polytope"] = to_json(e.polytope);
    return j;
}

CatalogEntry entry_from_json(const Json& j) {
    CatalogEntry e;
    e.form = CanonicalForm::from_hex(j.at("canonical").get<std::string>());
    e.dim = j.at("dim").get<int>();
    e.f_vector = j.at("f_vector").get<std::vector<int>>();
    e.excess = j.at("excess").get<int>();
    const Json& fl = j.at("flags");
    e.simple = fl.at("simple").get<bool>();
    e.semisimple = fl.at("semisimple").get<bool>();
    e.pyramid_fold = fl.at("pyramid_fold").get<int>();
    e.shephard_count = fl.at("shephard_count").get<int>();
    e.provenance = j.at("provenance").get<std::string>();
    e.notes = j.value("notes", std::vector<std::string>{});
    if (j.contains("verdict")) e.verdict = j.at("verdict").get<std::string>();
    e.polytope = polytope_from_json(j.at("polytope"));
    if (e.polytope.dim != e.dim) throw std::invalid_argument("catalog entry: dimension mismatch");
    if (!(canonical_form(e.polytope) == e.form)) throw std::invalid_argument("catalog entry: canonical form mismatch");
    return e;
}

bool Catalog::insert(const Polytope& p, std::optional<std::string> verdict) {
    CatalogEntry e = make_entry(p);
    e.verdict = std::move(verdict);
    return insert(std::move(e));
}

bool Catalog::insert(CatalogEntry e) {
    auto it = index_.find(e.form.code);
    if (it == index_.end()) {
        index_.emplace(e.form.code, entries_.size());
        entries_.push_back(std::move(e));
        return true;
    }
    CatalogEntry& old = entries_[it->second];
    auto note = [&](const std::string& prov) {
        if (prov.empty() || prov == old.provenance) return;
        if (std::find(old.notes.begin(), old.notes.end(), prov) == old.notes.end()) old.notes.push_back(prov);
    };
    note(e.provenance);
    for (const auto& n : e.notes) note(n);
    if (!old.verdict && e.verdict) old.verdict = e.verdict;
    return false;
}

const CatalogEntry* Catalog::find(const CanonicalForm& f) const {
    auto it = index_.find(f.code);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

CatalogEntry* Catalog::find(const CanonicalForm& f) {
    auto it = index_.find(f.code);
    return it == index_.end() ? nullptr : &entries_[it->second];
}

std::vector<const CatalogEntry*> Catalog::sorted() const {
    std::vector<const CatalogEntry*> out;
    for (const auto& e : entries_) out.push_back(&e);
    std::sort(out.begin(), out.end(), [](const CatalogEntry* a, const CatalogEntry* b) {
        if (a->dim != b->dim) return a->dim < b->dim;
        if (a->f_vector != b->f_vector) return a->f_vector < b->f_vector;
        return a->form < b->form;
    });
    return out;
}

void catalog_store(const Catalog& c, const std::string& path) {
    std::ofstream out(path, std::ios::app);
    if (!out) throw std::runtime_error("catalog_store: cannot open " + path);
    for (const CatalogEntry* e : c.sorted()) out << entry_to_json(*e).dump() << '\n';
    if (!out) throw std::runtime_error("catalog_store: write failed for " + path);
}

CatalogLoad catalog_load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("catalog_load: cannot open " + path);
    CatalogLoad r;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            r.catalog.insert(entry_from_json(Json::parse(line)));
        } catch (const std::exception& ex) {
            ++r.warnings;
            r.messages.push_back("line " + std::to_string(lineno) + ": " + ex.what());
        }
    }
    return r;
}

}  // namespace polyatlas
