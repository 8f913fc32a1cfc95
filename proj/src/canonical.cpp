#include "polyatlas/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

namespace polyatlas {

namespace {

using Partition = std::vector<std::vector<int>>;

class Labeler {
public:
    explicit Labeler(const Polytope& p) : d_(p.dim), n_(p.num_vertices), m_(static_cast<int>(p.facets.size())) {
        total_ = n_ + m_;
        adj_.assign(total_, {});
        inc_.assign(n_, std::vector<bool>(m_, false));
        for (int f = 0; f < m_; ++f)
            for (int v : p.facets[f].indices()) {
                adj_[v].push_back(n_ + f);
                adj_[n_ + f].push_back(v);
                inc_[v][f] = true;
            }
    }

    std::string run() {
        Partition start;
        std::vector<int> verts(n_), facs(m_);
        std::iota(verts.begin(), verts.end(), 0);
        std::iota(facs.begin(), facs.end(), n_);
        if (n_) start.push_back(verts);
        if (m_) start.push_back(facs);
        std::vector<int> prefix;
        search(start, prefix);
        return *best_;
    }

private:
    void refine(Partition& cells) const {
        std::vector<int> cnt(total_);
        bool changed = true;
        while (changed) {
            changed = false;
            for (size_t s = 0; s < cells.size(); ++s) {
                std::fill(cnt.begin(), cnt.end(), 0);
                for (int x : cells[s])
                    for (int y : adj_[x]) ++cnt[y];
                Partition next;
                next.reserve(cells.size());
                bool split = false;
                for (auto& c : cells) {
                    if (c.size() == 1) {
                        next.push_back(std::move(c));
                        continue;
                    }
                    std::map<int, std::vector<int>> groups;
                    for (int x : c) groups[cnt[x]].push_back(x);
                    if (groups.size() == 1) {
                        next.push_back(std::move(c));
                        continue;
                    }
                    split = true;
                    for (auto& [k, g] : groups) next.push_back(std::move(g));
                }
                cells = std::move(next);
                if (split) changed = true;
            }
        }
    }

    std::string leaf_code(const Partition& cells, std::vector<int>& pos) const {
        pos.assign(total_, 0);
        for (size_t i = 0; i < cells.size(); ++i) pos[cells[i][0]] = static_cast<int>(i);
        std::vector<int> vat(n_), fat(m_);
        for (int v = 0; v < n_; ++v) vat[pos[v]] = v;
        for (int f = 0; f < m_; ++f) fat[pos[n_ + f] - n_] = f;
        std::string code;
        auto put16 = [&](int x) {
            code.push_back(static_cast<char>(x & 0xff));
            code.push_back(static_cast<char>((x >> 8) & 0xff));
        };
        code.push_back(static_cast<char>(d_));
        put16(n_);
        put16(m_);
        for (int i = 0; i < n_; ++i) {
            unsigned char byte = 0;
            int bits = 0;
            for (int j = 0; j < m_; ++j) {
                byte = static_cast<unsigned char>((byte << 1) | (inc_[vat[i]][fat[j]] ? 1 : 0));
                if (++bits == 8) {
                    code.push_back(static_cast<char>(byte));
                    byte = 0;
                    bits = 0;
                }
            }
            if (bits) code.push_back(static_cast<char>(byte << (8 - bits)));
        }
        return code;
    }

    bool same_orbit_as_explored(int x, const std::vector<int>& explored, const std::vector<int>& prefix) const {
        if (explored.empty() || autos_.empty()) return false;
        std::vector<int> parent(total_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (const auto& g : autos_) {
            bool fixes = true;
            for (int q : prefix)
                if (g[q] != q) {
                    fixes = false;
                    break;
                }
            if (!fixes) continue;
            for (int a = 0; a < total_; ++a) {
                int ra = find(a), rb = find(g[a]);
                if (ra != rb) parent[ra] = rb;
            }
        }
        int rx = find(x);
        for (int y : explored)
            if (find(y) == rx) return true;
        return false;
    }

    void search(Partition cells, std::vector<int>& prefix) {
        refine(cells);
        size_t target = cells.size();
        for (size_t i = 0; i < cells.size(); ++i)
            if (cells[i].size() > 1) {
                target = i;
                break;
            }
        if (target == cells.size()) {
            std::vector<int> pos;
            std::string code = leaf_code(cells, pos);
            if (!best_ || code < *best_) {
                best_ = code;
                best_pos_ = pos;
            } else if (code == *best_) {
                std::vector<int> at(total_);
                for (int x = 0; x < total_; ++x) at[best_pos_[x]] = x;
                std::vector<int> g(total_);
                for (int x = 0; x < total_; ++x) g[x] = at[pos[x]];
                autos_.push_back(std::move(g));
            }
            return;
        }
        std::vector<int> members = cells[target];
        std::sort(members.begin(), members.end());
        std::vector<int> explored;
        for (int x : members) {
            if (same_orbit_as_explored(x, explored, prefix)) continue;
            Partition child;
            child.reserve(cells.size() + 1);
            for (size_t i = 0; i < cells.size(); ++i) {
                if (i != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                std::vector<int> rest;
                for (int y : cells[i])
                    if (y != x) rest.push_back(y);
                child.push_back({x});
                child.push_back(std::move(rest));
            }
            prefix.push_back(x);
            search(std::move(child), prefix);
            prefix.pop_back();
            explored.push_back(x);
        }
    }

    int d_, n_, m_, total_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<bool>> inc_;
    std::optional<std::string> best_;
    std::vector<int> best_pos_;
    std::vector<std::vector<int>> autos_;
};

}  // namespace

std::string CanonicalForm::hex() const {
    static const char* digits = "0123456789abcdef";
    std::string h;
    for (unsigned char c : code) {
        h.push_back(digits[c >> 4]);
        h.push_back(digits[c & 15]);
    }
    return h;
}

CanonicalForm CanonicalForm::from_hex(const std::string& h) {
    if (h.size() % 2) throw std::invalid_argument("canonical form: odd hex length");
    auto val = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        throw std::invalid_argument("canonical form: bad hex digit");
    };
    CanonicalForm cf;
    for (size_t i = 0; i < h.size(); i += 2) cf.code.push_back(static_cast<char>(val(h[i]) * 16 + val(h[i + 1])));
    return cf;
}

CanonicalForm canonical_form(const Polytope& p) { return CanonicalForm{Labeler(p).run()}; }

bool is_isomorphic(const Polytope& a, const Polytope& b) {
    if (a.dim != b.dim || a.num_vertices != b.num_vertices || a.facets.size() != b.facets.size()) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace polyatlas
