#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "rainbow/edge.hpp"

namespace rainbow {

/// An edge-colored complete p-graph on n vertices. `assign` holds one color
/// per colex edge rank; color ids are always normalized to restricted-growth
/// form (first occurrence of each color, scanning ranks upward, introduces
/// the next id), so equal colorings compare equal after any color renaming.
struct Coloring {
    int n = 0;
    int p = 0;
    int k = 0;
    std::vector<int> assign;

    long long edge_count() const { return static_cast<long long>(assign.size()); }

    int color(const Edge& e) const { return assign[edge_rank(e, n, p)]; }
    int color_at(long long rank) const { return assign[rank]; }

    friend bool operator==(const Coloring&, const Coloring&) = default;
};

/// Builds a coloring from per-edge color ids in colex edge order, renumbering
/// the ids into restricted-growth normal form.
inline Coloring build_coloring(int n, int p, std::vector<int> assignments) {
    if (p < 2 || n < p || n > kMaxVertices)
        throw std::invalid_argument("build_coloring: need 2 <= p <= n <= 64");
    const std::uint64_t expect = choose(n, p);
    if (assignments.size() != expect)
        throw std::invalid_argument("build_coloring: expected " + std::to_string(expect) +
                                    " assignments, got " + std::to_string(assignments.size()));
    Coloring c;
    c.n = n;
    c.p = p;
    c.assign.resize(assignments.size());
    std::unordered_map<int, int> remap;
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        int id = assignments[i];
        if (id < 0) throw std::invalid_argument("build_coloring: negative color id");
        c.assign[i] = remap.try_emplace(id, static_cast<int>(remap.size())).first->second;
    }
    c.k = static_cast<int>(remap.size());
    return c;
}

inline constexpr const char* kColoringMagic = "rainbow-coloring v1";

/// Text form, bit-exact: magic line, "p=.. n=.. colors=..", then one line per
/// edge in colex order with ascending vertices and the 0-based color id.
inline void save_coloring(const Coloring& c, std::ostream& out) {
    out << kColoringMagic << "\n";
    out << "p=" << c.p << " n=" << c.n << " colors=" << c.k << "\n";
    std::vector<int> e = first_tuple(c.p);
    long long rank = 0;
    do {
        for (int i = 0; i < c.p; ++i) out << e[i] << ' ';
        out << c.assign[rank] << "\n";
        ++rank;
    } while (next_tuple(e, c.n));
}

inline void save_coloring(const Coloring& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_coloring: cannot open " + path);
    save_coloring(c, out);
}

inline Coloring load_coloring(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != kColoringMagic)
        throw std::runtime_error("load_coloring: malformed header (missing magic line)");
    if (!std::getline(in, line))
        throw std::runtime_error("load_coloring: malformed header (missing parameter line)");
    int p = -1, n = -1, k = -1;
    {
        std::istringstream hs(line);
        std::string tok;
        while (hs >> tok) {
            if (tok.rfind("p=", 0) == 0) p = std::stoi(tok.substr(2));
            else if (tok.rfind("n=", 0) == 0) n = std::stoi(tok.substr(2));
            else if (tok.rfind("colors=", 0) == 0) k = std::stoi(tok.substr(7));
            else throw std::runtime_error("load_coloring: malformed header token '" + tok + "'");
        }
    }
    if (p < 2 || n < p || n > kMaxVertices || k < 1)
        throw std::runtime_error("load_coloring: malformed header values");

    const std::uint64_t expect = choose(n, p);
    std::vector<int> assign;
    assign.reserve(expect);
    std::vector<int> want = first_tuple(p);
    bool more = true;
    std::vector<char> seen(static_cast<std::size_t>(k), 0);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (!more) throw std::runtime_error("load_coloring: edge count mismatch (extra lines)");
        std::istringstream ls(line);
        std::vector<int> verts(p);
        int color;
        for (int i = 0; i < p; ++i)
            if (!(ls >> verts[i])) throw std::runtime_error("load_coloring: malformed edge line '" + line + "'");
        if (!(ls >> color)) throw std::runtime_error("load_coloring: malformed edge line '" + line + "'");
        for (int i = 1; i < p; ++i)
            if (verts[i] <= verts[i - 1])
                throw std::runtime_error("load_coloring: non-ascending vertices in line '" + line + "'");
        if (verts != want)
            throw std::runtime_error("load_coloring: edges out of colex order at line '" + line + "'");
        if (verts.back() >= n)
            throw std::runtime_error("load_coloring: vertex out of range in line '" + line + "'");
        if (color < 0 || color >= k)
            throw std::runtime_error("load_coloring: color surjectivity violated (id " +
                                     std::to_string(color) + " outside 0.." + std::to_string(k - 1) + ")");
        seen[static_cast<std::size_t>(color)] = 1;
        assign.push_back(color);
        more = next_tuple(want, n);
    }
    if (assign.size() != expect)
        throw std::runtime_error("load_coloring: edge count mismatch (got " + std::to_string(assign.size()) +
                                 ", expected " + std::to_string(expect) + ")");
    for (int i = 0; i < k; ++i)
        if (!seen[static_cast<std::size_t>(i)])
            throw std::runtime_error("load_coloring: color surjectivity violated (id " + std::to_string(i) +
                                     " unused)");
    return build_coloring(n, p, std::move(assign));
}

inline Coloring load_coloring(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_coloring: cannot open " + path);
    return load_coloring(in);
}

}  // namespace rainbow
