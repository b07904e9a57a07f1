#pragma once

#include <json.hpp>

#include "rainbow/coloring.hpp"
#include "rainbow/designs.hpp"
#include "rainbow/diagnostics.hpp"
#include "rainbow/gf2geom.hpp"
#include "rainbow/patterns.hpp"
#include "rainbow/solver.hpp"

namespace rainbow {

inline void to_json(nlohmann::json& j, const Edge& e) { j = e.v; }

inline void to_json(nlohmann::json& j, const Coloring& c) {
    nlohmann::json edges = nlohmann::json::array();
    std::vector<int> e = first_tuple(c.p);
    long long r = 0;
    do {
        edges.push_back({{"vertices", e}, {"color", c.assign[static_cast<std::size_t>(r)]}});
        ++r;
    } while (next_tuple(e, c.n));
    j = {{"format", "rainbow-coloring"}, {"version", 1}, {"p", c.p},
         {"n", c.n},                     {"colors", c.k}, {"edges", std::move(edges)}};
}

inline void to_json(nlohmann::json& j, const TripleSystem& t) {
    nlohmann::json blocks = nlohmann::json::array();
    for (const auto& b : t.blocks) blocks.push_back(b.v);
    j = {{"format", "triple-system"}, {"version", 1}, {"n", t.n}, {"blocks", std::move(blocks)}};
}

inline void to_json(nlohmann::json& j, const PatternWitness& w) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : w.edges) edges.push_back(e.v);
    j = {{"kind", pattern_kind_name(w.kind)}, {"edges", std::move(edges)}, {"colors", w.colors}};
}

inline void to_json(nlohmann::json& j, const F4Bounds& b) {
    j = {{"lower", b.lower}, {"upper", b.upper}};
}

inline void to_json(nlohmann::json& j, const F4Accounting& a) {
    j = {{"incidences", a.incidences},
         {"rho", a.rho},
         {"singletons", a.singletons},
         {"leave_edges", a.leave_edges},
         {"colors", a.colors},
         {"singleton_psts", a.singleton_psts},
         {"identity_3s_plus_ell", a.identity_ok},
         {"support_bound", a.support_bound_ok},
         {"color_bound", a.color_bound_ok}};
}

inline void to_json(nlohmann::json& j, const ProjSubspace& w) { j = w.point_list(); }

inline void to_json(nlohmann::json& j, const GrassmannGraph& g) {
    nlohmann::json planes = nlohmann::json::array();
    for (const auto& w : g.planes) planes.push_back(w.point_list());
    nlohmann::json adjacency = nlohmann::json::array();
    for (int i = 0; i < g.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int k = 0; k < g.size(); ++k)
            if (k != i && g.adjacent(i, k)) row.push_back(k);
        adjacency.push_back(std::move(row));
    }
    j = {{"s", g.s}, {"planes", std::move(planes)}, {"adjacency", std::move(adjacency)}};
}

inline void to_json(nlohmann::json& j, const PlaneColoring& pc) {
    nlohmann::json colors = nlohmann::json::object();
    for (std::size_t i = 0; i < pc.color.size(); ++i) colors[std::to_string(i)] = pc.color[i];
    j = {{"classes", pc.classes}, {"colors", std::move(colors)}};
}

inline void to_json(nlohmann::json& j, const SolveResult& r) {
    j = {{"value", r.value},
         {"status", r.status == SolveStatus::Proved ? "proved" : "timed_out"},
         {"nodes", r.nodes},
         {"elapsed_seconds", r.seconds}};
}

}  // namespace rainbow
