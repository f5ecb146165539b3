#include "semigraphoid/polytope.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <stdexcept>

#include "semigraphoid/linalg.hpp"
#include "semigraphoid/simplex.hpp"

namespace sg {

namespace {

// feasibility of {c.x <= c0 rows, x orthogonal to lineality}; direction mode
// drops the right-hand sides and demands s.x_coord >= 1 (recession ray probe)
bool h_system_feasible(const h_polytope& h, bool recession, int coord, int sign) {
    lp_builder lp(h.dim);
    for (int v = 0; v < h.dim; ++v) lp.set_free(v);
    for (const auto& [c0, c] : h.rows) {
        lp_builder::row row;
        for (int v = 0; v < h.dim; ++v)
            if (c[v] != 0) row.emplace_back(v, c[v]);
        lp.add_le(row, recession ? rat(0) : c0);
    }
    for (const auto& gen : h.lineality) {
        lp_builder::row row;
        for (int v = 0; v < h.dim; ++v)
            if (gen[v] != 0) row.emplace_back(v, gen[v]);
        lp.add_eq(row, rat(0));
    }
    if (recession) {
        lp_builder::row row{{coord, rat(sign)}};
        lp.add_ge(row, rat(1));
    }
    return solve_feasibility(lp.build()).feasible();
}

}  // namespace

vertex_enumeration vertices_from_facets(const h_polytope& h) {
    vertex_enumeration out;
    int m = static_cast<int>(h.rows.size());
    int lin = static_cast<int>(h.lineality.size());
    int d = h.dim - lin;
    if (d < 0) throw std::invalid_argument("lineality exceeds the ambient dimension");

    if (!h_system_feasible(h, false, 0, 0)) {
        out.status = polytope_status::empty;
        return out;
    }
    for (int coord = 0; coord < h.dim; ++coord)
        for (int sign : {+1, -1})
            if (h_system_feasible(h, true, coord, sign)) {
                out.status = polytope_status::unbounded;
                return out;
            }

    // choose d facet rows at equality plus the lineality orthogonality rows
    std::vector<int> pick(d);
    auto rec = [&](auto&& self, int from, int depth) -> void {
        if (depth == d) {
            rat_mat sys(h.dim, h.dim);
            rat_vec rhs(h.dim, rat(0));
            for (int r = 0; r < d; ++r) {
                for (int v = 0; v < h.dim; ++v) sys.at(r, v) = h.rows[pick[r]].second[v];
                rhs[r] = h.rows[pick[r]].first;
            }
            for (int l = 0; l < lin; ++l)
                for (int v = 0; v < h.dim; ++v) sys.at(d + l, v) = h.lineality[l][v];
            auto x = solve_square(sys, rhs);
            if (!x) return;
            for (const auto& [c0, c] : h.rows)
                if (dot(c, *x) > c0) return;
            if (std::find(out.vertices.begin(), out.vertices.end(), *x) == out.vertices.end())
                out.vertices.push_back(*x);
            return;
        }
        for (int p = from; p <= m - (d - depth); ++p) {
            pick[depth] = p;
            self(self, p + 1, depth + 1);
        }
    };
    if (d > 0 && d <= m) rec(rec, 0, 0);
    return out;
}

face_lattice build_face_lattice(const h_polytope& h, const std::vector<rat_vec>& vertices) {
    face_lattice out;
    int nv = static_cast<int>(vertices.size());
    std::vector<std::set<int>> inc;
    for (const auto& [c0, c] : h.rows) {
        std::set<int> on;
        for (int v = 0; v < nv; ++v)
            if (dot(c, vertices[v]) == c0) on.insert(v);
        inc.push_back(on);
        out.facet_vertices.emplace_back(on.begin(), on.end());
    }

    std::set<int> all;
    for (int v = 0; v < nv; ++v) all.insert(v);
    std::set<std::set<int>> faces{all};
    std::vector<std::set<int>> frontier{all};
    while (!frontier.empty()) {
        std::vector<std::set<int>> next;
        for (const auto& f : frontier)
            for (const auto& fi : inc) {
                std::set<int> g;
                std::set_intersection(f.begin(), f.end(), fi.begin(), fi.end(),
                                      std::inserter(g, g.begin()));
                if (!g.empty() && !faces.count(g)) {
                    faces.insert(g);
                    next.push_back(g);
                }
            }
        frontier = std::move(next);
    }

    auto affine_dim = [&](const std::set<int>& f) {
        if (f.size() == 1) return 0;
        std::vector<int> vs(f.begin(), f.end());
        rat_mat diff(static_cast<int>(vs.size()) - 1, h.dim);
        for (size_t r = 1; r < vs.size(); ++r)
            for (int c = 0; c < h.dim; ++c)
                diff.at(static_cast<int>(r) - 1, c) = vertices[vs[r]][c] - vertices[vs[0]][c];
        return rank(diff);
    };

    int full_dim = affine_dim(all);
    out.faces.assign(full_dim, {});
    for (const auto& f : faces) {
        int d = affine_dim(f);
        if (d < full_dim) out.faces[d].push_back(std::vector<int>(f.begin(), f.end()));
    }
    for (auto& level : out.faces) std::sort(level.begin(), level.end());
    for (const auto& level : out.faces) out.f_vector.push_back(static_cast<int>(level.size()));

    for (const auto& fi : inc) {
        std::array<int, 3> stats{static_cast<int>(fi.size()), 0, 0};
        for (int dim = 1; dim <= 2 && dim < full_dim; ++dim)
            for (const auto& face : out.faces[dim]) {
                bool contained = std::all_of(face.begin(), face.end(),
                                             [&](int v) { return fi.count(v) > 0; });
                if (contained) ++stats[dim];
            }
        out.facet_stats.push_back(stats);
    }
    return out;
}

std::string polytope_text(const h_polytope& h) {
    std::ostringstream out;
    out << "POINTS\n";
    for (const auto& [c0, c] : h.rows) {
        out << rat_text(c0);
        for (const auto& v : c) out << ' ' << rat_text(v);
        out << '\n';
    }
    for (const auto& gen : h.lineality) {
        out << "LINEALITY";
        for (const auto& v : gen) out << ' ' << rat_text(v);
        out << '\n';
    }
    return out.str();
}

h_polytope parse_polytope(const std::string& text) {
    h_polytope h;
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::vector<std::string>> lins;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (toks[0] == "POINTS") continue;
        if (toks[0] == "LINEALITY") {
            lins.push_back({toks.begin() + 1, toks.end()});
            continue;
        }
        rows.push_back(toks);
    }
    if (rows.empty()) throw std::invalid_argument("polytope file has no facet rows");
    size_t width = rows[0].size();
    if (width < 2) throw std::invalid_argument("facet rows need a right-hand side and coefficients");
    h.dim = static_cast<int>(width) - 1;
    for (const auto& toks : rows) {
        if (toks.size() != width) throw std::invalid_argument("ragged polytope row");
        rat c0 = parse_rat(toks[0]);
        rat_vec c;
        for (size_t k = 1; k < toks.size(); ++k) c.push_back(parse_rat(toks[k]));
        h.rows.emplace_back(c0, c);
    }
    for (const auto& toks : lins) {
        if (static_cast<int>(toks.size()) != h.dim) throw std::invalid_argument("ragged lineality row");
        rat_vec gen;
        for (const auto& t : toks) gen.push_back(parse_rat(t));
        h.lineality.push_back(gen);
    }
    return h;
}

}  // namespace sg
