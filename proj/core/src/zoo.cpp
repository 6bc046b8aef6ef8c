#include "cwc/zoo.hpp"

#include <stdexcept>

namespace cwc {

namespace {

CWComplex graph_complex(int nv, const std::vector<std::pair<int, int>>& edges) {
    CWComplex x;
    x.dim = 1;
    x.cell_counts = {nv, static_cast<int>(edges.size())};
    IntMatrix m(nv, static_cast<int>(edges.size()));
    for (size_t e = 0; e < edges.size(); ++e) {
        m.at(edges[e].first, static_cast<int>(e)) = -1;
        m.at(edges[e].second, static_cast<int>(e)) = 1;
    }
    x.inc.push_back(std::move(m));
    return x;
}

int need_param(const std::vector<int>& params, int min_value) {
    if (params.empty()) throw std::invalid_argument("zoo: missing integer parameter");
    if (params[0] < min_value) throw std::invalid_argument("zoo: parameter out of range");
    return params[0];
}

}  // namespace

std::vector<std::vector<int>> torus_7_facets() {
    // Moebius-Kantor triangulation: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
    std::vector<std::vector<int>> f;
    for (int i = 0; i < 7; ++i) {
        f.push_back({i, (i + 1) % 7, (i + 3) % 7});
        f.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return f;
}

std::vector<std::vector<int>> rp2_6_facets() {
    return {{0, 1, 2}, {0, 1, 3}, {0, 2, 4}, {0, 3, 5}, {0, 4, 5},
            {1, 2, 5}, {1, 3, 4}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}};
}

std::vector<std::vector<int>> klein_facets() {
    // Connected sum of two projective planes glued along the triangle
    // {0,1,2}; the second copy relabels 3,4,5 -> 6,7,8.
    std::vector<std::vector<int>> f;
    for (const auto& t : rp2_6_facets()) {
        if (t == std::vector<int>{0, 1, 2}) continue;
        f.push_back(t);
        std::vector<int> shifted;
        for (int v : t) shifted.push_back(v < 3 ? v : v + 3);
        f.push_back(shifted);
    }
    return f;
}

CWComplex zoo(const std::string& name, const std::vector<int>& params) {
    if (name == "path") {
        int k = need_param(params, 1);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < k; ++i) edges.push_back({i, i + 1});
        return graph_complex(k + 1, edges);
    }
    if (name == "cycle") {
        int k = need_param(params, 3);
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k});
        return graph_complex(k, edges);
    }
    if (name == "star") {
        int k = need_param(params, 1);
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= k; ++i) edges.push_back({0, i});
        return graph_complex(k + 1, edges);
    }
    if (name == "simplex_boundary") {
        int n = need_param(params, 1);
        std::vector<std::vector<int>> facets;
        for (int skip = 0; skip <= n; ++skip) {
            std::vector<int> f;
            for (int v = 0; v <= n; ++v)
                if (v != skip) f.push_back(v);
            facets.push_back(f);
        }
        return from_simplicial(facets);
    }
    if (name == "filled_simplex") {
        int n = need_param(params, 0);
        std::vector<int> f;
        for (int v = 0; v <= n; ++v) f.push_back(v);
        return from_simplicial({f});
    }
    if (name == "tetra_minus_face")
        return from_simplicial({{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    if (name == "torus_7") return from_simplicial(torus_7_facets());
    if (name == "rp2_6") return from_simplicial(rp2_6_facets());
    if (name == "klein_8") return from_simplicial(klein_facets());
    if (name == "book") {
        int k = need_param(params, 1);
        std::vector<std::vector<int>> facets;
        for (int i = 0; i < k; ++i) facets.push_back({0, 1, 2 + i});
        return from_simplicial(facets);
    }
    throw std::invalid_argument("zoo: unknown name '" + name + "'");
}

std::vector<std::string> zoo_names() {
    return {"path", "cycle", "star", "simplex_boundary", "filled_simplex",
            "tetra_minus_face", "torus_7", "rp2_6", "klein_8", "book"};
}

}  // namespace cwc
