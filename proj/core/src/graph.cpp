#include "kitedart/graph.hpp"

#include <algorithm>
#include <deque>
#include <unordered_map>

#include "kitedart/errors.hpp"

namespace kd {

TilingGraph build_graph(const std::vector<WholeTile>& tiles, int margin) {
    TilingGraph g;
    g.interior_margin = margin;
    g.tiles.reserve(tiles.size());

    std::unordered_map<ExactPoint, std::uint32_t, ExactPointHash> vid;
    vid.reserve(tiles.size() * 2);
    for (const WholeTile& t : tiles) {
        TilingGraph::Tile gt;
        gt.kind = t.kind;
        for (int i = 0; i < 4; ++i) {
            auto [it, inserted] =
                vid.emplace(t.v[static_cast<std::size_t>(i)], static_cast<std::uint32_t>(vid.size()));
            gt.v[static_cast<std::size_t>(i)] = it->second;
        }
        g.tiles.push_back(gt);
    }
    g.verts.resize(vid.size());
    for (const auto& [p, id] : vid) g.verts[id] = p;

    // duplicate tile check: same vertex multiset means the generator broke
    {
        auto sorted_verts = [&](TileId t) {
            auto v = g.tiles[t].v;
            std::sort(v.begin(), v.end());
            return v;
        };
        std::unordered_map<std::uint64_t, TileId> seen;
        seen.reserve(g.tiles.size());
        for (TileId t = 0; t < g.tiles.size(); ++t) {
            auto v = sorted_verts(t);
            std::uint64_t h = 0xcbf29ce484222325ULL;
            for (std::uint32_t x : v) h = (h ^ x) * 0x100000001b3ULL;
            auto [it, inserted] = seen.emplace(h, t);
            if (!inserted && sorted_verts(it->second) == v)
                throw Error("duplicate tile detected (ids " + std::to_string(it->second) + ", " +
                            std::to_string(t) + ")");
        }
    }

    // vertex -> incident tiles
    std::vector<std::uint32_t> inc_cnt(g.verts.size(), 0);
    for (const auto& t : g.tiles)
        for (std::uint32_t v : t.v) inc_cnt[v]++;
    std::vector<std::uint32_t> inc_off(g.verts.size() + 1, 0);
    for (std::size_t i = 0; i < g.verts.size(); ++i) inc_off[i + 1] = inc_off[i] + inc_cnt[i];
    std::vector<TileId> inc_dat(inc_off.back());
    {
        std::vector<std::uint32_t> cur(inc_off.begin(), inc_off.end() - 1);
        for (TileId t = 0; t < g.tiles.size(); ++t)
            for (std::uint32_t v : g.tiles[t].v) inc_dat[cur[v]++] = t;
    }

    // neighbors = tiles sharing any vertex
    g.adj_off.assign(g.tiles.size() + 1, 0);
    std::vector<TileId> scratch;
    std::vector<std::vector<TileId>> nbrs(g.tiles.size());
    for (TileId t = 0; t < g.tiles.size(); ++t) {
        scratch.clear();
        for (std::uint32_t v : g.tiles[t].v)
            for (std::uint32_t i = inc_off[v]; i < inc_off[v + 1]; ++i)
                if (inc_dat[i] != t) scratch.push_back(inc_dat[i]);
        std::sort(scratch.begin(), scratch.end());
        scratch.erase(std::unique(scratch.begin(), scratch.end()), scratch.end());
        nbrs[t] = scratch;
        g.adj_off[t + 1] = g.adj_off[t] + static_cast<std::uint32_t>(scratch.size());
    }
    g.adj_dat.reserve(g.adj_off.back());
    for (auto& n : nbrs) g.adj_dat.insert(g.adj_dat.end(), n.begin(), n.end());

    // a vertex is complete when the incident corner angles close up to 360
    std::vector<int> angle(g.verts.size(), 0);
    for (const auto& t : g.tiles) {
        auto ca = corner_angles(t.kind);
        for (int i = 0; i < 4; ++i) angle[t.v[static_cast<std::size_t>(i)]] += ca[static_cast<std::size_t>(i)];
    }
    std::vector<std::uint8_t> complete(g.tiles.size(), 1);
    for (TileId t = 0; t < g.tiles.size(); ++t)
        for (std::uint32_t v : g.tiles[t].v)
            if (angle[v] != 10) {
                complete[t] = 0;
                break;
            }

    // interior = no incomplete tile within `margin` hops
    g.interior.assign(g.tiles.size(), 1);
    std::deque<TileId> q;
    std::vector<int> dist(g.tiles.size(), -1);
    for (TileId t = 0; t < g.tiles.size(); ++t)
        if (!complete[t]) {
            dist[t] = 0;
            g.interior[t] = 0;
            q.push_back(t);
        }
    while (!q.empty()) {
        TileId t = q.front();
        q.pop_front();
        if (dist[t] >= margin) continue;
        for (TileId n : g.neighbors(t))
            if (dist[n] < 0) {
                dist[n] = dist[t] + 1;
                g.interior[n] = 0;
                q.push_back(n);
            }
    }
    return g;
}

TilingGraph make_graph(const std::string& seed, int depth, int margin, int max_depth) {
    return build_graph(merge_half_tiles(generate_patch(seed, depth, max_depth)), margin);
}

std::vector<std::vector<TileId>> rings_around(const TilingGraph& g, TileId t, int radius) {
    std::vector<std::vector<TileId>> rings(static_cast<std::size_t>(radius) + 1);
    std::vector<int> dist(g.size(), -1);
    dist[t] = 0;
    rings[0] = {t};
    for (int r = 0; r < radius; ++r) {
        for (TileId u : rings[static_cast<std::size_t>(r)])
            for (TileId n : g.neighbors(u))
                if (dist[n] < 0) {
                    dist[n] = r + 1;
                    rings[static_cast<std::size_t>(r) + 1].push_back(n);
                }
        std::sort(rings[static_cast<std::size_t>(r) + 1].begin(), rings[static_cast<std::size_t>(r) + 1].end());
    }
    return rings;
}

std::vector<int> bfs_distances(const TilingGraph& g, TileId t, int cap) {
    std::vector<int> dist(g.size(), -1);
    std::deque<TileId> q{t};
    dist[t] = 0;
    while (!q.empty()) {
        TileId u = q.front();
        q.pop_front();
        if (dist[u] >= cap) continue;
        for (TileId n : g.neighbors(u))
            if (dist[n] < 0) {
                dist[n] = dist[u] + 1;
                q.push_back(n);
            }
    }
    return dist;
}

}  // namespace kd
