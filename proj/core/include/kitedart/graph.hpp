#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kitedart/tiling.hpp"

namespace kd {

using TileId = std::uint32_t;

// Tiles of a patch plus the generalized Moore adjacency: two tiles are
// neighbors iff they share at least one vertex. Adjacency is symmetric and
// irreflexive; neighbor lists are sorted. Immutable after construction.
struct TilingGraph {
    struct Tile {
        TileKind kind;
        std::array<std::uint32_t, 4> v;  // vertex ids, ccw, [tip, side, head/reflex, side]
    };

    std::vector<Tile> tiles;
    std::vector<ExactPoint> verts;
    std::vector<std::uint32_t> adj_off;  // size tiles+1
    std::vector<TileId> adj_dat;
    std::vector<std::uint8_t> interior;  // per tile
    int interior_margin = 2;

    std::size_t size() const { return tiles.size(); }

    std::span<const TileId> neighbors(TileId t) const {
        return {adj_dat.data() + adj_off[t], adj_dat.data() + adj_off[t + 1]};
    }
    std::size_t degree(TileId t) const { return adj_off[t + 1] - adj_off[t]; }
    std::size_t closed_size(TileId t) const { return degree(t) + 1; }
    bool is_interior(TileId t) const { return interior[t] != 0; }

    ExactPoint vertex(TileId t, int corner) const {
        return verts[tiles[t].v[static_cast<std::size_t>(corner)]];
    }
    // 4 * centroid stays exact in the ring
    ExactPoint centroid4(TileId t) const {
        const Tile& tl = tiles[t];
        return verts[tl.v[0]] + verts[tl.v[1]] + verts[tl.v[2]] + verts[tl.v[3]];
    }
    double cx(TileId t) const { return centroid4(t).x() / 4.0; }
    double cy(TileId t) const { return centroid4(t).y() / 4.0; }

    bool operator==(const TilingGraph& o) const {
        if (tiles.size() != o.tiles.size() || verts.size() != o.verts.size()) return false;
        for (std::size_t i = 0; i < tiles.size(); ++i)
            if (tiles[i].kind != o.tiles[i].kind || tiles[i].v != o.tiles[i].v) return false;
        return verts == o.verts && adj_off == o.adj_off && adj_dat == o.adj_dat &&
               interior == o.interior;
    }
};

// builds vertex-sharing adjacency and interior flags; a tile is interior when
// every tile within graph distance `margin` has all four of its vertices
// fully surrounded (incident angles summing to 360 degrees)
TilingGraph build_graph(const std::vector<WholeTile>& tiles, int margin = 2);

TilingGraph make_graph(const std::string& seed, int depth, int margin = 2,
                       int max_depth = kDefaultMaxDepth);

// tiles at graph distance exactly 1..radius from t, grouped by distance
std::vector<std::vector<TileId>> rings_around(const TilingGraph& g, TileId t, int radius);

// graph distance from t to every tile, capped; unreachable/over-cap = -1
std::vector<int> bfs_distances(const TilingGraph& g, TileId t, int cap);

}  // namespace kd
