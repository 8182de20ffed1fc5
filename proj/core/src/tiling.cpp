#include "kitedart/tiling.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

#include "kitedart/errors.hpp"

namespace kd {

const char* to_string(TileKind k) { return k == TileKind::Kite ? "kite" : "dart"; }

std::array<int, 4> corner_angles(TileKind kind) {
    if (kind == TileKind::Kite) return {2, 2, 4, 2};  // 72, 72, 144, 72
    return {2, 1, 6, 1};                              // 72, 36, 216, 36
}

std::vector<std::string> seed_names() { return {"sun", "star"}; }

std::vector<HalfTile> seed_patch(const std::string& name) {
    std::vector<HalfTile> halves;
    const ExactPoint phi = ExactPoint::one().mul_phi();
    if (name == "sun") {
        // five kites, tails at the origin; kite k has its axis along 72k deg
        for (int k = 0; k < 5; ++k) {
            ExactPoint b = phi * ExactPoint::zeta(k);
            HalfTile up{TileKind::Kite, ExactPoint::zero(), b, b.rot36(1)};
            HalfTile dn{TileKind::Kite, ExactPoint::zero(), b, b.rot36(-1)};
            halves.push_back(up);
            halves.push_back(dn);
        }
        return halves;
    }
    if (name == "star") {
        // five darts, points at the origin; dart axis length 1, wing at +-36 deg
        for (int k = 0; k < 5; ++k) {
            ExactPoint r = ExactPoint::zeta(k);
            ExactPoint w_up = (phi * r).rot36(1);
            ExactPoint w_dn = (phi * r).rot36(-1);
            halves.push_back({TileKind::Dart, ExactPoint::zero(), r, w_up});
            halves.push_back({TileKind::Dart, ExactPoint::zero(), r, w_dn});
        }
        return halves;
    }
    throw Error("unknown seed name: " + name);
}

namespace {

HalfTile scaled(const HalfTile& h) {
    return {h.kind, h.tip.mul_phi(), h.axis_end.mul_phi(), h.side.mul_phi()};
}

void subdivide(const HalfTile& p, std::vector<HalfTile>& out) {
    if (p.kind == TileKind::Kite) {
        ExactPoint p1 = p.tip + (p.axis_end - p.tip).mul_phi_inv();
        ExactPoint p2 = p.tip + (p.side - p.tip).mul_phi_inv();
        out.push_back({TileKind::Kite, p.tip, p1, p2});
        out.push_back({TileKind::Dart, p.axis_end, p1, p2});
        out.push_back({TileKind::Kite, p.axis_end, p.side, p2});
    } else {
        ExactPoint s = p.tip + (p.side - p.tip).mul_phi_inv();
        out.push_back({TileKind::Kite, p.tip, p.axis_end, s});
        out.push_back({TileKind::Dart, p.side, s, p.axis_end});
    }
}

}  // namespace

std::vector<HalfTile> deflate(const std::vector<HalfTile>& halves) {
    std::vector<HalfTile> out;
    out.reserve(halves.size() * 3);
    for (const HalfTile& h : halves) subdivide(scaled(h), out);
    return out;
}

std::vector<HalfTile> generate_patch(const std::string& seed, int depth, int max_depth) {
    if (depth < 0) throw Error("depth must be nonnegative");
    if (depth > max_depth)
        throw Error("depth " + std::to_string(depth) + " above configured maximum " +
                    std::to_string(max_depth));
    std::vector<HalfTile> halves = seed_patch(seed);
    for (int d = 0; d < depth; ++d) halves = deflate(halves);
    return halves;
}

std::vector<WholeTile> merge_half_tiles(const std::vector<HalfTile>& halves, MergeReport* report) {
    // vertex ids, assigned in encounter order, make the axis-edge key cheap
    std::unordered_map<ExactPoint, std::uint32_t, ExactPointHash> vid;
    vid.reserve(halves.size() * 2);
    auto id_of = [&](const ExactPoint& p) {
        auto [it, inserted] = vid.emplace(p, static_cast<std::uint32_t>(vid.size()));
        return it->second;
    };

    struct Key {
        std::uint64_t k;
        bool operator==(const Key& o) const { return k == o.k; }
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const { return std::hash<std::uint64_t>()(k.k); }
    };
    auto make_key = [&](const HalfTile& h) {
        std::uint32_t a = id_of(h.tip), b = id_of(h.axis_end);
        if (a > b) std::swap(a, b);
        std::uint64_t k = (static_cast<std::uint64_t>(a) << 33) | (static_cast<std::uint64_t>(b) << 1) |
                          static_cast<std::uint64_t>(h.kind == TileKind::Dart);
        return Key{k};
    };

    std::unordered_map<Key, std::size_t, KeyHash> pending;  // key -> index into halves
    pending.reserve(halves.size());
    std::vector<WholeTile> tiles;
    tiles.reserve(halves.size() / 2 + 1);
    std::size_t dropped = 0;

    for (std::size_t i = 0; i < halves.size(); ++i) {
        const HalfTile& h = halves[i];
        Key key = make_key(h);
        auto it = pending.find(key);
        if (it == pending.end()) {
            pending.emplace(key, i);
            continue;
        }
        const HalfTile& g = halves[it->second];
        pending.erase(it);
        int ch = h.chirality(), cg = g.chirality();
        if (h.tip != g.tip || h.axis_end != g.axis_end || ch == 0 || ch == cg)
            throw Error("half-tile pairing mismatch (generation bug)");
        const HalfTile& plus = ch > 0 ? h : g;
        const HalfTile& minus = ch > 0 ? g : h;
        tiles.push_back({h.kind, {h.tip, minus.side, h.axis_end, plus.side}});
    }
    dropped = pending.size();

    if (report) {
        report->dropped_halves = dropped;
        report->kites = report->darts = 0;
        for (const WholeTile& t : tiles)
            (t.kind == TileKind::Kite ? report->kites : report->darts)++;
    }
    return tiles;
}

}  // namespace kd
