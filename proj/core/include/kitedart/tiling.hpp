#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kitedart/exact.hpp"

namespace kd {

enum class TileKind : std::uint8_t { Kite = 0, Dart = 1 };

const char* to_string(TileKind k);

// One Robinson triangle, i.e. half of a kite or dart cut along its symmetry
// axis. Role order is fixed: tip is the on-axis 36-degree corner (kite tail /
// dart point), axis_end the other on-axis corner (kite head / dart reflex),
// side the off-axis corner (kite side / dart wing). Edge tip-axis_end lies on
// the axis of the whole tile; two mirror halves share it.
struct HalfTile {
    TileKind kind;
    ExactPoint tip, axis_end, side;

    // +1 when (tip, axis_end, side) is counterclockwise
    int chirality() const { return orient(tip, axis_end, side); }
};

// A whole kite or dart. Vertices in counterclockwise order
// [tip, side, axis_end, side]; index 0 is the kite tail / dart point and
// index 2 the kite head / dart reflex vertex.
struct WholeTile {
    TileKind kind;
    std::array<ExactPoint, 4> v;
};

// interior corner angles in units of 36 degrees, by vertex index
std::array<int, 4> corner_angles(TileKind kind);

inline constexpr int kDefaultMaxDepth = 16;

std::vector<std::string> seed_names();

// initial half-tile patch for a named vertex star ("sun", "star")
std::vector<HalfTile> seed_patch(const std::string& name);

// one substitution round: scales the patch by phi, then splits every
// half-kite into 2 half-kites + 1 half-dart and every half-dart into
// 1 half-kite + 1 half-dart, keeping all coordinates integral
std::vector<HalfTile> deflate(const std::vector<HalfTile>& halves);

std::vector<HalfTile> generate_patch(const std::string& seed, int depth,
                                     int max_depth = kDefaultMaxDepth);

struct MergeReport {
    std::size_t dropped_halves = 0;
    std::size_t kites = 0;
    std::size_t darts = 0;
};

// pairs mirror halves into whole tiles; unpaired halves (patch boundary) are
// dropped and counted in the report
std::vector<WholeTile> merge_half_tiles(const std::vector<HalfTile>& halves,
                                        MergeReport* report = nullptr);

}  // namespace kd
