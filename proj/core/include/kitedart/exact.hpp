#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

namespace kd {

// A point of the plane with exact coordinates in Z[z], z = exp(2*pi*i/5),
// stored as integer coefficients of the basis {1, z, z^2, z^3}
// (z^4 = -1 - z - z^2 - z^3). The golden ratio phi = -(z^2 + z^3), so
// multiplication by phi and 1/phi stays inside the ring, and every
// rotation by a multiple of 36 degrees is a ring multiplication
// (exp(i*pi/5) = -z^3). Equality is exact coefficient comparison.
struct ExactPoint {
    std::array<std::int64_t, 4> c{0, 0, 0, 0};

    constexpr ExactPoint() = default;
    constexpr ExactPoint(std::int64_t c0, std::int64_t c1, std::int64_t c2, std::int64_t c3)
        : c{c0, c1, c2, c3} {}

    static constexpr ExactPoint zero() { return {}; }
    static constexpr ExactPoint one() { return {1, 0, 0, 0}; }

    // z^k for any integer k
    static constexpr ExactPoint zeta(int k) {
        int m = ((k % 5) + 5) % 5;
        if (m < 4) {
            ExactPoint p;
            p.c[static_cast<std::size_t>(m)] = 1;
            return p;
        }
        return {-1, -1, -1, -1};
    }

    friend constexpr ExactPoint operator+(const ExactPoint& a, const ExactPoint& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
    }
    friend constexpr ExactPoint operator-(const ExactPoint& a, const ExactPoint& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
    }
    constexpr ExactPoint operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }

    friend constexpr ExactPoint operator*(const ExactPoint& a, const ExactPoint& b) {
        // convolution, then reduce z^4 = -(1+z+z^2+z^3), z^5 = 1, z^6 = z
        std::int64_t t[7] = {0, 0, 0, 0, 0, 0, 0};
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) t[i + j] += a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
        ExactPoint r{t[0] - t[4] + t[5], t[1] - t[4] + t[6], t[2] - t[4], t[3] - t[4]};
        return r;
    }

    friend constexpr ExactPoint operator*(std::int64_t s, const ExactPoint& a) {
        return {s * a.c[0], s * a.c[1], s * a.c[2], s * a.c[3]};
    }

    constexpr ExactPoint mul_phi() const { return *this * ExactPoint{0, 0, -1, -1}; }
    constexpr ExactPoint mul_phi_inv() const { return *this * ExactPoint{-1, 0, -1, -1}; }

    // complex conjugate = reflection across the x axis
    constexpr ExactPoint conj() const {
        return {c[0] - c[1], -c[1], c[3] - c[1], c[2] - c[1]};
    }

    // rotation by k * 36 degrees
    ExactPoint rot36(int k) const;

    friend constexpr bool operator==(const ExactPoint& a, const ExactPoint& b) { return a.c == b.c; }
    friend constexpr bool operator!=(const ExactPoint& a, const ExactPoint& b) { return a.c != b.c; }
    friend constexpr bool operator<(const ExactPoint& a, const ExactPoint& b) { return a.c < b.c; }

    constexpr bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

    double x() const;
    double y() const;

    std::uint64_t hash() const {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::int64_t v : c) {
            std::uint64_t u = static_cast<std::uint64_t>(v);
            u ^= u >> 30;
            u *= 0xbf58476d1ce4e5b9ULL;
            u ^= u >> 27;
            h = (h ^ u) * 0x94d049bb133111ebULL;
        }
        return h ^ (h >> 31);
    }

    std::string str() const;
};

// sign of a + b*sqrt(5), exact
int sqrt5_sign(std::int64_t a, std::int64_t b);

// sign of the cross product cross(p, q) = Im(conj(p) * q); exact
int cross_sign(const ExactPoint& p, const ExactPoint& q);

// orientation of the triangle (a, b, c): +1 counterclockwise, -1 clockwise, 0 degenerate
int orient(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c);

// if p = r * exp(i * k * 36deg) with r > 0, returns k in [0, 10); nullopt otherwise
std::optional<int> direction_index(const ExactPoint& p);

struct ExactPointHash {
    std::size_t operator()(const ExactPoint& p) const { return static_cast<std::size_t>(p.hash()); }
};

}  // namespace kd
