#include "kitedart/exact.hpp"

#include <sstream>

namespace kd {

namespace {

// exp(i * 36 deg) = -z^3
const ExactPoint kRot36{0, 0, 0, -1};

const std::array<ExactPoint, 10>& rot_table() {
    static const std::array<ExactPoint, 10> table = [] {
        std::array<ExactPoint, 10> t;
        t[0] = ExactPoint::one();
        for (int k = 1; k < 10; ++k) t[static_cast<std::size_t>(k)] = t[static_cast<std::size_t>(k - 1)] * kRot36;
        return t;
    }();
    return table;
}

}  // namespace

ExactPoint ExactPoint::rot36(int k) const {
    int m = ((k % 10) + 10) % 10;
    return *this * rot_table()[static_cast<std::size_t>(m)];
}

double ExactPoint::x() const {
    static const double cs[4] = {1.0, std::cos(2 * M_PI / 5), std::cos(4 * M_PI / 5), std::cos(6 * M_PI / 5)};
    return c[0] * cs[0] + c[1] * cs[1] + c[2] * cs[2] + c[3] * cs[3];
}

double ExactPoint::y() const {
    static const double sn[4] = {0.0, std::sin(2 * M_PI / 5), std::sin(4 * M_PI / 5), std::sin(6 * M_PI / 5)};
    return c[0] * sn[0] + c[1] * sn[1] + c[2] * sn[2] + c[3] * sn[3];
}

std::string ExactPoint::str() const {
    std::ostringstream os;
    os << "(" << c[0] << "," << c[1] << "," << c[2] << "," << c[3] << ")";
    return os.str();
}

int sqrt5_sign(std::int64_t a, std::int64_t b) {
    if (a == 0 && b == 0) return 0;
    if (a >= 0 && b >= 0) return 1;
    if (a <= 0 && b <= 0) return -1;
    // opposite signs: compare a^2 against 5 b^2
    __int128 a2 = static_cast<__int128>(a) * a;
    __int128 b2 = static_cast<__int128>(b) * b * 5;
    if (a > 0) return a2 > b2 ? 1 : (a2 < b2 ? -1 : 0);
    return b2 > a2 ? 1 : (b2 < a2 ? -1 : 0);
}

int cross_sign(const ExactPoint& p, const ExactPoint& q) {
    // Im(z^d) over d = j - i mod 5: {0, s72, s36, -s36, -s72}, s72 = phi * s36.
    // So Im(conj(p) q) = s36 * (u + v * phi), sign via 2u + v + v*sqrt(5).
    std::int64_t u = 0, v = 0;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            std::int64_t w = p.c[static_cast<std::size_t>(i)] * q.c[static_cast<std::size_t>(j)];
            switch (((j - i) % 5 + 5) % 5) {
                case 1: v += w; break;
                case 2: u += w; break;
                case 3: u -= w; break;
                case 4: v -= w; break;
                default: break;
            }
        }
    }
    return sqrt5_sign(2 * u + v, v);
}

int orient(const ExactPoint& a, const ExactPoint& b, const ExactPoint& c) {
    return cross_sign(b - a, c - a);
}

std::optional<int> direction_index(const ExactPoint& p) {
    if (p.is_zero()) return std::nullopt;
    for (int k = 0; k < 10; ++k) {
        ExactPoint q = p.rot36(-k);
        // q is real iff c1 == 0 and c2 == c3; then q = c0 - c2 * phi
        if (q.c[1] != 0 || q.c[2] != q.c[3]) continue;
        if (sqrt5_sign(2 * q.c[0] - q.c[2], -q.c[2]) > 0) return k;
    }
    return std::nullopt;
}

}  // namespace kd
