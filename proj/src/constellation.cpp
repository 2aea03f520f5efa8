// SPDX-License-Identifier: Apache-2.0
#include "juice/constellation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace juice {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kMatchTol = 1e-9;   // point matching under rotation
constexpr double kAngleTol = 1e-9;   // candidate angle dedup / snapping

double wrap_angle(double a) {
    a = std::fmod(a, kTwoPi);
    if (a < 0.0) a += kTwoPi;
    return a;
}

// Phase in [0, 2pi); values within tolerance of 2pi wrap to 0.
double phase_of(cplx s) {
    double p = wrap_angle(std::arg(s));
    if (kTwoPi - p < kAngleTol) p = 0.0;
    return p;
}

bool rotation_maps_onto(const std::vector<cplx>& pts, double theta) {
    const cplx rot = std::polar(1.0, theta);
    for (const cplx& s : pts) {
        const cplx r = s * rot;
        bool found = false;
        for (const cplx& t : pts) {
            if (std::abs(r - t) < kMatchTol) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

int match_index(const std::vector<cplx>& pts, cplx v) {
    int best = -1;
    double bestd = std::numeric_limits<double>::infinity();
    for (int j = 0; j < static_cast<int>(pts.size()); ++j) {
        const double d = std::abs(v - pts[static_cast<std::size_t>(j)]);
        if (d < bestd) {
            bestd = d;
            best = j;
        }
    }
    if (bestd > kMatchTol) throw std::logic_error("constellation: rotated point has no match");
    return best;
}

}  // namespace

int Constellation::nearest_index(cplx v) const {
    int best = 0;
    double bestd = std::numeric_limits<double>::infinity();
    for (int j = 0; j < size(); ++j) {
        const double d = std::norm(v - points[static_cast<std::size_t>(j)]);
        if (d < bestd) {
            bestd = d;
            best = j;
        }
    }
    return best;
}

Constellation build_constellation(const std::string& name) {
    std::vector<cplx> pts;
    if (name == "bpsk") {
        pts = {cplx(1.0, 0.0), cplx(-1.0, 0.0)};
    } else if (name == "qpsk") {
        for (int m = 0; m < 4; ++m)
            pts.push_back(std::polar(1.0, std::numbers::pi / 4.0 + m * std::numbers::pi / 2.0));
    } else if (name == "16qam") {
        const double s = 1.0 / std::sqrt(10.0);
        for (double re : {-3.0, -1.0, 1.0, 3.0})
            for (double im : {-3.0, -1.0, 1.0, 3.0}) pts.emplace_back(s * re, s * im);
    } else {
        throw std::invalid_argument("unknown constellation scheme: " + name);
    }
    return build_constellation(std::move(pts));
}

Constellation build_constellation(std::vector<cplx> points) {
    const int n = static_cast<int>(points.size());
    if (n < 2) throw std::invalid_argument("constellation: need at least 2 points");
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (std::abs(points[a] - points[b]) < kMatchTol)
                throw std::invalid_argument("constellation: coincident points");

    double energy = 0.0;
    for (const cplx& s : points) energy += std::norm(s);
    energy /= n;
    if (energy <= 0.0) throw std::invalid_argument("constellation: zero average energy");
    for (const cplx& s : points)
        if (std::abs(s) < kMatchTol) throw std::invalid_argument("constellation: zero point");
    const double g = 1.0 / std::sqrt(energy);
    for (cplx& s : points) s *= g;

    // Candidate rotation angles: phase differences between equal-magnitude
    // pairs, plus 2pi. The smallest one that permutes S generates the group.
    std::vector<double> cand;
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            if (std::abs(std::abs(points[a]) - std::abs(points[b])) > kMatchTol) continue;
            const double d = wrap_angle(std::arg(points[b]) - std::arg(points[a]));
            if (d > kAngleTol) cand.push_back(d);
        }
    }
    cand.push_back(kTwoPi);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end(),
                           [](double x, double y) { return std::abs(x - y) < kAngleTol; }),
               cand.end());

    Constellation c;
    c.points = std::move(points);
    for (double theta : cand) {
        const double ratio = kTwoPi / theta;
        const double order = std::round(ratio);
        if (std::abs(ratio - order) > 1e-6) continue;  // must tile the circle
        if (!rotation_maps_onto(c.points, theta)) continue;
        c.theta0 = kTwoPi / order;  // snap so that omega_order * theta0 == 2pi
        c.omega_order = static_cast<int>(order);
        break;
    }
    if (c.omega_order == 0) {  // 2pi always maps S onto itself
        c.theta0 = kTwoPi;
        c.omega_order = 1;
    }
    if (n % c.omega_order != 0)
        throw std::logic_error("constellation: rotation group does not divide the point set");

    // Sector partition. Points exactly on a boundary snap onto it so the
    // half-open convention applies deterministically.
    const int per = n / c.omega_order;
    c.subsets.assign(static_cast<std::size_t>(c.omega_order), {});
    std::vector<int> first;
    for (int j = 0; j < n; ++j) {
        double p = phase_of(c.points[static_cast<std::size_t>(j)]);
        double k = p / c.theta0;
        if (std::abs(k - std::round(k)) < kAngleTol) k = std::round(k);
        int sector = static_cast<int>(std::floor(k));
        if (sector >= c.omega_order) sector = 0;
        if (sector == 0) first.push_back(j);
    }
    if (static_cast<int>(first.size()) != per)
        throw std::logic_error("constellation: uneven sector occupancy");
    std::sort(first.begin(), first.end(), [&](int a, int b) {
        const double pa = phase_of(c.points[static_cast<std::size_t>(a)]);
        const double pb = phase_of(c.points[static_cast<std::size_t>(b)]);
        if (std::abs(pa - pb) > kAngleTol) return pa < pb;
        return std::abs(c.points[static_cast<std::size_t>(a)]) < std::abs(c.points[static_cast<std::size_t>(b)]);
    });
    c.subsets[0] = first;
    // Build sector i by rotating sector 0, preserving member order so that
    // subsets[i][m] = e^{j i theta0} subsets[0][m].
    for (int i = 1; i < c.omega_order; ++i) {
        const cplx rot = std::polar(1.0, i * c.theta0);
        for (int j : first)
            c.subsets[static_cast<std::size_t>(i)].push_back(
                match_index(c.points, c.points[static_cast<std::size_t>(j)] * rot));
    }

    c.reference_index = first.front();
    return c;
}

cplx sample_symbol(const Constellation& c, Rng& rng) {
    return c.points[rng.index(c.points.size())];
}

}  // namespace juice
