// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "juice/rng.hpp"

namespace juice {

using cplx = std::complex<double>;

// Symbol set normalized to unit average energy, together with its rotation
// group: theta0 is the smallest angle in (0, 2pi] with e^{j theta0} S = S,
// omega_order * theta0 = 2pi, and subsets[i] lists the indices of the points
// whose phase falls in the half-open sector [i*theta0, (i+1)*theta0).
// Subset i equals subset 0 rotated by i*theta0, member by member.
struct Constellation {
    std::vector<cplx> points;
    double theta0 = 0.0;
    int omega_order = 0;
    std::vector<std::vector<int>> subsets;
    int reference_index = 0;

    int size() const { return static_cast<int>(points.size()); }
    cplx reference_symbol() const { return points[static_cast<std::size_t>(reference_index)]; }

    // Index of the nearest point in Euclidean distance (first wins on ties).
    int nearest_index(cplx v) const;
};

// Accepts "bpsk", "qpsk", "16qam".
Constellation build_constellation(const std::string& name);

// Derives the rotation group and sector partition for an arbitrary point set.
// Rejects sets with fewer than 2 distinct points, a zero point, or zero energy.
Constellation build_constellation(std::vector<cplx> points);

cplx sample_symbol(const Constellation& c, Rng& rng);

}  // namespace juice
