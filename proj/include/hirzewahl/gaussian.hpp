#pragma once

#include <cstdint>
#include <string>

#include "hirzewahl/sections.hpp"

namespace hirzewahl {

/// Matrix of the Gaussian map f ^ g -> f dg - g df over the dense chart.
/// Columns are ordered pairs (f, g) with f < g from the section basis; rows
/// are chart monomials in two blocks, the dt coefficients followed by the
/// ds coefficients.
ExactMatrix gaussian_matrix(const SectionBasis& basis);

struct GaussianReport {
    long domain_dim = 0;   // sections of the adjoint bundle
    long wedge_dim = 0;    // domain choose 2
    Int target_dim;        // asserted section count of the twisted cotangent bundle
    long rank = 0;         // exact rank of the chart matrix
    bool surjective = false;
    bool asserted = false;  // target_dim is a cohomology dimension only under the hypothesis
    std::uint64_t seed = 0;
    double seconds = 0.0;
    std::string note;
};

/// Assembles the Gaussian matrix for the adjoint bundle of a delta-nodal
/// curve of class aC0 + bF, with nodes at seeded generic points, and
/// compares its exact rank with the expected target dimension.
GaussianReport check_gaussian_surjectivity(long n, long a, long b, long delta, std::uint64_t seed,
                                           long max_wedge = 2000);

}  // namespace hirzewahl
