#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hirzewahl/divisors.hpp"
#include "hirzewahl/exact_matrix.hpp"

namespace hirzewahl {

/// Chart monomials t^i s^k spanning the sections of aC0 + bF on F_n:
/// 0 <= k <= a and 0 <= i <= b - k*n.
struct MonomialBasis {
    DivisorClass divisor;
    std::vector<std::pair<long, long>> exponents;  // (i, k)

    long size() const { return static_cast<long>(exponents.size()); }
    long index_of(long i, long k) const;  // -1 if absent
};

MonomialBasis monomial_basis(const HirzebruchSurface& s, const DivisorClass& d);

/// delta deterministic points in the dense chart: distinct t, nonzero t and s,
/// numerators and denominators bounded by 1009.
std::vector<ChartPoint> pick_generic_points(long n, long delta, std::uint64_t seed);

/// Constraint matrix imposing vanishing to order orders[j] at points[j]:
/// one row per partial derivative of total order < orders[j], one column per
/// basis monomial.
ExactMatrix vanishing_constraints(const MonomialBasis& basis, const std::vector<ChartPoint>& points,
                                  const std::vector<long>& orders);

/// h0 of the line bundle aC0 + bF - sum m_j E_j on the blow-up at the given
/// points: the section count on F_n minus the rank of the vanishing
/// constraints.
Int h0_blowup(const BlownSurface& x, const DivisorClass& d);

/// Sections as integer coefficient vectors over the monomial basis.
struct SectionBasis {
    MonomialBasis monomials;
    // each section: sorted (monomial index, coefficient) pairs
    std::vector<std::vector<std::pair<long, Int>>> sections;

    long size() const { return static_cast<long>(sections.size()); }
};

/// Basis of the sections of aC0 + bF vanishing to order m_j at points[j].
/// Simple vanishing at points on distinct fibers admits a small-height
/// product basis; everything else goes through exact kernel elimination.
SectionBasis section_basis(const HirzebruchSurface& s, const DivisorClass& d,
                           const std::vector<ChartPoint>& points);

}  // namespace hirzewahl
