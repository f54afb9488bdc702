#pragma once

#include <string>

#include "hirzewahl/divisors.hpp"

namespace hirzewahl {

struct CohomologyTriple {
    Int h0;
    Int h1;
    Int h2;
    Int chi;
};

/// Euler characteristic of a line bundle, 1 + (D^2 - D.K)/2.
Int chi_line(const HirzebruchSurface& s, const DivisorClass& d);
Int chi_line(const BlownSurface& s, const DivisorClass& d);

/// Cohomology of a line bundle on F_n itself.  h0 by fiberwise lattice-point
/// counting, h2 by Serre duality, h1 derived from chi.  A negative derived h1
/// is an internal error, not a value.
CohomologyTriple h_line(const HirzebruchSurface& s, const DivisorClass& d);

/// chi of the cotangent sheaf twisted by D: closed form D^2 - (2 + delta).
Int chi_omega_twist(const HirzebruchSurface& s, const DivisorClass& d);
Int chi_omega_twist(const BlownSurface& s, const DivisorClass& d);

/// Independent evaluation of the same chi through rank-2 Riemann-Roch with
/// c1 = K + 2D and c2 = 4 + delta + K.D + D^2; cross-checked against the
/// closed form by the test suite.
Int chi_omega_twist_chern(const HirzebruchSurface& s, const DivisorClass& d);
Int chi_omega_twist_chern(const BlownSurface& s, const DivisorClass& d);

/// Dimension table for the twisted cotangent bundles attached to a
/// delta-nodal curve of class aC0 + bF.  The values follow the closed
/// formulas in terms of g and C^2; they are cohomology dimensions only when
/// `hypothesis` holds, otherwise the table is a formal evaluation.
struct DimTable {
    bool hypothesis = false;
    Int h0_twist_once;    // sections of Omega^1(2K + normalization)
    Int h1_twist_once;
    Int h2_twist_once;
    Int h0_twist_twice;   // sections of Omega^1(2K + 2*normalization)
    Int h1_twist_twice;
    Int h2_twist_twice;
    Int h0_restriction;   // sections of the twice-twisted bundle on the curve
    Int h1_restriction;
    std::string note;
};

DimTable dim_table(long n, long a, long b, long delta);

}  // namespace hirzewahl
