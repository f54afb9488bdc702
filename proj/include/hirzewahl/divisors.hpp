#pragma once

#include <vector>

#include "hirzewahl/surfaces.hpp"

namespace hirzewahl {

/// Divisor class a*C0 + b*F on F_n, or a*s^*C0 + b*s^*F - sum_j m_j E_j on a
/// blow-up.  Positive m_j means the class subtracts m_j copies of the j-th
/// exceptional curve.
struct DivisorClass {
    Int a;
    Int b;
    std::vector<Int> m;

    DivisorClass() : a(0), b(0) {}
    DivisorClass(Int a_, Int b_) : a(std::move(a_)), b(std::move(b_)) {}
    DivisorClass(Int a_, Int b_, std::vector<Int> m_)
        : a(std::move(a_)), b(std::move(b_)), m(std::move(m_)) {}

    /// Uniform-multiplicity constructor: a, b, then m_j = mult for j < delta.
    static DivisorClass uniform(Int a_, Int b_, long delta, const Int& mult) {
        return DivisorClass(std::move(a_), std::move(b_),
                            std::vector<Int>(static_cast<std::size_t>(delta), mult));
    }

    bool operator==(const DivisorClass& o) const { return a == o.a && b == o.b && m == o.m; }
};

DivisorClass operator+(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator-(const DivisorClass& x, const DivisorClass& y);
DivisorClass operator*(const Int& c, const DivisorClass& x);

/// Intersection pairing.  C0^2 = -n, C0.F = 1, F^2 = 0, E_j^2 = -1 and the
/// exceptional curves are mutually orthogonal and orthogonal to pullbacks.
Int intersect(const DivisorClass& d1, const DivisorClass& d2, const HirzebruchSurface& s);
Int intersect(const DivisorClass& d1, const DivisorClass& d2, const BlownSurface& s);

DivisorClass canonical(const HirzebruchSurface& s);
DivisorClass canonical(const BlownSurface& s);

/// The divisor classes attached to a delta-nodal curve of class aC0 + bF:
/// the pullback, the normalization (pullback minus twice the exceptional
/// divisor), the canonical class, and the adjoint twists used throughout.
struct NodalClasses {
    BlownSurface surface;
    DivisorClass pullback;              // s^*C
    DivisorClass normalization;         // s^*C - 2E
    DivisorClass canonical_class;       // K_X
    DivisorClass adjoint;               // K_X + normalization
    DivisorClass twist_once;            // 2K_X + normalization
    DivisorClass twist_twice;           // 2K_X + 2 * normalization
};

NodalClasses nodal_classes(long n, long a, long b, long delta);

struct GenusPair {
    Int arithmetic;
    Int geometric;
};

/// Arithmetic genus by adjunction, g = 1 + ab - a - b + an(1-a)/2, and the
/// geometric genus of the normalization, g - delta.
GenusPair genus(long n, long a, long b, long delta);

}  // namespace hirzewahl
