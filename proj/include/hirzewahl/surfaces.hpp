#pragma once

#include <optional>
#include <vector>

#include "hirzewahl/numeric.hpp"

namespace hirzewahl {

/// Point in the dense torus chart (t, s): t parametrizes the base, s = 0 is
/// the section disjoint from the special section, which lies outside the
/// chart entirely.  Points with t != 0, s != 0 avoid the special section,
/// the disjoint section and the fiber at infinity.
struct ChartPoint {
    Rat t;
    Rat s;
};

struct HirzebruchSurface {
    long n = 0;  // twist of the ruled surface, n >= 0

    explicit HirzebruchSurface(long twist) : n(twist) {
        if (n < 0) throw std::invalid_argument("HirzebruchSurface: n must be >= 0");
    }
};

/// Blow-up of a Hirzebruch surface at delta distinct points.  Coordinates are
/// optional: most lattice computations need only delta.  Positivity checks
/// additionally require the genericity declaration (points pairwise on
/// distinct fibers and off the special section).
struct BlownSurface {
    HirzebruchSurface base;
    long delta = 0;
    std::optional<std::vector<ChartPoint>> points;
    bool generic_declared = false;

    static BlownSurface generic(HirzebruchSurface f, long delta);
    static BlownSurface at_points(HirzebruchSurface f, std::vector<ChartPoint> pts);
    static BlownSurface undeclared(HirzebruchSurface f, long delta);
};

/// Validates the chart-point invariants: pairwise distinct t, all s nonzero.
void validate_points(const std::vector<ChartPoint>& pts);

inline BlownSurface BlownSurface::generic(HirzebruchSurface f, long delta) {
    if (delta < 0) throw std::invalid_argument("BlownSurface: delta must be >= 0");
    return BlownSurface{f, delta, std::nullopt, true};
}

inline BlownSurface BlownSurface::undeclared(HirzebruchSurface f, long delta) {
    if (delta < 0) throw std::invalid_argument("BlownSurface: delta must be >= 0");
    return BlownSurface{f, delta, std::nullopt, false};
}

inline void validate_points(const std::vector<ChartPoint>& pts) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].s == 0)
            throw std::invalid_argument("chart point on the s = 0 section");
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            if (pts[i].t == pts[j].t)
                throw std::invalid_argument("chart points share a fiber");
    }
}

inline BlownSurface BlownSurface::at_points(HirzebruchSurface f, std::vector<ChartPoint> pts) {
    validate_points(pts);
    long delta = static_cast<long>(pts.size());
    return BlownSurface{f, delta, std::move(pts), true};
}

}  // namespace hirzewahl
