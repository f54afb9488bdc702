#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hirzewahl/divisors.hpp"

namespace hirzewahl {

/// Base-point-freeness on F_n: a >= 0 and b >= a*n.
bool is_bpf(const HirzebruchSurface& s, const DivisorClass& d);

/// Very ampleness on F_n: a >= 1 and b > a*n.  Multiples of the fiber
/// (a = 0) are composed with the ruling and never very ample.
bool is_very_ample(const HirzebruchSurface& s, const DivisorClass& d);

struct DecompositionABM {
    DivisorClass a_part;  // floor(a/3) C0 + floor(b/3) F
    DivisorClass b_part;  // remainder so that 2*a_part + b_part = aC0 + bF
    DivisorClass m_class; // pullback of the curve class minus 3E
};

DecompositionABM abm_decomposition(long a, long b, long delta = 0);

/// Reider-style certificate for very ampleness of D on the blow-up.
/// n_class is N = D - K; the verdict requires N^2 >= 10 and an empty blocker
/// list, where blockers are candidate curve classes that either meet N in
/// degree < 2 or realize the excluded pair (N.G, G^2) = (2, 0).
struct ReiderReport {
    DivisorClass n_class;
    Int n_squared;
    struct Blocker {
        DivisorClass curve;
        Int n_dot;
        Int self_int;
        std::string family;
    };
    std::vector<Blocker> blockers;
    bool verdict = false;
    bool conclusive = true;
    std::string note;
};

ReiderReport reider_very_ample(const BlownSurface& x, const DivisorClass& d);

/// Nakai-Moishezon ampleness test on the one-point blow-up (a toric surface,
/// so ample implies very ample there).  Candidate curves: the fiber, the
/// fiber through the point, the special section, the exceptional curve, and
/// the cone alpha >= 1, beta >= alpha*n, gamma <= alpha.
bool nakai_moishezon_delta1(const BlownSurface& x, const DivisorClass& d);

struct JetCertificate {
    bool jet_ample = false;
    long jet_order = 0;          // 2*delta - 1
    DivisorClass jet_part;       // (2d-1) C0 + (2dn + 2d - n - 1) F, k-jet ample factor
    Int spanned_coeff_a;         // 2a - 3 - 2*delta, must be >= 0
    Int spanned_coeff_b;         // 2b - 3 - n - 2*delta*n - 2*delta
    bool globally_generated = false;  // the two bounds above against the twist
};

/// Sufficient condition for the twice-twisted cotangent bundle to be
/// (2*delta - 1)-jet ample at delta points: a >= delta + 2 and
/// b >= (a-1)n + delta + 2.
JetCertificate jet_ample_F(long n, long a, long b, long delta);

/// The full sufficient-condition chain for surjectivity of the Gaussian map
/// of the adjoint bundle: hypothesis a >= 6, b >= max{(a+7)n, 6*delta-3n+3},
/// plus very-ampleness certificates for the decomposition pieces.  For
/// delta = 0 the pieces are checked on F_n directly.
struct PipelineReport {
    bool hypothesis = false;
    std::string hypothesis_detail;
    struct Sub {
        std::string name;
        bool verdict = false;
        std::optional<ReiderReport> reider;
    };
    std::vector<Sub> subchecks;
    std::vector<std::string> failed;
    bool verdict = false;
};

PipelineReport surjectivity_pipeline(long n, long a, long b, long delta);

}  // namespace hirzewahl
