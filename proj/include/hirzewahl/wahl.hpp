#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hirzewahl/divisors.hpp"

namespace hirzewahl {

struct Hypothesis {
    std::string name;
    std::string text;
    bool satisfied = false;
};

/// Corank of the Wahl map of the normalization, asserted only when every
/// hypothesis holds.  The value is the anticanonical section count of the
/// base surface: 9 for n <= 2, n + 6 for n >= 3.
struct CorankReport {
    std::vector<Hypothesis> hypotheses;
    std::optional<Int> corank;
    Int g;
    Int g_tilde;
    std::string notes;

    bool fired() const { return corank.has_value(); }
};

/// Corank for a delta-nodal curve: a >= 6 and
/// b >= max{(a+7)n, (a-1)n + delta + 2, 6*delta - 3n + 3}.
CorankReport corank_delta_nodal(long n, long a, long b, long delta);

/// Weaker bounds available for a single node: a >= 6 and
/// b >= max{(a-2)n + 6, an + 3}.
CorankReport corank_one_nodal(long n, long a, long b);

/// Regime where the restriction map on twisted forms is surjective, so the
/// corank contribution from it vanishes: many nodes relative to the class.
bool corank_zero_regime(long n, long a, long b, long delta);

struct EmbeddingVerdict {
    bool cannot_embed = false;
    std::optional<Int> corank_source;  // corank value on F_n
    std::optional<Int> corank_target;  // corank value it would need on F_m
    std::string reason;
};

/// If the delta-nodal corank fires on F_n and m >= 4, m != n, the curve
/// cannot live on F_m as a delta-nodal curve: the corank values disagree.
EmbeddingVerdict embedding_obstruction(long n, long m, long a, long b, long delta);

struct ConjectureResult {
    Int lhs;  // anticanonical section count of F_n (the corank)
    Int rhs;  // anticanonical section count of the blow-up at seeded points
    bool holds = false;
    std::uint64_t seed = 0;
};

/// The corank lower bound against the blow-up's anticanonical sections.
ConjectureResult wahl_conjecture_check(long n, long delta, std::uint64_t seed);

struct WahlDims {
    Int wedge_dim;     // g(g-1)/2
    Int codomain_dim;  // 5g - 5
    bool surjectivity_possible = false;
};

/// Dimension count for the Wahl map of a curve of geometric genus >= 2.
WahlDims wahl_dims(const Int& g_tilde);

/// Closed-form anticanonical section count of F_n: 9 for n <= 2, else n + 6.
Int anticanonical_h0(long n);

}  // namespace hirzewahl
