#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hirzewahl/numeric.hpp"

namespace hirzewahl {

struct Range {
    long lo = 0;
    long hi = 0;
};

struct ScanConfig {
    Range n;
    Range a;
    Range b;
    Range delta;
    std::uint64_t seed = 42;
    long jobs = 1;
};

struct ScanRow {
    long n = 0, a = 0, b = 0, delta = 0;
    Int g;
    Int g_tilde;
    bool thm_fired = false;
    std::optional<Int> corank;
    bool reider_a = false;
    bool reider_b = false;
    std::string notes;
};

void validate(const ScanConfig& cfg);

/// Evaluates every tuple of the four ranges.  Tuples may be computed
/// concurrently (cfg.jobs workers); rows come back in sorted tuple order
/// regardless of scheduling.
std::vector<ScanRow> run_scan(const ScanConfig& cfg);

extern const char* const kScanTsvHeader;

std::string scan_tsv(const std::vector<ScanRow>& rows);

}  // namespace hirzewahl
