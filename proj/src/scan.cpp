#include "hirzewahl/scan.hpp"

#include <atomic>
#include <thread>

#include "hirzewahl/positivity.hpp"
#include "hirzewahl/wahl.hpp"

namespace hirzewahl {

const char* const kScanTsvHeader = "n\ta\tb\tdelta\tg\tg_tilde\tthmA\tcorank\treider_A\treider_B\tnotes";

void validate(const ScanConfig& cfg) {
    for (const Range* r : {&cfg.n, &cfg.a, &cfg.b, &cfg.delta}) {
        if (r->lo < 0 || r->hi < 0)
            throw std::invalid_argument("scan: range bounds must be nonnegative");
        if (r->lo > r->hi) throw std::invalid_argument("scan: range lower bound exceeds upper bound");
    }
    if (cfg.jobs < 1) throw std::invalid_argument("scan: jobs must be >= 1");
}

namespace {

long width(const Range& r) { return r.hi - r.lo + 1; }

ScanRow evaluate(long n, long a, long b, long delta) {
    ScanRow row;
    row.n = n;
    row.a = a;
    row.b = b;
    row.delta = delta;

    GenusPair gp = genus(n, a, b, delta);
    row.g = gp.arithmetic;
    row.g_tilde = gp.geometric;

    CorankReport rep = corank_delta_nodal(n, a, b, delta);
    row.thm_fired = rep.fired();
    row.corank = rep.corank;

    DecompositionABM abm = abm_decomposition(a, b, delta);
    BlownSurface x = BlownSurface::generic(HirzebruchSurface(n), delta);
    row.reider_a =
        reider_very_ample(x, DivisorClass::uniform(abm.a_part.a, abm.a_part.b, delta, 1)).verdict;
    row.reider_b =
        reider_very_ample(x, DivisorClass::uniform(abm.b_part.a, abm.b_part.b, delta, 1)).verdict;

    std::vector<std::string> notes;
    notes.push_back(rep.notes);
    if (delta == 1 && !row.thm_fired && corank_one_nodal(n, a, b).fired())
        notes.push_back("one-nodal bounds apply");
    if (corank_zero_regime(n, a, b, delta)) notes.push_back("restriction-surjective regime");
    if (row.reider_a != row.reider_b) notes.push_back("reider frontiers differ");
    for (std::size_t i = 0; i < notes.size(); ++i)
        row.notes += (i ? "; " : "") + notes[i];
    return row;
}

}  // namespace

std::vector<ScanRow> run_scan(const ScanConfig& cfg) {
    validate(cfg);
    long wn = width(cfg.n), wa = width(cfg.a), wb = width(cfg.b), wd = width(cfg.delta);
    long total = wn * wa * wb * wd;
    std::vector<ScanRow> rows(static_cast<std::size_t>(total));

    auto work = [&](std::atomic<long>& cursor) {
        for (;;) {
            long idx = cursor.fetch_add(1);
            if (idx >= total) return;
            long rest = idx;
            long delta = cfg.delta.lo + rest % wd; rest /= wd;
            long b = cfg.b.lo + rest % wb; rest /= wb;
            long a = cfg.a.lo + rest % wa; rest /= wa;
            long n = cfg.n.lo + rest;
            rows[static_cast<std::size_t>(idx)] = evaluate(n, a, b, delta);
        }
    };

    std::atomic<long> cursor{0};
    long workers = std::min(cfg.jobs, total > 0 ? total : 1);
    if (workers <= 1) {
        work(cursor);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (long t = 0; t < workers; ++t) pool.emplace_back([&] { work(cursor); });
        for (auto& th : pool) th.join();
    }
    return rows;
}

std::string scan_tsv(const std::vector<ScanRow>& rows) {
    std::string out = kScanTsvHeader;
    out += '\n';
    for (const auto& r : rows) {
        out += std::to_string(r.n) + '\t' + std::to_string(r.a) + '\t' + std::to_string(r.b) + '\t' +
               std::to_string(r.delta) + '\t' + r.g.get_str() + '\t' + r.g_tilde.get_str() + '\t' +
               (r.thm_fired ? "true" : "false") + '\t' + (r.corank ? r.corank->get_str() : "-") +
               '\t' + (r.reider_a ? "true" : "false") + '\t' + (r.reider_b ? "true" : "false") +
               '\t' + (r.notes.empty() ? "-" : r.notes) + '\n';
    }
    return out;
}

}  // namespace hirzewahl
