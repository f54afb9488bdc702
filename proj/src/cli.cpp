#include "hirzewahl/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hirzewahl/cohomology.hpp"
#include "hirzewahl/gaussian.hpp"
#include "hirzewahl/positivity.hpp"
#include "hirzewahl/scan.hpp"
#include "hirzewahl/wahl.hpp"

namespace hirzewahl {

namespace {

using json = nlohmann::ordered_json;

json json_int(const Int& v) {
    if (v.fits_slong_p()) return json(v.get_si());
    return json(v.get_str());
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

DivisorClass parse_divisor(const std::string& text) {
    std::vector<Int> parts;
    std::stringstream ss(text);
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        if (piece.empty()) throw CLI::ValidationError("divisor", "empty component in '" + text + "'");
        try {
            parts.emplace_back(piece);
        } catch (const std::invalid_argument&) {
            throw CLI::ValidationError("divisor", "bad integer '" + piece + "'");
        }
    }
    if (parts.size() < 2) throw CLI::ValidationError("divisor", "expected at least 'a,b'");
    DivisorClass d(parts[0], parts[1]);
    d.m.assign(parts.begin() + 2, parts.end());
    return d;
}

Range parse_range(const std::string& text) {
    auto sep = text.find("..");
    try {
        if (sep == std::string::npos) {
            long v = std::stol(text);
            return Range{v, v};
        }
        return Range{std::stol(text.substr(0, sep)), std::stol(text.substr(sep + 2))};
    } catch (const std::exception&) {
        throw CLI::ValidationError("range", "expected 'lo..hi' or a single integer, got '" + text + "'");
    }
}

std::string format_divisor(const DivisorClass& d) {
    std::string s = "(" + d.a.get_str() + "," + d.b.get_str();
    if (!d.m.empty()) {
        s += ";";
        for (std::size_t j = 0; j < d.m.size(); ++j) s += (j ? "," : "") + d.m[j].get_str();
    }
    return s + ")";
}

json corank_json(const CorankReport& rep) {
    json j;
    j["g"] = json_int(rep.g);
    j["g_tilde"] = json_int(rep.g_tilde);
    json hyps = json::array();
    for (const auto& h : rep.hypotheses)
        hyps.push_back({{"name", h.name}, {"text", h.text}, {"satisfied", h.satisfied}});
    j["hypotheses"] = hyps;
    if (rep.corank) j["corank"] = json_int(*rep.corank);
    j["notes"] = rep.notes;
    return j;
}

void print_corank_text(std::ostream& out, const CorankReport& rep) {
    out << "corank=" << (rep.corank ? rep.corank->get_str() : "-") << "\n";
    out << "g=" << rep.g.get_str() << " g~=" << rep.g_tilde.get_str() << "\n";
    for (const auto& h : rep.hypotheses)
        out << "hypothesis " << h.name << ": " << h.text << " -> " << bool_str(h.satisfied) << "\n";
    out << "notes: " << rep.notes << "\n";
}

json scan_json(const std::vector<ScanRow>& rows) {
    json arr = json::array();
    for (const auto& r : rows) {
        json j;
        j["n"] = r.n;
        j["a"] = r.a;
        j["b"] = r.b;
        j["delta"] = r.delta;
        j["g"] = json_int(r.g);
        j["g_tilde"] = json_int(r.g_tilde);
        j["thmA"] = r.thm_fired;
        j["corank"] = r.corank ? json_int(*r.corank) : json(nullptr);
        j["reider_A"] = r.reider_a;
        j["reider_B"] = r.reider_b;
        j["notes"] = r.notes;
        arr.push_back(std::move(j));
    }
    return arr;
}

void emit(std::ostream& out, const std::string& path, const std::string& payload) {
    if (path.empty()) {
        out << payload;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::runtime_error("cannot open output file '" + path + "'");
    file << payload;
}

long default_jobs() {
    if (const char* env = std::getenv("HIRZEWAHL_JOBS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return v;
        } catch (const std::exception&) {
        }
    }
    return 1;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact intersection theory, cohomology, positivity and Gaussian-map ranks "
                 "for nodal curves on Hirzebruch surfaces"};
    app.require_subcommand(1);

    long n = 0, a = 0, b = 0, delta = 0;
    std::string d_text, d1_text, d2_text;
    std::string format = "text";
    std::string output_path;
    std::uint64_t seed = 42;
    long max_wedge = 2000;
    long jobs = default_jobs();
    bool strict = false;
    std::string rn = "0..0", ra = "0..0", rb = "0..0", rdelta = "0..0";

    int exit_code = 0;

    auto add_common = [&](CLI::App* sub, bool with_format = true) {
        sub->add_option("--n", n, "twist of the base surface")->check(CLI::NonNegativeNumber);
        if (with_format)
            sub->add_option("--format", format, "output format")
                ->check(CLI::IsMember({"text", "json", "tsv"}));
    };

    // intersect
    auto* c_int = app.add_subcommand("intersect", "intersection number of two divisor classes");
    add_common(c_int);
    c_int->add_option("--delta", delta, "number of blown-up points")->check(CLI::NonNegativeNumber);
    c_int->add_option("--d1", d1_text, "first class, 'a,b[,m1,...]'")->required();
    c_int->add_option("--d2", d2_text, "second class, 'a,b[,m1,...]'")->required();
    c_int->callback([&] {
        DivisorClass d1 = parse_divisor(d1_text), d2 = parse_divisor(d2_text);
        long dd = delta;
        if (dd == 0)
            dd = static_cast<long>(std::max(d1.m.size(), d2.m.size()));
        Int v = dd == 0 ? intersect(d1, d2, HirzebruchSurface(n))
                        : intersect(d1, d2, BlownSurface::generic(HirzebruchSurface(n), dd));
        if (format == "json")
            out << json({{"value", json_int(v)}}).dump(2) << "\n";
        else
            out << v.get_str() << "\n";
    });

    // cohomology
    auto* c_coh = app.add_subcommand("cohomology", "h0, h1, h2 and chi of a line bundle on F_n");
    add_common(c_coh);
    c_coh->add_option("--d", d_text, "class 'a,b'")->required();
    c_coh->callback([&] {
        CohomologyTriple t = h_line(HirzebruchSurface(n), parse_divisor(d_text));
        if (format == "json") {
            json j{{"h0", json_int(t.h0)}, {"h1", json_int(t.h1)}, {"h2", json_int(t.h2)},
                   {"chi", json_int(t.chi)}};
            out << j.dump(2) << "\n";
        } else {
            out << "h0=" << t.h0.get_str() << " h1=" << t.h1.get_str() << " h2=" << t.h2.get_str()
                << " chi=" << t.chi.get_str() << "\n";
        }
    });

    // genus
    auto* c_gen = app.add_subcommand("genus", "arithmetic and geometric genus of a nodal curve");
    add_common(c_gen);
    c_gen->add_option("--a", a)->required();
    c_gen->add_option("--b", b)->required();
    c_gen->add_option("--delta", delta)->check(CLI::NonNegativeNumber);
    c_gen->callback([&] {
        GenusPair g = genus(n, a, b, delta);
        if (format == "json")
            out << json({{"g", json_int(g.arithmetic)}, {"g_tilde", json_int(g.geometric)}}).dump(2)
                << "\n";
        else
            out << "g=" << g.arithmetic.get_str() << " g~=" << g.geometric.get_str() << "\n";
    });

    // check-ample
    auto* c_amp = app.add_subcommand(
        "check-ample", "positivity of a class on F_n, or of its pullback minus the exceptional "
                       "curve on the one-point blow-up (--delta 1)");
    add_common(c_amp);
    c_amp->add_option("--d", d_text, "class 'a,b' on F_n")->required();
    c_amp->add_option("--delta", delta)->check(CLI::Range(0l, 1l));
    c_amp->add_flag("--strict", strict, "exit 1 when the verdict is negative");
    c_amp->callback([&] {
        DivisorClass d = parse_divisor(d_text);
        if (delta == 0) {
            bool bpf = is_bpf(HirzebruchSurface(n), d);
            bool va = is_very_ample(HirzebruchSurface(n), d);
            if (format == "json")
                out << json({{"bpf", bpf}, {"very_ample", va}}).dump(2) << "\n";
            else
                out << "bpf=" << bool_str(bpf) << " very_ample=" << bool_str(va) << "\n";
            if (strict && !va) exit_code = 1;
        } else {
            BlownSurface x = BlownSurface::generic(HirzebruchSurface(n), 1);
            DivisorClass lifted(d.a, d.b, {Int(1)});
            bool ample = nakai_moishezon_delta1(x, lifted);
            if (format == "json")
                out << json({{"class", format_divisor(lifted)},
                             {"ample", ample},
                             {"very_ample", ample}})
                           .dump(2)
                    << "\n";
            else
                out << "class=" << format_divisor(lifted) << " ample=" << bool_str(ample)
                    << " very_ample=" << bool_str(ample) << "\n";
            if (strict && !ample) exit_code = 1;
        }
    });

    // check-reider
    auto* c_rei = app.add_subcommand("check-reider",
                                     "very-ampleness pipeline for the decomposition pieces");
    add_common(c_rei);
    c_rei->add_option("--a", a)->required();
    c_rei->add_option("--b", b)->required();
    c_rei->add_option("--delta", delta)->check(CLI::NonNegativeNumber);
    c_rei->add_flag("--strict", strict);
    c_rei->callback([&] {
        PipelineReport rep = surjectivity_pipeline(n, a, b, delta);
        if (format == "json") {
            json j;
            j["hypothesis"] = rep.hypothesis;
            j["hypothesis_detail"] = rep.hypothesis_detail;
            json subs = json::array();
            for (const auto& s : rep.subchecks) {
                json sj{{"name", s.name}, {"verdict", s.verdict}};
                if (s.reider && !s.reider->blockers.empty()) {
                    json bl = json::array();
                    for (const auto& blk : s.reider->blockers)
                        bl.push_back({{"curve", format_divisor(blk.curve)},
                                      {"n_dot", json_int(blk.n_dot)},
                                      {"self_int", json_int(blk.self_int)},
                                      {"family", blk.family}});
                    sj["blockers"] = bl;
                }
                subs.push_back(std::move(sj));
            }
            j["subchecks"] = subs;
            j["failed"] = rep.failed;
            j["verdict"] = rep.verdict;
            out << j.dump(2) << "\n";
        } else {
            out << "hypothesis=" << bool_str(rep.hypothesis) << " (" << rep.hypothesis_detail << ")\n";
            for (const auto& s : rep.subchecks) {
                out << s.name << "=" << bool_str(s.verdict) << "\n";
                if (s.reider)
                    for (const auto& blk : s.reider->blockers)
                        out << "  blocker " << blk.family << " " << format_divisor(blk.curve)
                            << " N.G=" << blk.n_dot.get_str() << " G^2=" << blk.self_int.get_str()
                            << "\n";
            }
            out << "verdict=" << bool_str(rep.verdict) << "\n";
        }
        if (strict && !rep.verdict) exit_code = 1;
    });

    // check-jet
    auto* c_jet = app.add_subcommand("check-jet", "jet-ampleness sufficient condition");
    add_common(c_jet);
    c_jet->add_option("--a", a)->required();
    c_jet->add_option("--b", b)->required();
    c_jet->add_option("--delta", delta)->check(CLI::NonNegativeNumber);
    c_jet->add_flag("--strict", strict);
    c_jet->callback([&] {
        JetCertificate cert = jet_ample_F(n, a, b, delta);
        if (format == "json") {
            json j{{"jet_ample", cert.jet_ample},
                   {"jet_order", cert.jet_order},
                   {"jet_part", format_divisor(cert.jet_part)},
                   {"spanned_coeff_a", json_int(cert.spanned_coeff_a)},
                   {"spanned_coeff_b", json_int(cert.spanned_coeff_b)},
                   {"globally_generated", cert.globally_generated}};
            out << j.dump(2) << "\n";
        } else {
            out << "jet_ample=" << bool_str(cert.jet_ample) << " order=" << cert.jet_order
                << " jet_part=" << format_divisor(cert.jet_part)
                << " spanned=(" << cert.spanned_coeff_a.get_str() << ","
                << cert.spanned_coeff_b.get_str() << ")"
                << " globally_generated=" << bool_str(cert.globally_generated) << "\n";
        }
        if (strict && !cert.jet_ample) exit_code = 1;
    });

    // corank
    auto* c_cor = app.add_subcommand("corank", "corank of the Wahl map of the normalization");
    add_common(c_cor);
    c_cor->add_option("--a", a)->required();
    c_cor->add_option("--b", b)->required();
    c_cor->add_option("--delta", delta)->check(CLI::NonNegativeNumber);
    c_cor->add_flag("--strict", strict);
    c_cor->callback([&] {
        CorankReport rep = corank_delta_nodal(n, a, b, delta);
        std::optional<CorankReport> one;
        if (delta == 1) one = corank_one_nodal(n, a, b);
        if (format == "json") {
            json j;
            j["n"] = n;
            j["a"] = a;
            j["b"] = b;
            j["delta"] = delta;
            json main = corank_json(rep);
            for (auto& [key, value] : main.items()) j[key] = value;
            if (one) j["one_nodal"] = corank_json(*one);
            out << j.dump(2) << "\n";
        } else {
            print_corank_text(out, rep);
            if (one) {
                out << "one-nodal corank=" << (one->corank ? one->corank->get_str() : "-") << "\n";
                for (const auto& h : one->hypotheses)
                    out << "one-nodal hypothesis " << h.name << ": " << h.text << " -> "
                        << bool_str(h.satisfied) << "\n";
            }
        }
        bool fired = rep.fired() || (one && one->fired());
        if (strict && !fired) exit_code = 1;
    });

    // conjecture
    auto* c_con = app.add_subcommand("conjecture",
                                     "anticanonical corank bound against seeded generic points");
    add_common(c_con);
    c_con->add_option("--delta", delta)->check(CLI::NonNegativeNumber);
    c_con->add_option("--seed", seed);
    c_con->add_flag("--strict", strict);
    c_con->callback([&] {
        ConjectureResult r = wahl_conjecture_check(n, delta, seed);
        if (format == "json") {
            json j{{"lhs", json_int(r.lhs)}, {"rhs", json_int(r.rhs)}, {"holds", r.holds},
                   {"seed", r.seed}};
            out << j.dump(2) << "\n";
        } else {
            out << "lhs=" << r.lhs.get_str() << " rhs=" << r.rhs.get_str()
                << " holds=" << bool_str(r.holds) << " seed=" << r.seed << "\n";
        }
        if (strict && !r.holds) exit_code = 1;
    });

    // gaussian-rank
    auto* c_gau = app.add_subcommand("gaussian-rank",
                                     "exact rank of the Gaussian-map matrix of the adjoint bundle");
    add_common(c_gau);
    c_gau->add_option("--a", a)->required();
    c_gau->add_option("--b", b)->required();
    c_gau->add_option("--delta", delta)->check(CLI::NonNegativeNumber);
    c_gau->add_option("--seed", seed);
    c_gau->add_option("--max-wedge", max_wedge, "column budget for the exact elimination");
    c_gau->add_flag("--strict", strict);
    c_gau->callback([&] {
        GaussianReport rep = check_gaussian_surjectivity(n, a, b, delta, seed, max_wedge);
        err << "elapsed_seconds=" << rep.seconds << "\n";
        if (format == "json") {
            json j{{"domain_dim", rep.domain_dim},
                   {"wedge_dim", rep.wedge_dim},
                   {"target_dim", json_int(rep.target_dim)},
                   {"rank", rep.rank},
                   {"surjective", rep.surjective},
                   {"asserted", rep.asserted},
                   {"seed", rep.seed}};
            if (!rep.note.empty()) j["note"] = rep.note;
            out << j.dump(2) << "\n";
        } else {
            out << "domain_dim=" << rep.domain_dim << " wedge_dim=" << rep.wedge_dim
                << " target_dim=" << rep.target_dim.get_str() << " rank=" << rep.rank
                << " surjective=" << bool_str(rep.surjective)
                << " asserted=" << bool_str(rep.asserted) << " seed=" << rep.seed << "\n";
            if (!rep.note.empty()) out << "note: " << rep.note << "\n";
        }
        if (strict && !rep.surjective) exit_code = 1;
    });

    // scan
    auto* c_scan = app.add_subcommand("scan", "evaluate a grid of (n, a, b, delta) tuples");
    c_scan->add_option("--n", rn, "range 'lo..hi' or single value")->required();
    c_scan->add_option("--a", ra, "range")->required();
    c_scan->add_option("--b", rb, "range")->required();
    c_scan->add_option("--delta", rdelta, "range");
    c_scan->add_option("--seed", seed);
    c_scan->add_option("--jobs", jobs, "concurrent workers (env HIRZEWAHL_JOBS)");
    c_scan->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
    c_scan->add_option("--output", output_path, "write to a file instead of standard output");
    c_scan->callback([&] {
        if (format == "text") format = "tsv";
        ScanConfig cfg;
        cfg.n = parse_range(rn);
        cfg.a = parse_range(ra);
        cfg.b = parse_range(rb);
        cfg.delta = parse_range(rdelta);
        cfg.seed = seed;
        cfg.jobs = jobs;
        validate(cfg);
        std::vector<ScanRow> rows = run_scan(cfg);
        if (format == "json")
            emit(out, output_path, scan_json(rows).dump(2) + "\n");
        else
            emit(out, output_path, scan_tsv(rows));
    });

    std::vector<const char*> argv;
    argv.push_back("hirzewahl");
    for (const auto& s : args) argv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << app.help();
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}

}  // namespace hirzewahl
