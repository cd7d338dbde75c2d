// nyqpulse: spectrum / impulse / eye / ber report generator for the
// inverse-hyperbolic Nyquist pulse family. Emits figure-ready CSV and JSON
// with an accompanying run manifest; deterministic for a fixed invocation.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "nyq/ber.hpp"
#include "nyq/eye.hpp"
#include "nyq/pulse.hpp"
#include "nyq/report.hpp"
#include "nyq/spectral.hpp"

namespace {

using nyq::PulseId;
using nyq::PulseParams;
using nyq::QuadratureConfig;
using nyq::ReportTable;
using nyq::RunManifest;

constexpr int kExitUsage = 2;
constexpr int kExitComputeFailed = 3;

// round through the CSV rendering so JSON and CSV carry identical numbers
double csv_round(double v) { return std::strtod(nyq::format_number(v).c_str(), nullptr); }

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
    std::string out;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

std::vector<PulseId> parse_pulses(const std::vector<std::string>& names) {
    std::vector<PulseId> ids;
    ids.reserve(names.size());
    for (const auto& n : names) ids.push_back(nyq::pulse_from_name(n));
    return ids;
}

// ----------------------------------------------------------------- presets
// flat INI: [section] with key = value lines; '#' or ';' comments

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::map<std::string, std::vector<std::pair<std::string, std::string>>> read_preset(
    const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read preset file '" + path + "'");
    std::map<std::string, std::vector<std::pair<std::string, std::string>>> sections;
    std::string line, section;
    while (std::getline(in, line)) {
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("preset line without '=': " + line);
        sections[section].emplace_back(trim(line.substr(0, eq)),
                                       trim(line.substr(eq + 1)));
    }
    return sections;
}

std::vector<std::string> split_list(const std::string& value) {
    std::vector<std::string> items;
    std::string cur;
    for (char c : value) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!cur.empty()) items.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!cur.empty()) items.push_back(cur);
    return items;
}

// Build the effective argv: preset keys for the chosen subcommand are
// injected ahead of the user's own flags and dropped entirely when the same
// flag appears on the command line (flags win).
std::vector<std::string> apply_preset(const std::vector<std::string>& args,
                                      const std::string& subcmd) {
    std::string preset_path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--preset" && i + 1 < args.size()) preset_path = args[i + 1];
        else if (args[i].rfind("--preset=", 0) == 0) preset_path = args[i].substr(9);
    }
    if (preset_path.empty()) return args;
    auto sections = read_preset(preset_path);
    const auto it = sections.find(subcmd);
    if (it == sections.end()) return args;
    auto given = [&](const std::string& flag) {
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) return true;
        return false;
    };
    std::vector<std::string> out;
    out.push_back(args[0]);  // subcommand name leads
    for (const auto& [key, value] : it->second) {
        const std::string flag = "--" + key;
        if (given(flag)) continue;
        out.push_back(flag);
        for (const auto& tok : split_list(value)) out.push_back(tok);
    }
    out.insert(out.end(), args.begin() + 1, args.end());
    return out;
}

// --------------------------------------------------------------- output paths

std::string resolve_out(const std::string& stem) {
    const char* dir = std::getenv("NYQPULSE_OUT_DIR");
    if (dir && *dir && !std::filesystem::path(stem).is_absolute())
        return (std::filesystem::path(dir) / stem).string();
    return stem;
}

struct Emitter {
    RunManifest manifest;
    std::string stem;
    bool csv = true, json = true;
    nlohmann::json data = nlohmann::json::object();

    void add_table(const std::string& name, const ReportTable& t, bool primary) {
        if (csv) {
            const std::string path =
                primary ? stem + ".csv" : stem + "." + name + ".csv";
            nyq::write_csv(path, t);
        }
        data[name] = nyq::table_json(t);
    }
    void finish() {
        manifest.timestamp = nyq::utc_timestamp_now();
        if (csv)
            nyq::write_text_file(stem + ".manifest.json",
                                 nyq::manifest_json(manifest).dump(2) + "\n");
        if (json) nyq::write_json(stem + ".json", manifest, data);
    }
};

Emitter make_emitter(const std::string& command, const std::string& out,
                     const std::string& format) {
    Emitter e;
    e.manifest.command = command;
    e.stem = resolve_out(out);
    e.csv = (format == "csv" || format == "both");
    e.json = (format == "json" || format == "both");
    return e;
}

// ----------------------------------------------------------------- commands

struct SpectrumOpts {
    std::vector<std::string> pulses = {"acsch-log", "acoth-acsch", "acsch-asech",
                                       "acos-log", "acos-asinh"};
    double alpha = 0.35;
    int points = 541;
    std::string out = "spectrum", format = "both", preset;
    QuadratureConfig quad;
};

int run_spectrum(const SpectrumOpts& o) {
    const auto ids = parse_pulses(o.pulses);
    PulseParams p;
    p.alpha = o.alpha;
    p.validate();
    // piecewise-linear f/B grid that hits the breakpoints 1-a, 1, 1+a exactly
    std::vector<double> xs;
    const double span = 1.0 + o.alpha;
    const int total = o.points - 1;
    int na = std::max(1, static_cast<int>(std::lround(total * (1.0 - o.alpha) / span)));
    int nb = std::max(1, static_cast<int>(std::lround(total * o.alpha / span)));
    if (o.alpha == 0.0) nb = 1;
    int nc = std::max(1, total - na - nb);
    for (int i = 0; i < na; ++i) xs.push_back((1.0 - o.alpha) * i / na);
    for (int i = 0; i < nb; ++i) xs.push_back(1.0 - o.alpha + o.alpha * i / nb);
    for (int i = 0; i <= nc; ++i) xs.push_back(1.0 + o.alpha * i / nc);

    ReportTable t;
    t.columns.push_back("f_over_B");
    for (PulseId id : ids) t.columns.push_back(nyq::pulse_cli_name(id));
    for (double x : xs) {
        std::vector<ReportTable::Cell> row;
        row.emplace_back(csv_round(x));
        for (PulseId id : ids)
            row.emplace_back(csv_round(nyq::spectrum(id, p, x * p.B()) / p.T));
        t.rows.push_back(std::move(row));
    }
    Emitter e = make_emitter("spectrum", o.out, o.format);
    e.manifest.quad = o.quad;
    e.manifest.parameters = {{"pulses", join(o.pulses)},
                             {"alpha", nyq::format_number(o.alpha)},
                             {"points", std::to_string(o.points)}};
    e.add_table("spectrum", t, true);
    e.finish();
    return 0;
}

struct ImpulseOpts {
    std::vector<std::string> pulses = {"acsch-log", "acoth-acsch", "acsch-asech",
                                       "acos-log", "acos-asinh"};
    double alpha = 0.35;
    int span = 5, sps = 64;
    std::string out = "impulse", format = "both", preset;
    QuadratureConfig quad;
};

int run_impulse(const ImpulseOpts& o) {
    const auto ids = parse_pulses(o.pulses);
    PulseParams p;
    p.alpha = o.alpha;
    p.validate();

    ReportTable t;
    t.columns.push_back("t_over_T");
    for (PulseId id : ids) t.columns.push_back(nyq::pulse_cli_name(id));
    std::vector<nyq::ImpulseGrid> grids;
    for (PulseId id : ids)
        grids.push_back(nyq::impulse_grid(id, p, o.quad, o.span, o.sps));
    for (int i = 0; i < grids[0].n; ++i) {
        std::vector<ReportTable::Cell> row;
        row.emplace_back(csv_round(grids[0].t(i) / p.T));
        for (const auto& g : grids) row.emplace_back(csv_round(g.samples[i]));
        t.rows.push_back(std::move(row));
    }

    // sidelobe summary: peak |s| between consecutive zero crossings, t > T/2
    ReportTable sl;
    sl.columns = {"pulse", "sidelobe", "peak_magnitude", "t_over_T"};
    const int fine_pps = 2048, fine_span = 6;
    for (PulseId id : ids) {
        const auto g = nyq::impulse_grid(id, p, o.quad, fine_span, fine_pps);
        const int c = g.center();
        int found = 0;
        long long prev_cross = -1;
        for (long long j = fine_pps / 2; j + 1 <= 1LL * fine_span * fine_pps && found < 4;
             ++j) {
            const double a = g.samples[c + j], b = g.samples[c + j + 1];
            if ((a > 0) == (b > 0)) continue;
            if (prev_cross >= 0) {
                double best = -1.0;
                long long bj = -1;
                for (long long i = prev_cross + 1; i <= j; ++i)
                    if (std::fabs(g.samples[c + i]) > best) {
                        best = std::fabs(g.samples[c + i]);
                        bj = i;
                    }
                ++found;
                sl.rows.push_back({ReportTable::Cell(nyq::pulse_cli_name(id)),
                                   ReportTable::Cell(static_cast<double>(found)),
                                   ReportTable::Cell(csv_round(best)),
                                   ReportTable::Cell(csv_round(static_cast<double>(bj) /
                                                               fine_pps))});
            }
            prev_cross = j;
        }
    }

    Emitter e = make_emitter("impulse", o.out, o.format);
    e.manifest.quad = o.quad;
    e.manifest.parameters = {{"pulses", join(o.pulses)},
                             {"alpha", nyq::format_number(o.alpha)},
                             {"span", std::to_string(o.span)},
                             {"sps", std::to_string(o.sps)}};
    e.add_table("grid", t, true);
    e.add_table("sidelobes", sl, false);
    e.finish();
    return 0;
}

struct EyeOpts {
    std::vector<std::string> pulses = {"acsch-log", "acoth-acsch", "acsch-asech",
                                       "acos-log", "acos-asinh"};
    double alpha = 0.35;
    nyq::EyeConfig eye;
    std::string out = "eye", format = "both", preset;
    QuadratureConfig quad;
};

// published eye metrics for the five-pulse comparison at alpha = 0.35
struct RefMetrics {
    PulseId id;
    double width, distortion;
};
constexpr RefMetrics kReferenceTable[] = {
    {PulseId::acos_log, 0.780, 1.467},   {PulseId::acos_asinh, 0.794, 1.475},
    {PulseId::acsch_log, 0.812, 1.460},  {PulseId::acoth_acsch, 0.802, 1.443},
    {PulseId::acsch_asech, 0.800, 1.440},
};

int run_eye(const EyeOpts& o) {
    const auto ids = parse_pulses(o.pulses);
    PulseParams p;
    p.alpha = o.alpha;
    p.validate();
    o.eye.validate();

    std::vector<nyq::EyeReport> reports;
    for (PulseId id : ids) reports.push_back(nyq::eye_boundaries(id, p, o.eye, o.quad));

    ReportTable curves;
    curves.columns.push_back("phase_over_T");
    for (PulseId id : ids) {
        curves.columns.push_back(std::string("inner_") + nyq::pulse_cli_name(id));
        curves.columns.push_back(std::string("outer_") + nyq::pulse_cli_name(id));
    }
    for (size_t i = 0; i < reports[0].phase.size(); ++i) {
        std::vector<ReportTable::Cell> row;
        row.emplace_back(csv_round(reports[0].phase[i]));
        for (const auto& r : reports) {
            row.emplace_back(csv_round(r.inner[i]));
            row.emplace_back(csv_round(r.outer[i]));
        }
        curves.rows.push_back(std::move(row));
    }

    ReportTable metrics;
    metrics.columns = {"pulse", "eye_width", "max_distortion"};
    for (size_t i = 0; i < ids.size(); ++i)
        metrics.rows.push_back({ReportTable::Cell(nyq::pulse_cli_name(ids[i])),
                                ReportTable::Cell(csv_round(reports[i].eye_width)),
                                ReportTable::Cell(csv_round(reports[i].max_distortion))});

    Emitter e = make_emitter("eye", o.out, o.format);
    e.manifest.quad = o.quad;
    e.manifest.eye = o.eye;
    e.manifest.parameters = {{"pulses", join(o.pulses)},
                             {"alpha", nyq::format_number(o.alpha)},
                             {"truncation", std::to_string(o.eye.truncation_K)},
                             {"phase-points", std::to_string(o.eye.phase_points)}};
    e.add_table("curves", curves, true);
    e.add_table("metrics", metrics, false);

    // Calibration context for the five-pulse comparison at alpha = 0.35: the
    // worst-case absolute-sum boundaries keep growing with truncation depth K
    // because these spectra give 1/(t ln^2 t) (new pulses) or t^(-3/2)
    // (references) tails, so deep-K metrics sit systematically below/above the
    // published table, which corresponds to a shallow effective truncation
    // (K ~ 4, i.e. a finite random symbol population). Emit both so the gap
    // is visible in the report itself.
    if (o.alpha == 0.35 && o.eye.truncation_K >= 32) {
        ReportTable cal;
        cal.columns = {"pulse",          "eye_width",       "max_distortion",
                       "k4_eye_width",   "k4_max_distortion", "published_width",
                       "published_distortion"};
        nyq::EyeConfig shallow = o.eye;
        shallow.truncation_K = 4;
        bool any = false;
        for (size_t i = 0; i < ids.size(); ++i) {
            const RefMetrics* ref = nullptr;
            for (const auto& r : kReferenceTable)
                if (r.id == ids[i]) ref = &r;
            if (!ref) continue;
            any = true;
            const auto k4 = nyq::eye_boundaries(ids[i], p, shallow, o.quad);
            cal.rows.push_back({ReportTable::Cell(nyq::pulse_cli_name(ids[i])),
                                ReportTable::Cell(csv_round(reports[i].eye_width)),
                                ReportTable::Cell(csv_round(reports[i].max_distortion)),
                                ReportTable::Cell(csv_round(k4.eye_width)),
                                ReportTable::Cell(csv_round(k4.max_distortion)),
                                ReportTable::Cell(ref->width),
                                ReportTable::Cell(ref->distortion)});
        }
        if (any) {
            e.add_table("calibration", cal, false);
            std::cout << "note: worst-case eye metrics at truncation K="
                      << o.eye.truncation_K
                      << " differ systematically from the published five-pulse "
                         "table, which matches a shallow effective truncation "
                         "(K~4); see the calibration table in the output.\n";
        }
    }
    e.finish();
    return 0;
}

struct BerOpts {
    std::vector<std::string> pulses = {"acsch-log", "acoth-acsch", "acsch-asech",
                                       "acos-log", "acos-asinh"};
    std::vector<double> alphas = {0.25, 0.35, 0.5};
    std::vector<double> taus = {0.05, 0.1, 0.2, 0.3};
    nyq::BerConfig ber;
    long long monte_carlo = 0;
    std::uint64_t seed = 12345;
    std::string out = "ber", format = "both", preset;
    QuadratureConfig quad;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t cell) {
    return seed + cell;  // per-cell seed: master seed + cell index
}

int run_ber(const BerOpts& o) {
    const auto ids = parse_pulses(o.pulses);
    const auto table = nyq::ber_table(ids, o.alphas, o.taus, o.ber, o.quad);

    ReportTable t;
    t.columns = {"alpha", "tau_over_T",     "pulse",          "pe",
                 "last_term_magnitude",     "converged",      "best_in_column",
                 "status"};
    const bool mc = o.monte_carlo > 0;
    if (mc) {
        t.columns.insert(t.columns.end(),
                         {"mc_pe", "mc_ci_half_width", "mc_errors", "mc_trials"});
    }
    int n_ok = 0;
    std::uint64_t cell_index = 0;
    for (const auto& cell : table.cells) {
        std::vector<ReportTable::Cell> row;
        row.emplace_back(csv_round(cell.alpha));
        row.emplace_back(csv_round(cell.tau_over_T));
        row.emplace_back(nyq::pulse_cli_name(cell.id));
        if (cell.ok) {
            ++n_ok;
            row.emplace_back(csv_round(cell.result.pe));
            row.emplace_back(csv_round(cell.result.last_term_magnitude));
            row.emplace_back(static_cast<double>(cell.result.converged ? 1 : 0));
            if (!cell.result.converged)
                std::cerr << "warning: series convergence diagnostic failed for "
                          << nyq::pulse_cli_name(cell.id) << " at alpha=" << cell.alpha
                          << " tau/T=" << cell.tau_over_T << "\n";
        } else {
            row.emplace_back("");
            row.emplace_back("");
            row.emplace_back("");
        }
        row.emplace_back(static_cast<double>(cell.best_in_column ? 1 : 0));
        row.emplace_back(cell.ok ? std::string("ok") : cell.error);
        if (mc) {
            if (cell.ok) {
                PulseParams p;
                p.alpha = cell.alpha;
                nyq::BerConfig c = o.ber;
                c.tau_over_T = cell.tau_over_T;
                const auto m = nyq::ber_monte_carlo(cell.id, p, o.quad, c,
                                                    o.monte_carlo,
                                                    mix_seed(o.seed, cell_index));
                row.emplace_back(csv_round(m.pe));
                row.emplace_back(csv_round(m.ci_half_width));
                row.emplace_back(static_cast<double>(m.errors));
                row.emplace_back(static_cast<double>(m.trials));
            } else {
                row.insert(row.end(), 4, ReportTable::Cell(""));
            }
        }
        t.rows.push_back(std::move(row));
        ++cell_index;
    }

    Emitter e = make_emitter("ber", o.out, o.format);
    e.manifest.quad = o.quad;
    e.manifest.ber = o.ber;
    std::vector<std::string> astr, tstr;
    for (double a : o.alphas) astr.push_back(nyq::format_number(a));
    for (double x : o.taus) tstr.push_back(nyq::format_number(x));
    e.manifest.parameters = {{"pulses", join(o.pulses)},
                             {"alphas", join(astr)},
                             {"taus", join(tstr)},
                             {"snr", nyq::format_number(o.ber.snr_db)},
                             {"monte-carlo", std::to_string(o.monte_carlo)},
                             {"seed", std::to_string(o.seed)}};
    e.add_table("table", t, true);
    e.finish();
    if (n_ok == 0) {
        std::cerr << "error: every table cell failed\n";
        return kExitComputeFailed;
    }
    return 0;
}

void add_quad_flags(CLI::App* cmd, QuadratureConfig& q) {
    cmd->add_option("--nodes", q.nodes_per_segment,
                    "quadrature nodes per transition segment (>= 64)")
        ->check(CLI::Range(64, 1 << 20));
    cmd->add_option_function<std::string>(
           "--quad-scheme",
           [&q](const std::string& s) {
               q.scheme = (s == "composite_trapezoid")
                              ? nyq::QuadScheme::composite_trapezoid
                              : nyq::QuadScheme::gauss_legendre;
           },
           "quadrature scheme")
        ->check(CLI::IsMember({"gauss_legendre", "composite_trapezoid"}));
}

void add_common_flags(CLI::App* cmd, std::string& out, std::string& format,
                      std::string& preset, const char* default_out) {
    out = default_out;
    cmd->add_option("--out", out, "output path stem (files <stem>.csv/.json/...)");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json", "both"}));
    cmd->add_option("--preset", preset, "INI preset file ([section] per command)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nyquist pulse toolkit: inverse-hyperbolic pulse family reports"};
    app.set_version_flag("--version", nyq::kToolVersion);
    app.require_subcommand(1);

    SpectrumOpts so;
    CLI::App* spectrum = app.add_subcommand("spectrum", "frequency response S(f)/T");
    spectrum->add_option("--pulses", so.pulses, "pulse names");
    spectrum->add_option("--alpha", so.alpha, "roll-off factor")
        ->check(CLI::Range(0.0, 1.0));
    spectrum->add_option("--points", so.points, "grid points over [0, 1+alpha]")
        ->check(CLI::Range(16, 1000000));
    add_common_flags(spectrum, so.out, so.format, so.preset, "spectrum");
    add_quad_flags(spectrum, so.quad);

    ImpulseOpts io;
    CLI::App* impulse = app.add_subcommand("impulse", "impulse response s(t)");
    impulse->add_option("--pulses", io.pulses, "pulse names");
    impulse->add_option("--alpha", io.alpha, "roll-off factor")
        ->check(CLI::Range(0.0, 1.0));
    impulse->add_option("--span", io.span, "half span in symbols")
        ->check(CLI::Range(1, 10000));
    impulse->add_option("--sps", io.sps, "samples per symbol")
        ->check(CLI::Range(2, 100000));
    add_common_flags(impulse, io.out, io.format, io.preset, "impulse");
    add_quad_flags(impulse, io.quad);

    EyeOpts eo;
    CLI::App* eye = app.add_subcommand("eye", "eye-diagram boundaries and metrics");
    eye->add_option("--pulses", eo.pulses, "pulse names");
    eye->add_option("--alpha", eo.alpha, "roll-off factor")->check(CLI::Range(0.0, 1.0));
    eye->add_option("--truncation", eo.eye.truncation_K,
                    "interferers per side (0 or >= 32)")
        ->check(CLI::Validator(
            [](std::string& s) {
                const int v = std::atoi(s.c_str());
                return (v == 0 || v >= 32) ? std::string()
                                           : std::string("must be 0 or >= 32");
            },
            "K"));
    eye->add_option("--phase-points", eo.eye.phase_points,
                    "phase grid intervals per symbol (even, >= 64)");
    add_common_flags(eye, eo.out, eo.format, eo.preset, "eye");
    add_quad_flags(eye, eo.quad);

    BerOpts bo;
    CLI::App* ber = app.add_subcommand("ber", "BER under timing offset (series)");
    ber->add_option("--pulses", bo.pulses, "pulse names");
    ber->add_option("--alphas", bo.alphas, "roll-off grid");
    ber->add_option("--taus", bo.taus, "timing offsets tau/T");
    ber->add_option("--snr", bo.ber.snr_db, "SNR in dB");
    ber->add_option("--n1", bo.ber.n1, "lowest interferer index (<= -1)");
    ber->add_option("--n2", bo.ber.n2, "highest interferer index (>= 1)");
    ber->add_option("--nm", bo.ber.nm, "series terms");
    ber->add_option("--guard", bo.ber.range_guard_sigmas, "noise guard sigmas");
    ber->add_option("--monte-carlo", bo.monte_carlo,
                    "Monte Carlo trials per cell (0: off)");
    ber->add_option("--seed", bo.seed, "master Monte Carlo seed");
    add_common_flags(ber, bo.out, bo.format, bo.preset, "ber");
    add_quad_flags(ber, bo.quad);

    // two-phase parse so preset keys (for the chosen subcommand) become
    // defaults that explicit flags override
    std::vector<std::string> args(argv + 1, argv + argc);
    if (!args.empty() && (app.get_subcommand_no_throw(args[0]) != nullptr)) {
        try {
            std::vector<std::string> expanded = apply_preset(args, args[0]);
            std::vector<std::string> reversed(expanded.rbegin(), expanded.rend());
            app.parse(reversed);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e);
            return code == 0 ? 0 : kExitUsage;
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return kExitUsage;
        }
    } else {
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            const int code = app.exit(e);
            return code == 0 ? 0 : kExitUsage;
        }
    }

    try {
        if (spectrum->parsed()) return run_spectrum(so);
        if (impulse->parsed()) return run_impulse(io);
        if (eye->parsed()) return run_eye(eo);
        if (ber->parsed()) return run_ber(bo);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitComputeFailed;
    }
    return 0;
}
