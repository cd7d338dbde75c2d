#include "nyq/ber.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace nyq {

void BerConfig::validate() const {
    if (n1 > -1 || n2 < 1) throw std::domain_error("need n1 <= -1 and n2 >= 1");
    if (nm < 1) throw std::domain_error("nm must be >= 1");
    if (!(std::fabs(tau_over_T) < 0.5))
        throw std::domain_error("|tau_over_T| must be < 1/2");
    if (!(range_guard_sigmas >= 0.0))
        throw std::domain_error("range_guard_sigmas must be >= 0");
}

double q_function(double x) { return 0.5 * std::erfc(x / std::sqrt(2.0)); }

namespace {

// ISI vector at +|tau| (mirrored by evenness), g[0] slot = g_0
struct Isi {
    double g0 = 0.0;
    std::vector<double> gk;  // k = n1..n2, k != 0
};

Isi isi_at(PulseId id, const PulseParams& p, const QuadratureConfig& q,
           const BerConfig& cfg) {
    const double tau = std::fabs(cfg.tau_over_T) * p.T;
    const IsiSamples s = isi_samples(id, p, q, tau, cfg.n1, cfg.n2);
    Isi out;
    out.gk.reserve(s.g.size() - 1);
    for (int k = cfg.n1; k <= cfg.n2; ++k) {
        const double v = s.g[k - cfg.n1];
        if (k == 0)
            out.g0 = v;
        else
            out.gk.push_back(v);
    }
    return out;
}

}  // namespace

BerResult ber_series(PulseId id, const PulseParams& p, const QuadratureConfig& q,
                     const BerConfig& cfg) {
    p.validate();
    q.validate();
    cfg.validate();
    const Isi isi = isi_at(id, p, q, cfg);
    const double sigma = std::pow(10.0, -cfg.snr_db / 20.0);
    double sum_abs = 0.0;
    for (double g : isi.gk) sum_abs += std::fabs(g);

    BerResult r;
    r.config_echo = cfg;
    // small-sigma fast path: series terms stop damping and only ring once the
    // noise CF is flat; the closed-form no-ISI bound is then exact enough
    const double bound = q_function((isi.g0 - sum_abs) / sigma);
    if (bound < 1e-13) {
        r.pe = bound;
        r.last_term_magnitude = 0.0;
        r.converged = true;
        return r;
    }

    const double D = isi.g0 + sum_abs + cfg.range_guard_sigmas * sigma;
    if (!(D > 0.0)) throw std::domain_error("series half-range D <= 0");
    const double w0 = M_PI / D;
    double pe = 0.5, last = 0.0;
    for (int j = 1; j <= cfg.nm; ++j) {
        const int m = 2 * j - 1;
        const double mw = m * w0;
        double term = std::exp(-0.5 * (mw * sigma) * (mw * sigma)) *
                      std::sin(mw * isi.g0) / m;
        for (double g : isi.gk) term *= std::cos(mw * g);
        last = (2.0 / M_PI) * term;
        pe -= last;
    }
    r.pe = pe;
    r.last_term_magnitude = std::fabs(last);
    r.converged = r.last_term_magnitude < 1e-3 * r.pe;
    return r;
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

double u01(std::mt19937_64& rng) {  // uniform in (0, 1]
    return (static_cast<double>(rng() >> 11) + 1.0) * 0x1.0p-53;
}

}  // namespace

McResult ber_monte_carlo(PulseId id, const PulseParams& p, const QuadratureConfig& q,
                         const BerConfig& cfg, long long trials, std::uint64_t seed) {
    p.validate();
    q.validate();
    cfg.validate();
    if (trials < 100000) throw std::domain_error("Monte Carlo needs >= 1e5 trials");
    const Isi isi = isi_at(id, p, q, cfg);
    const double sigma = std::pow(10.0, -cfg.snr_db / 20.0);
    const int n = static_cast<int>(isi.gk.size());

    constexpr long long kBlock = 1 << 16;
    long long errors = 0;
    for (long long base = 0; base < trials; base += kBlock) {
        const long long m = std::min(kBlock, trials - base);
        std::mt19937_64 rng(splitmix64(seed ^ static_cast<std::uint64_t>(base / kBlock)));
        for (long long t = 0; t < m; ++t) {
            double sum = isi.g0;
            std::uint64_t bits = 0;
            int avail = 0;
            for (int k = 0; k < n; ++k) {
                if (avail == 0) {
                    bits = rng();
                    avail = 64;
                }
                sum += (bits & 1u) ? isi.gk[k] : -isi.gk[k];
                bits >>= 1;
                --avail;
            }
            const double u1 = u01(rng), u2 = u01(rng);
            const double noise =
                std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
            if (sum + sigma * noise <= 0.0) ++errors;
        }
    }
    McResult r;
    r.errors = errors;
    r.trials = trials;
    r.pe = static_cast<double>(errors) / static_cast<double>(trials);
    r.ci_half_width = 1.96 * std::sqrt(r.pe * (1.0 - r.pe) / static_cast<double>(trials));
    return r;
}

BerTable ber_table(const std::vector<PulseId>& ids, const std::vector<double>& alphas,
                   const std::vector<double>& taus, const BerConfig& cfg,
                   const QuadratureConfig& q) {
    if (ids.empty() || alphas.empty() || taus.empty())
        throw std::domain_error("ber_table needs nonempty pulse/alpha/tau grids");
    BerTable table;
    table.ids = ids;
    table.alphas = alphas;
    table.taus = taus;
    table.cells.reserve(ids.size() * alphas.size() * taus.size());
    for (double a : alphas) {
        for (double tau : taus) {
            const size_t col_start = table.cells.size();
            for (PulseId id : ids) {
                BerCell cell;
                cell.id = id;
                cell.alpha = a;
                cell.tau_over_T = tau;
                try {
                    PulseParams p;
                    p.alpha = a;
                    BerConfig c = cfg;
                    c.tau_over_T = tau;
                    cell.result = ber_series(id, p, q, c);
                    cell.ok = true;
                } catch (const std::exception& e) {
                    cell.ok = false;
                    cell.error = e.what();
                }
                table.cells.push_back(std::move(cell));
            }
            // flag the minimum-Pe pulse of this (alpha, tau) column
            int best = -1;
            for (size_t i = col_start; i < table.cells.size(); ++i) {
                if (!table.cells[i].ok) continue;
                if (best < 0 || table.cells[i].result.pe <
                                    table.cells[static_cast<size_t>(best)].result.pe)
                    best = static_cast<int>(i);
            }
            if (best >= 0) table.cells[static_cast<size_t>(best)].best_in_column = true;
        }
    }
    return table;
}

}  // namespace nyq
