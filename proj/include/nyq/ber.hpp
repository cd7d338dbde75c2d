#pragma once
// BER under deterministic timing offset + AWGN for binary antipodal
// signaling: characteristic-function Fourier series over the bounded ISI
// sum, plus a bit-reproducible Monte Carlo oracle and the table driver.

#include <cstdint>
#include <string>
#include <vector>

#include "nyq/spectral.hpp"

namespace nyq {

struct BerConfig {
    double snr_db = 15.0;            // amplitude SNR at the sampler: sigma = 10^(-snr/20)
    int n1 = -100, n2 = 100;         // interferer index bounds, n1 <= -1, n2 >= 1
    int nm = 23;                     // nonzero series terms (odd harmonics m = 2j-1)
    double range_guard_sigmas = 8.0; // noise guard width in the series half-range
    double tau_over_T = 0.0;         // timing offset, |tau/T| < 1/2
    void validate() const;           // throws std::domain_error
};

struct BerResult {
    double pe = 0.0;                  // error probability, [0, 1/2]
    double last_term_magnitude = 0.0; // |final series contribution to pe|
    bool converged = true;            // last_term_magnitude < 1e-3 * pe
    BerConfig config_echo;
};

// Pe = 1/2 - (2/pi) sum_{j=1..nm} exp(-(m w0 sigma)^2/2) sin(m w0 g0)/m *
//      prod_{k != 0} cos(m w0 g_k),  m = 2j-1,  w0 = pi / D,
//      D = g0 + sum|g_k| + range_guard_sigmas * sigma.
// Evaluated at +|tau| (s is even, so Pe(tau) = Pe(-tau) holds exactly).
// Small-sigma fast path: when the no-ISI bound Q((g0 - sum|g_k|)/sigma) is
// below 1e-13 the truncated series only rings, so that bound is returned.
// Throws std::domain_error if D <= 0.
BerResult ber_series(PulseId id, const PulseParams& p, const QuadratureConfig& q,
                     const BerConfig& cfg);

struct McResult {
    double pe = 0.0;
    double ci_half_width = 0.0;  // 95% normal-approximation half width
    long long errors = 0;
    long long trials = 0;
};

// b0 = +1, independent +-1 interferers on [n1, n2], Gaussian noise, count
// sign errors; bit-for-bit reproducible given (seed) regardless of schedule
// (fixed-size blocks each with its own counter-derived generator).
McResult ber_monte_carlo(PulseId id, const PulseParams& p, const QuadratureConfig& q,
                         const BerConfig& cfg, long long trials, std::uint64_t seed);

struct BerCell {
    PulseId id{};
    double alpha = 0.0;
    double tau_over_T = 0.0;
    BerResult result;
    bool ok = false;          // false: error captured below, result unset
    std::string error;
    bool best_in_column = false;  // minimal Pe among pulses at (alpha, tau)
};

struct BerTable {
    std::vector<PulseId> ids;
    std::vector<double> alphas;
    std::vector<double> taus;
    std::vector<BerCell> cells;  // column-major: [(alpha, tau) column][pulse]
    const BerCell& at(int col, int pulse) const {
        return cells[col * ids.size() + pulse];
    }
    int columns() const { return static_cast<int>(alphas.size() * taus.size()); }
};

// full (alpha x tau) x pulse cross product; per-cell errors are captured,
// not propagated; best-in-column flags mark the minimum Pe per column
BerTable ber_table(const std::vector<PulseId>& ids, const std::vector<double>& alphas,
                   const std::vector<double>& taus, const BerConfig& cfg,
                   const QuadratureConfig& q = {});

// Gaussian tail Q(x) = 0.5 erfc(x / sqrt(2)) (closed-form no-ISI oracle)
double q_function(double x);

}  // namespace nyq
