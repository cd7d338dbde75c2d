#include "nyq/eye.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nyq {

void EyeConfig::validate() const {
    // the production floor (0 or >= 32) is enforced at the CLI; the library
    // accepts any K >= 0 so the small-K oracles and the shallow-truncation
    // calibration report remain expressible
    if (truncation_K < 0) throw std::domain_error("truncation_K must be >= 0");
    if (phase_points < 64) throw std::domain_error("phase_points must be >= 64");
    if (phase_points % 2 != 0)
        throw std::domain_error("phase_points must be even (grid includes 0, +-T/2)");
}

namespace {

// shared layout: grid over [-(K+1)T, (K+1)T] at phase_points samples per
// symbol so phase j and interferer offset kT land on exact sample indices
struct EyeGridView {
    ImpulseGrid grid;
    int pps, K, c;
};

EyeGridView make_view(PulseId id, const PulseParams& p, const EyeConfig& cfg,
                      const QuadratureConfig& q) {
    cfg.validate();
    EyeGridView v;
    v.pps = cfg.phase_points;
    v.K = cfg.truncation_K;
    v.grid = impulse_grid(id, p, q, v.K + 1, v.pps);
    v.c = v.grid.center();
    return v;
}

void fill_metrics(EyeReport& r) {
    r.eye_width = eye_width(r);
    r.max_distortion = max_distortion(r);
}

}  // namespace

EyeReport eye_boundaries(PulseId id, const PulseParams& p, const EyeConfig& cfg,
                         const QuadratureConfig& q) {
    const EyeGridView v = make_view(id, p, cfg, q);
    const int h = v.pps / 2;
    EyeReport r;
    r.phase.resize(2 * h + 1);
    r.inner.resize(2 * h + 1);
    r.outer.resize(2 * h + 1);
    for (int j = -h; j <= h; ++j) {
        const double s0 = v.grid.samples[v.c + j];
        double D = 0.0;
        for (int k = 1; k <= v.K; ++k)
            D += std::fabs(v.grid.samples[v.c + j + k * v.pps]) +
                 std::fabs(v.grid.samples[v.c + j - k * v.pps]);
        r.phase[j + h] = static_cast<double>(j) / v.pps;
        r.inner[j + h] = s0 - D;
        r.outer[j + h] = s0 + D;
    }
    fill_metrics(r);
    return r;
}

EyeReport eye_boundaries_bruteforce(PulseId id, const PulseParams& p,
                                    const EyeConfig& cfg, const QuadratureConfig& q) {
    if (cfg.truncation_K > 12)
        throw std::domain_error("brute-force eye oracle limited to K <= 12");
    const EyeGridView v = make_view(id, p, cfg, q);
    const int h = v.pps / 2;
    const int n_int = 2 * v.K;
    EyeReport r;
    r.phase.resize(2 * h + 1);
    r.inner.resize(2 * h + 1);
    r.outer.resize(2 * h + 1);
    for (int j = -h; j <= h; ++j) {
        const double s0 = v.grid.samples[v.c + j];
        double lo = s0, hi = s0;
        for (unsigned pat = 0; pat < (1u << n_int); ++pat) {
            double sum = s0;
            for (int b = 0; b < n_int; ++b) {
                const int k = (b < v.K) ? (b + 1) : -(b - v.K + 1);
                const double sk = v.grid.samples[v.c + j + k * v.pps];
                sum += (pat & (1u << b)) ? sk : -sk;
            }
            lo = std::min(lo, sum);
            hi = std::max(hi, sum);
        }
        r.phase[j + h] = static_cast<double>(j) / v.pps;
        r.inner[j + h] = lo;
        r.outer[j + h] = hi;
    }
    fill_metrics(r);
    return r;
}

double eye_width(const EyeReport& r) {
    const int n = static_cast<int>(r.inner.size());
    const int i0 = (n - 1) / 2;  // phase 0
    if (!(r.inner[i0] > 0.0)) return 0.0;
    int iL = i0, iR = i0;
    while (iL > 0 && r.inner[iL - 1] > 0.0) --iL;
    while (iR < n - 1 && r.inner[iR + 1] > 0.0) ++iR;
    double tL = r.phase[iL];
    if (iL > 0) {  // linear interpolation into the closed region
        const double f = r.inner[iL] / (r.inner[iL] - r.inner[iL - 1]);
        tL = r.phase[iL] - f * (r.phase[iL] - r.phase[iL - 1]);
    }
    double tR = r.phase[iR];
    if (iR < n - 1) {
        const double f = r.inner[iR] / (r.inner[iR] - r.inner[iR + 1]);
        tR = r.phase[iR] + f * (r.phase[iR + 1] - r.phase[iR]);
    }
    return tR - tL;
}

double max_distortion(const EyeReport& r) {
    return *std::max_element(r.outer.begin(), r.outer.end());
}

}  // namespace nyq
