#pragma once
// Frequency -> time transforms: s(t) = 2 * integral_0^{B(1+a)} S(f) cos(2 pi f t) df,
// integrated per segment so the band-edge derivative singularities sit on
// panel boundaries; plus ISI sampling and the decay-exponent estimator.

#include <array>
#include <vector>

#include "nyq/pulse.hpp"

namespace nyq {

enum class QuadScheme { composite_trapezoid, gauss_legendre };

struct QuadratureConfig {
    int nodes_per_segment = 4096;  // per transition segment, >= 64
    QuadScheme scheme = QuadScheme::gauss_legendre;
    void validate() const;  // throws std::domain_error
};

struct ImpulseGrid {
    double dt = 0.0;              // time step, seconds
    int n = 0;                    // sample count, odd, centered on t = 0
    std::vector<double> samples;  // s(t) values
    double T = 1.0;               // symbol period
    int center() const { return (n - 1) / 2; }
    double t(int i) const { return (i - center()) * dt; }
};

struct IsiSamples {
    double tau = 0.0;          // timing offset, seconds
    int k_min = 0, k_max = 0;  // symbol index bounds, k_min <= 0 <= k_max
    std::vector<double> g;     // g_k = s(tau + k T), k = k_min..k_max
};

// Precomputed quadrature plan for one (pulse, params, config): frozen nodes
// f_i and coefficients 2 w_i S(f_i) over the two transition segments; the
// passband integral has the closed form 2 T sin(2 pi f1 t) / (2 pi t).
struct QuadPlan {
    double T = 1.0;
    double f1 = 0.0;             // passband edge B(1-a)
    std::vector<double> nodes;   // quadrature abscissae (frequency)
    std::vector<double> coef;    // 2 * weight * S(node)
};
QuadPlan make_plan(PulseId id, const PulseParams& p, const QuadratureConfig& q);
double plan_eval(const QuadPlan& plan, double t);

// s(t); raised_cosine uses its closed form (never quadrature)
double impulse_at(PulseId id, const PulseParams& p, const QuadratureConfig& q, double t);
// test hook: force the quadrature path regardless of id (RC oracle check)
double impulse_at_quadrature(PulseId id, const PulseParams& p,
                             const QuadratureConfig& q, double t);
// closed-form raised-cosine impulse response
double raised_cosine_impulse(const PulseParams& p, double t);

// Uniform grid over [-span*T, span*T]; pointwise equal to impulse_at within
// 1e-12 (same quadrature). Throws std::length_error past the sample cap.
ImpulseGrid impulse_grid(PulseId id, const PulseParams& p, const QuadratureConfig& q,
                         int span_symbols, int samples_per_symbol);

// g_k = s(tau + k T) for k in [k_min, k_max] (index 0 included)
IsiSamples isi_samples(PulseId id, const PulseParams& p, const QuadratureConfig& q,
                       double tau, int k_min, int k_max);

// Log-log slope of the inter-zero extrema envelope of s over [t_min, t_max];
// suppressed-lobe points (fit residual < -0.5) are dropped and the slope
// refitted, which stabilizes pulses whose spectra produce near-double zeros.
// Requires t_min >= 5 T, t_max >= 2 t_min, and at least 8 extrema in range.
double decay_exponent(PulseId id, const PulseParams& p, const QuadratureConfig& q,
                      double t_min, double t_max);

// rows of {epsilon, |S'(B(1-a)+eps)|, |S'(B(1+a)-eps)|} for the acsch_asech
// analytic derivative; magnitudes grow without bound as eps -> 0
std::vector<std::array<double, 3>> derivative_divergence_check(
    const PulseParams& p, const std::vector<double>& epsilons);

}  // namespace nyq
