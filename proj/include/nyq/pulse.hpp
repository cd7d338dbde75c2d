#pragma once
// Pulse family core: Eq.-template spectra built from inner/outer inverse
// hyperbolic compositions G = g(h(x)), continuity constant gamma = G(1/2).
//
// Family members:
//   acsch_log    G(x) = acsch(ln x)
//   acoth_acsch  G(x) = acoth(acsch(x))
//   acsch_asech  G(x) = acsch(asech(x))
//   acos_log     G(x) = acos(1 + ln(1 - x))          (reference)
//   acos_asinh   G(x) = acos(asinh(sinh(1)(1 - x)))  (reference)
//   raised_cosine                                     (closed-form oracle)
//
// S(f) = T                        |f| <= B(1-a)
//      = T(1 - G(u)/(2 gamma))    B(1-a) <= |f| <= B,      u = (|f|-B(1-a))/(2aB)
//      = T G(v)/(2 gamma)         B      <= |f| <= B(1+a), v = (B(1+a)-|f|)/(2aB)
//      = 0                        beyond,   with B = 1/(2T), a = roll-off.

#include <string>

namespace nyq {

enum class PulseId {
    acsch_log,
    acoth_acsch,
    acsch_asech,
    acos_log,
    acos_asinh,
    raised_cosine,
};

inline constexpr PulseId kCompositePulses[5] = {
    PulseId::acsch_log, PulseId::acoth_acsch, PulseId::acsch_asech,
    PulseId::acos_log, PulseId::acos_asinh};
inline constexpr PulseId kAllPulses[6] = {
    PulseId::acsch_log, PulseId::acoth_acsch, PulseId::acsch_asech,
    PulseId::acos_log, PulseId::acos_asinh, PulseId::raised_cosine};

// canonical identifier ("acsch_log", ...); cli_name uses dashes ("acsch-log", "rc")
const char* pulse_name(PulseId id);
const char* pulse_cli_name(PulseId id);
// accepts either spelling; throws std::invalid_argument listing valid names
PulseId pulse_from_name(const std::string& name);

struct PulseParams {
    double alpha = 0.35;  // roll-off, [0, 1]
    double T = 1.0;       // symbol period, seconds
    double B() const { return 1.0 / (2.0 * T); }  // Nyquist frequency
    void validate() const;  // throws std::domain_error
};

// G(x) on [0, 1/2]; x = 0 returns the analytic limit 0, x = 1/2 returns gamma.
// Throws std::domain_error outside [0, 1/2], std::invalid_argument for
// raised_cosine (no composite G).
double composite_G(PulseId id, double x);

// gamma = composite_G(id, 1/2), cached; cache equals a fresh evaluation
// bit-for-bit. Same errors as composite_G for raised_cosine.
double gamma(PulseId id);

// Even in f; limit values at segment boundaries so the result is continuous
// in |f| except for the alpha = 0 rectangle (T below B, T/2 at B, 0 above).
double spectrum(PulseId id, const PulseParams& p, double f);

// Analytic dS/df for acsch_asech, odd in f; 0 in passband/stopband interiors;
// throws std::domain_error at the transition points f = B(1 -+ alpha) where
// the derivative diverges, and for alpha = 0.
double spectrum_derivative_acsch_asech(const PulseParams& p, double f);

}  // namespace nyq
