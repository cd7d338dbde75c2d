#pragma once
// Binary-antipodal eye diagram: worst-case inner/outer boundaries over
// +-1 interferers and the scalar eye-width / max-distortion metrics.

#include <vector>

#include "nyq/spectral.hpp"

namespace nyq {

struct EyeConfig {
    // interferers per side; production floor (0 or >= 32) enforced at the CLI,
    // the library accepts any K >= 0 (K = 0: no-ISI hook; small K: oracles and
    // the shallow-truncation calibration report)
    int truncation_K = 256;
    int phase_points = 512;  // phase grid intervals across one symbol, >= 64, even
    void validate() const;   // throws std::domain_error
};

struct EyeReport {
    std::vector<double> phase;  // t/T in [-1/2, 1/2], phase_points+1 samples
    std::vector<double> inner;  // worst-case lower boundary of the '1' eye
    std::vector<double> outer;  // worst-case upper boundary
    double eye_width = 0.0;     // fraction of T
    double max_distortion = 0.0;
};

// D(t) = sum_{1<=|k|<=K} |s(t + kT)|; inner = s - D, outer = s + D on the
// phase window [-T/2, T/2]; metrics fields are filled in as well.
EyeReport eye_boundaries(PulseId id, const PulseParams& p, const EyeConfig& cfg,
                         const QuadratureConfig& q = {});

// largest interval around 0 where inner > 0 (linear interpolation at the
// sign changes); 0 if the eye is closed at t = 0
double eye_width(const EyeReport& r);
// max of the outer boundary over the phase window
double max_distortion(const EyeReport& r);

// small-K oracle: enumerate all 2^(2K) interferer sign patterns and take the
// pointwise min/max of s(t) + sum b_k s(t + kT); exponential cost, K <= 12
EyeReport eye_boundaries_bruteforce(PulseId id, const PulseParams& p,
                                    const EyeConfig& cfg,
                                    const QuadratureConfig& q = {});

}  // namespace nyq
