#include "nyq/pulse.hpp"

#include <cmath>
#include <stdexcept>

namespace nyq {

namespace {

// reciprocal inverse hyperbolics via their logarithmic identities
// (bit-stable across platforms; std only guarantees asinh/acosh/atanh)
double acsch(double y) {  // y != 0
    double iy = 1.0 / y;
    return std::log(iy + std::sqrt(iy * iy + 1.0));
}
double asech(double y) {  // y in (0, 1]
    double iy = 1.0 / y;
    return std::log(iy + std::sqrt(iy * iy - 1.0));
}
double acoth(double y) {  // |y| > 1
    return 0.5 * std::log((y + 1.0) / (y - 1.0));
}

const double kSinh1 = std::sinh(1.0);

}  // namespace

const char* pulse_name(PulseId id) {
    switch (id) {
        case PulseId::acsch_log:     return "acsch_log";
        case PulseId::acoth_acsch:   return "acoth_acsch";
        case PulseId::acsch_asech:   return "acsch_asech";
        case PulseId::acos_log:      return "acos_log";
        case PulseId::acos_asinh:    return "acos_asinh";
        case PulseId::raised_cosine: return "raised_cosine";
    }
    return "?";
}

const char* pulse_cli_name(PulseId id) {
    switch (id) {
        case PulseId::acsch_log:     return "acsch-log";
        case PulseId::acoth_acsch:   return "acoth-acsch";
        case PulseId::acsch_asech:   return "acsch-asech";
        case PulseId::acos_log:      return "acos-log";
        case PulseId::acos_asinh:    return "acos-asinh";
        case PulseId::raised_cosine: return "rc";
    }
    return "?";
}

PulseId pulse_from_name(const std::string& name) {
    for (PulseId id : kAllPulses) {
        if (name == pulse_name(id) || name == pulse_cli_name(id)) return id;
    }
    if (name == "raised-cosine") return PulseId::raised_cosine;
    throw std::invalid_argument(
        "unknown pulse '" + name +
        "': valid names are acsch-log, acoth-acsch, acsch-asech, acos-log, "
        "acos-asinh, rc");
}

void PulseParams::validate() const {
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::domain_error("alpha must be in [0, 1]");
    if (!(T > 0.0)) throw std::domain_error("symbol period T must be > 0");
}

double composite_G(PulseId id, double x) {
    if (id == PulseId::raised_cosine)
        throw std::invalid_argument("raised_cosine has no composite G");
    if (!(x >= 0.0 && x <= 0.5))
        throw std::domain_error("composite_G argument outside [0, 1/2]");
    if (x == 0.0) return 0.0;  // analytic limit for every family member
    switch (id) {
        case PulseId::acsch_log:   return acsch(std::log(x));
        case PulseId::acoth_acsch: return acoth(acsch(x));
        case PulseId::acsch_asech: return acsch(asech(x));
        case PulseId::acos_log:    return std::acos(1.0 + std::log1p(-x));
        case PulseId::acos_asinh:  return std::acos(std::asinh(kSinh1 * (1.0 - x)));
        default: break;
    }
    throw std::invalid_argument("unreachable pulse id");
}

double gamma(PulseId id) {
    // index cache keyed by enum order of the five composites
    static const double cache[5] = {
        composite_G(PulseId::acsch_log, 0.5),
        composite_G(PulseId::acoth_acsch, 0.5),
        composite_G(PulseId::acsch_asech, 0.5),
        composite_G(PulseId::acos_log, 0.5),
        composite_G(PulseId::acos_asinh, 0.5),
    };
    if (id == PulseId::raised_cosine)
        throw std::invalid_argument("raised_cosine has no gamma constant");
    return cache[static_cast<int>(id)];
}

double spectrum(PulseId id, const PulseParams& p, double f) {
    p.validate();
    const double T = p.T;
    const double x = std::fabs(f) / p.B();  // normalized |f|/B
    if (p.alpha == 0.0) {                   // rectangle, before any 1/(2aB)
        if (x < 1.0) return T;
        if (x == 1.0) return 0.5 * T;
        return 0.0;
    }
    const double a = p.alpha;
    const double x1 = 1.0 - a, x2 = 1.0 + a;
    if (x <= x1) return T;
    if (x >= x2) return 0.0;
    if (x == 1.0) return 0.5 * T;  // both branches meet at T/2 exactly
    if (id == PulseId::raised_cosine) {
        // standard RC transition under the same conventions
        return 0.5 * T * (1.0 + std::cos(M_PI * (x - x1) / (2.0 * a)));
    }
    const double g2 = 2.0 * gamma(id);
    if (x < 1.0) {
        double u = (x - x1) / (2.0 * a);
        if (u > 0.5) u = 0.5;  // rounding guard at the branch seam
        return T * (1.0 - composite_G(id, u) / g2);
    }
    double v = (x2 - x) / (2.0 * a);
    if (v > 0.5) v = 0.5;
    return T * composite_G(id, v) / g2;
}

double spectrum_derivative_acsch_asech(const PulseParams& p, double f) {
    p.validate();
    if (p.alpha == 0.0)
        throw std::domain_error("derivative undefined for alpha = 0 rectangle");
    const double a = p.alpha, T = p.T, B = p.B();
    const double x = std::fabs(f) / B;
    const double x1 = 1.0 - a, x2 = 1.0 + a;
    if (x == x1 || x == x2)
        throw std::domain_error("spectrum derivative diverges at f = B(1 -+ alpha)");
    if (x < x1 || x > x2) return 0.0;
    // both transition branches reduce to S'(f) = -T G'(w)/(4 a B gamma) with
    // w the distance (in u-units) from the nearer band edge; they agree at B
    const double w = (x <= 1.0) ? (x - x1) / (2.0 * a) : (x2 - x) / (2.0 * a);
    const double A = asech(w);  // = acosh(1/w)
    const double gp = 1.0 / (A * std::sqrt(A * A + 1.0) * w * std::sqrt(1.0 - w * w));
    double d = -T * gp / (4.0 * a * B * gamma(PulseId::acsch_asech));
    if (f < 0.0) d = -d;  // S even => S' odd
    return d;
}

}  // namespace nyq
