// quadrature / impulse-response tests against high-precision references,
// plus energy conservation, ISI sampling, and the tail-decay estimator
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <vector>

#include "nyq/pulse.hpp"
#include "nyq/spectral.hpp"

using namespace nyq;

namespace {

const double kT[6] = {0.0, 0.5, 1.5, 2.47, 5.5, 10.25};  // in symbols

struct ImpRow {
    PulseId id;
    double s[6];
};
// s(t) at alpha = 0.35 from an independent 4096-node reference integrator
const ImpRow kImp[] = {
    {PulseId::acos_log,
     {0.9999999999999997, 0.5930495691584216, -0.09967709216774845,
      -0.009134044356466225, -0.008761690974804663, -0.002245860084765457}},
    {PulseId::acos_asinh,
     {0.9999999999999997, 0.5895310016910769, -0.09090697291433156,
      -0.01896620142583466, -0.009170314041793859, -0.002602680823658953}},
    {PulseId::acsch_log,
     {0.9999999999999997, 0.5938291495894328, -0.102499808705038,
      -0.003753841793813356, -0.01208437602861877, -0.0007450469628477001}},
    {PulseId::acoth_acsch,
     {0.9999999999999997, 0.5904434102413528, -0.09446553477857732,
      -0.01170794621443307, -0.01488170005994783, -0.0005708294759380027}},
    {PulseId::acsch_asech,
     {0.9999999999999997, 0.5852993734515891, -0.08199416511955371,
      -0.02478621519282057, -0.01734987289735046, -0.0006401650300307295}},
    {PulseId::raised_cosine,
     {0.9999999999999997, 0.6185841451197256, -0.1624345094713067,
      0.05873437160402101, 0.004071292966873107, -0.0001180758572263858}},
};

double textbook_rc(double a, double t) {  // T = 1
    const double pi = std::numbers::pi;
    const double den = 1.0 - 4.0 * a * a * t * t;
    if (std::fabs(den) < 1e-12) return (pi / 4) * std::sin(pi * t) / (pi * t);
    if (t == 0.0) return 1.0;
    return std::sin(pi * t) / (pi * t) * std::cos(pi * a * t) / den;
}

}  // namespace

TEST_CASE("quadrature config validation") {
    QuadratureConfig q;
    CHECK_NOTHROW(q.validate());
    q.nodes_per_segment = 64;
    CHECK_NOTHROW(q.validate());
    q.nodes_per_segment = 63;
    CHECK_THROWS_AS(q.validate(), std::domain_error);
}

TEST_CASE("impulse response matches reference values") {
    PulseParams p;
    QuadratureConfig q;
    for (const auto& row : kImp) {
        INFO(pulse_name(row.id));
        for (int i = 0; i < 6; ++i) {
            INFO("t/T = " << kT[i]);
            CHECK(std::fabs(impulse_at(row.id, p, q, kT[i]) - row.s[i]) < 5e-12);
        }
    }
}

TEST_CASE("impulse response: unit peak and Nyquist zero crossings") {
    PulseParams p;
    QuadratureConfig q;
    for (PulseId id : kAllPulses) {
        INFO(pulse_name(id));
        CHECK(std::fabs(impulse_at(id, p, q, 0.0) - 1.0) < 1e-12);
        for (int k = 1; k <= 30; ++k)
            CHECK(std::fabs(impulse_at(id, p, q, k * p.T)) < 1e-10);
    }
}

TEST_CASE("impulse response is even in t") {
    PulseParams p;
    QuadratureConfig q;
    for (PulseId id : kAllPulses)
        for (double t : {0.3, 1.7, 2.47, 8.1})
            CHECK(impulse_at(id, p, q, -t) ==
                  doctest::Approx(impulse_at(id, p, q, t)).epsilon(1e-14));
}

TEST_CASE("impulse response scales as 1/T with fixed t/T shape") {
    PulseParams p;
    p.T = 4.0;
    PulseParams ref;  // T = 1
    QuadratureConfig q;
    for (double x : {0.5, 2.47}) {
        const double a = impulse_at(PulseId::acsch_asech, p, q, x * p.T);
        const double b = impulse_at(PulseId::acsch_asech, ref, q, x);
        CHECK(a == doctest::Approx(b).epsilon(1e-12));
    }
}

TEST_CASE("raised cosine: closed form equals quadrature and the textbook form") {
    PulseParams p;
    QuadratureConfig q;
    for (double t : {0.0, 0.2, 0.5, 1.0, 1.3, 2.47, 1.0 / 0.7, 1.0 / 0.7 + 1e-6,
                     1.0 / 0.7 - 1e-6, 7.77}) {
        INFO("t = " << t);
        const double cf = raised_cosine_impulse(p, t);
        CHECK(std::fabs(cf - impulse_at_quadrature(PulseId::raised_cosine, p, q, t)) <
              5e-12);
        CHECK(cf == doctest::Approx(textbook_rc(p.alpha, t)).epsilon(1e-9));
        CHECK(impulse_at(PulseId::raised_cosine, p, q, t) == cf);
    }
}

TEST_CASE("alpha = 0 reduces to the sinc pulse") {
    PulseParams p;
    p.alpha = 0.0;
    QuadratureConfig q;
    for (PulseId id : kAllPulses) {
        CHECK(std::fabs(impulse_at(id, p, q, 0.5) - 0.6366197723675814) < 1e-14);
        CHECK(std::fabs(impulse_at(id, p, q, 2.47) - 0.1282984678711407) < 1e-14);
        CHECK(impulse_at(id, p, q, 0.0) == 1.0);
        for (int k = 1; k <= 10; ++k)
            CHECK(std::fabs(impulse_at(id, p, q, static_cast<double>(k))) < 1e-13);
    }
}

TEST_CASE("impulse grid equals pointwise evaluation within 1e-12") {
    PulseParams p;
    QuadratureConfig q;
    for (PulseId id : {PulseId::acsch_asech, PulseId::acos_log,
                       PulseId::raised_cosine}) {
        INFO(pulse_name(id));
        const auto g = impulse_grid(id, p, q, 6, 64);
        CHECK(g.n == 2 * 6 * 64 + 1);
        CHECK(g.dt == doctest::Approx(p.T / 64).epsilon(1e-16));
        CHECK(g.samples[g.center()] == impulse_at(id, p, q, 0.0));
        double worst = 0.0;
        for (int i = 0; i < g.n; ++i)
            worst = std::max(worst,
                             std::fabs(g.samples[i] - impulse_at(id, p, q, g.t(i))));
        CHECK(worst < 1e-12);
    }
}

TEST_CASE("impulse grid: even symmetry and parameter validation") {
    PulseParams p;
    QuadratureConfig q;
    const auto g = impulse_grid(PulseId::acoth_acsch, p, q, 4, 32);
    const int c = g.center();
    for (int j = 1; j <= c; ++j) CHECK(g.samples[c - j] == g.samples[c + j]);
    CHECK_THROWS_AS(impulse_grid(PulseId::acoth_acsch, p, q, 0, 32),
                    std::domain_error);
    CHECK_THROWS_AS(impulse_grid(PulseId::acoth_acsch, p, q, 4, 1),
                    std::domain_error);
    CHECK_THROWS_AS(impulse_grid(PulseId::acoth_acsch, p, q, 30000, 10000),
                    std::length_error);
}

TEST_CASE("doubling the node count leaves the transform fixed to 1e-9") {
    PulseParams p;
    QuadratureConfig q4, q8;
    q8.nodes_per_segment = 8192;
    for (PulseId id : kCompositePulses) {
        INFO(pulse_name(id));
        for (double t : {0.31, 1.5, 2.47, 9.93})
            CHECK(std::fabs(impulse_at(id, p, q4, t) - impulse_at(id, p, q8, t)) <
                  1e-9);
    }
}

TEST_CASE("composite trapezoid scheme agrees with Gauss-Legendre") {
    PulseParams p;
    QuadratureConfig gl;
    QuadratureConfig tz;
    tz.scheme = QuadScheme::composite_trapezoid;
    tz.nodes_per_segment = 32768;
    for (double t : {0.0, 0.5, 2.47}) {
        CHECK(std::fabs(impulse_at(PulseId::acsch_asech, p, tz, t) -
                        impulse_at(PulseId::acsch_asech, p, gl, t)) < 1e-5);
    }
}

TEST_CASE("energy conservation between domains") {
    // sum s(t)^2 dt over +-200 T equals the spectrum's energy integral; the
    // frequency side reuses the plan coefficients (2 w S) contracted with S
    PulseParams p;
    QuadratureConfig q;
    for (PulseId id : kAllPulses) {
        INFO(pulse_name(id));
        const auto plan = make_plan(id, p, q);
        double efreq = 2.0 * p.T * p.T * plan.f1;
        for (size_t i = 0; i < plan.nodes.size(); ++i)
            efreq += plan.coef[i] * spectrum(id, p, plan.nodes[i]);
        const auto g = impulse_grid(id, p, q, 200, 32);
        double etime = 0.0;
        for (int i = 0; i < g.n; ++i) {
            const double w = (i == 0 || i == g.n - 1) ? 0.5 : 1.0;
            etime += w * g.samples[i] * g.samples[i] * g.dt;
        }
        CHECK(std::fabs(etime - efreq) < 1e-4 * efreq);
    }
}

TEST_CASE("isi samples: layout, symmetry, and the tau = 0 column") {
    PulseParams p;
    QuadratureConfig q;
    const auto s = isi_samples(PulseId::acsch_asech, p, q, 0.1 * p.T, -5, 7);
    CHECK(s.k_min == -5);
    CHECK(s.k_max == 7);
    CHECK(static_cast<int>(s.g.size()) == 13);
    for (int k = -5; k <= 7; ++k)
        CHECK(s.g[k + 5] ==
              doctest::Approx(impulse_at(PulseId::acsch_asech, p, q, 0.1 * p.T + k * p.T))
                  .epsilon(1e-15));
    // time reversal: g_k(tau) = g_{-k}(-tau)
    const auto r = isi_samples(PulseId::acsch_asech, p, q, -0.1 * p.T, -7, 5);
    for (int k = -5; k <= 7; ++k)
        CHECK(s.g[k + 5] == doctest::Approx(r.g[-k + 7]).epsilon(1e-13));
    const auto z = isi_samples(PulseId::acsch_asech, p, q, 0.0, -10, 10);
    for (int k = -10; k <= 10; ++k) {
        if (k == 0)
            CHECK(std::fabs(z.g[k + 10] - 1.0) < 1e-12);
        else
            CHECK(std::fabs(z.g[k + 10]) < 1e-10);
    }
    CHECK_THROWS_AS(isi_samples(PulseId::acsch_asech, p, q, 0.0, 1, 5),
                    std::domain_error);
    CHECK_THROWS_AS(isi_samples(PulseId::acsch_asech, p, q, 0.0, -5, -1),
                    std::domain_error);
}

TEST_CASE("tail decay exponents over [10 T, 100 T]") {
    PulseParams p;
    QuadratureConfig q;
    struct Row {
        PulseId id;
        double slope;
    };
    // the new composite pulses decay like 1/(t ln^2 t): a fitted slope just
    // past -1 on this window, far from the references' t^-1.5 and the raised
    // cosine's t^-3
    const Row rows[] = {
        {PulseId::acos_log, -1.499242},   {PulseId::acos_asinh, -1.497662},
        {PulseId::acsch_log, -1.205507},  {PulseId::acoth_acsch, -1.207467},
        {PulseId::acsch_asech, -1.203708}, {PulseId::raised_cosine, -3.016961},
    };
    for (const auto& r : rows) {
        INFO(pulse_name(r.id));
        CHECK(decay_exponent(r.id, p, q, 10.0, 100.0) ==
              doctest::Approx(r.slope).epsilon(1e-4));
    }
    PulseParams rect;
    rect.alpha = 0.0;
    CHECK(decay_exponent(PulseId::acsch_asech, rect, q, 10.0, 100.0) ==
          doctest::Approx(-1.0).epsilon(1e-4));
}

TEST_CASE("decay estimator rejects bad windows") {
    PulseParams p;
    QuadratureConfig q;
    CHECK_THROWS_AS(decay_exponent(PulseId::acsch_asech, p, q, 4.0, 100.0),
                    std::domain_error);
    CHECK_THROWS_AS(decay_exponent(PulseId::acsch_asech, p, q, 10.0, 19.0),
                    std::domain_error);
}

TEST_CASE("derivative divergence table grows without bound") {
    PulseParams p;
    std::vector<double> eps;
    for (int k = 2; k <= 9; ++k) eps.push_back(std::pow(10.0, -k));
    const auto rows = derivative_divergence_check(p, eps);
    REQUIRE(rows.size() == eps.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        CHECK(rows[i][0] == eps[i]);
        CHECK(rows[i][1] > 0.0);
        CHECK(rows[i][2] > 0.0);
        // both edges carry the same G' kernel, so the columns agree up to
        // the rounding of f1 + eps (one ulp of f1 relative to eps)
        CHECK(rows[i][1] ==
              doctest::Approx(rows[i][2]).epsilon(1e-12 + 6e-17 / eps[i]));
        if (i > 0) {
            CHECK(rows[i][1] > rows[i - 1][1]);
            CHECK(rows[i][2] > rows[i - 1][2]);
        }
    }
    CHECK(rows.back()[1] > 50.0 * rows.front()[1]);
    CHECK_THROWS_AS(derivative_divergence_check(p, {0.0}), std::domain_error);
    PulseParams rect;
    rect.alpha = 0.0;
    CHECK_THROWS_AS(derivative_divergence_check(rect, {1e-3}), std::domain_error);
}
