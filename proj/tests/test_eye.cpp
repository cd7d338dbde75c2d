// worst-case eye-diagram tests: frozen metric references at several
// truncation depths, structural invariants, and an exhaustive small-K oracle
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "nyq/eye.hpp"
#include "nyq/pulse.hpp"

using namespace nyq;

namespace {

struct Metrics {
    double width, dist;
};
struct MetricRow {
    PulseId id;
    Metrics k256, k4, k3;
};
// references from an independent implementation, alpha = 0.35, 512 phases
const MetricRow kRef[] = {
    {PulseId::acos_log,
     {0.6605764829, 1.7007160814},
     {0.7913590557, 1.4776906987},
     {0.8197986128, 1.4366845256}},
    {PulseId::acos_asinh,
     {0.6385247784, 1.7385594429},
     {0.7796915262, 1.4894823689},
     {0.8142001931, 1.4387960497}},
    {PulseId::acsch_log,
     {0.6285263218, 1.7522123252},
     {0.8091121778, 1.4525040830},
     {0.8281849677, 1.4255672273}},
    {PulseId::acoth_acsch,
     {0.6011892817, 1.8127624755},
     {0.8051406651, 1.4525180033},
     {0.8261590443, 1.4224409880}},
    {PulseId::acsch_asech,
     {0.5633249096, 1.8894277692},
     {0.7941450505, 1.4601871440},
     {0.8208333973, 1.4211410865}},
    {PulseId::raised_cosine,
     {0.6621130319, 1.7272362562},
     {0.6747414987, 1.7056038314},
     {0.6807450170, 1.6899867000}},
};

EyeConfig cfg_k(int k, int pps = 512) {
    EyeConfig c;
    c.truncation_K = k;
    c.phase_points = pps;
    return c;
}

}  // namespace

TEST_CASE("eye config validation") {
    EyeConfig c;
    CHECK_NOTHROW(c.validate());
    c.truncation_K = 0;
    CHECK_NOTHROW(c.validate());
    c.truncation_K = -1;
    CHECK_THROWS_AS(c.validate(), std::domain_error);
    c = EyeConfig{};
    c.phase_points = 63;
    CHECK_THROWS_AS(c.validate(), std::domain_error);
    c.phase_points = 65;  // odd
    CHECK_THROWS_AS(c.validate(), std::domain_error);
    c.phase_points = 64;
    CHECK_NOTHROW(c.validate());
}

TEST_CASE("eye metrics match references at K = 256, 4, 3") {
    PulseParams p;
    for (const auto& row : kRef) {
        INFO(pulse_name(row.id));
        const auto deep = eye_boundaries(row.id, p, cfg_k(256));
        CHECK(deep.eye_width == doctest::Approx(row.k256.width).epsilon(1e-8));
        CHECK(deep.max_distortion == doctest::Approx(row.k256.dist).epsilon(1e-8));
        const auto k4 = eye_boundaries(row.id, p, cfg_k(4));
        CHECK(k4.eye_width == doctest::Approx(row.k4.width).epsilon(1e-8));
        CHECK(k4.max_distortion == doctest::Approx(row.k4.dist).epsilon(1e-8));
        const auto k3 = eye_boundaries(row.id, p, cfg_k(3));
        CHECK(k3.eye_width == doctest::Approx(row.k3.width).epsilon(1e-8));
        CHECK(k3.max_distortion == doctest::Approx(row.k3.dist).epsilon(1e-8));
    }
}

TEST_CASE("K = 0 collapses to the pulse itself") {
    PulseParams p;
    const auto r = eye_boundaries(PulseId::acsch_asech, p, cfg_k(0, 64));
    CHECK(r.eye_width == 1.0);
    CHECK(std::fabs(r.max_distortion - 1.0) < 1e-12);
    for (size_t i = 0; i < r.phase.size(); ++i) CHECK(r.inner[i] == r.outer[i]);
}

TEST_CASE("report layout and phase window") {
    PulseParams p;
    const auto r = eye_boundaries(PulseId::acoth_acsch, p, cfg_k(32, 128));
    CHECK(r.phase.size() == 129);
    CHECK(r.inner.size() == 129);
    CHECK(r.outer.size() == 129);
    CHECK(r.phase.front() == -0.5);
    CHECK(r.phase.back() == 0.5);
    CHECK(r.phase[64] == 0.0);
    CHECK(eye_width(r) == r.eye_width);
    CHECK(max_distortion(r) == r.max_distortion);
}

TEST_CASE("boundaries bracket the pulse and are even in phase") {
    PulseParams p;
    QuadratureConfig q;
    const auto r = eye_boundaries(PulseId::acsch_log, p, cfg_k(48, 128), q);
    const int h = 64;
    for (int j = 0; j <= 128; ++j) {
        const double s = impulse_at(PulseId::acsch_log, p, q, r.phase[j] * p.T);
        CHECK(r.inner[j] <= s + 1e-12);
        CHECK(r.outer[j] >= s - 1e-12);
        // inner + outer = 2 s (the distortion term cancels)
        CHECK(std::fabs(r.inner[j] + r.outer[j] - 2 * s) < 1e-10);
    }
    for (int j = 1; j <= h; ++j) {
        CHECK(r.inner[h - j] == r.inner[h + j]);
        CHECK(r.outer[h - j] == r.outer[h + j]);
    }
}

TEST_CASE("eye width brackets the inner zero crossing") {
    PulseParams p;
    const auto r = eye_boundaries(PulseId::acsch_asech, p, cfg_k(256));
    const double half = r.eye_width / 2;
    // inner is positive strictly inside the reported width at grid points
    for (size_t j = 0; j < r.phase.size(); ++j) {
        if (std::fabs(r.phase[j]) < half - 1.0 / 512) CHECK(r.inner[j] > 0.0);
        if (r.phase[j] > half + 1.0 / 512) CHECK(r.inner[j] <= 0.0);
    }
}

TEST_CASE("exhaustive pattern oracle agrees at K = 3") {
    PulseParams p;
    for (PulseId id : {PulseId::acsch_asech, PulseId::acos_log,
                       PulseId::raised_cosine}) {
        INFO(pulse_name(id));
        const auto fast = eye_boundaries(id, p, cfg_k(3, 64));
        const auto slow = eye_boundaries_bruteforce(id, p, cfg_k(3, 64));
        for (size_t j = 0; j < fast.phase.size(); ++j) {
            CHECK(std::fabs(fast.inner[j] - slow.inner[j]) < 1e-12);
            CHECK(std::fabs(fast.outer[j] - slow.outer[j]) < 1e-12);
        }
        CHECK(std::fabs(fast.eye_width - slow.eye_width) < 1e-12);
        CHECK(std::fabs(fast.max_distortion - slow.max_distortion) < 1e-12);
    }
    CHECK_THROWS_AS(eye_boundaries_bruteforce(PulseId::acsch_asech, p, cfg_k(13, 64)),
                    std::domain_error);
}

TEST_CASE("metrics drift under deeper truncation: flat for RC, slow for composites") {
    // the raised cosine's t^-3 tail makes the worst-case boundaries converge
    // by K = 256; the slowly decaying composites keep drifting measurably,
    // so only the RC satisfies a tight truncation-stability bound
    PulseParams p;
    struct Row {
        PulseId id;
        Metrics k512;
        double bound;
    };
    const Row rows[] = {
        {PulseId::raised_cosine, {0.6621104035, 1.7272409739}, 0.005},
        {PulseId::acos_log, {0.6553220118, 1.7106799676}, 0.06},
        {PulseId::acsch_asech, {0.5424828401, 1.9397951967}, 0.06},
    };
    for (const auto& row : rows) {
        INFO(pulse_name(row.id));
        const auto deep = eye_boundaries(row.id, p, cfg_k(512));
        CHECK(deep.eye_width == doctest::Approx(row.k512.width).epsilon(1e-8));
        CHECK(deep.max_distortion == doctest::Approx(row.k512.dist).epsilon(1e-8));
        const auto base = eye_boundaries(row.id, p, cfg_k(256));
        CHECK(std::fabs(deep.eye_width - base.eye_width) < row.bound);
        CHECK(std::fabs(deep.max_distortion - base.max_distortion) < row.bound);
    }
}

TEST_CASE("five-pulse ordering at the published operating point") {
    PulseParams p;
    Metrics m[6];
    for (int i = 0; i < 6; ++i) {
        const auto r = eye_boundaries(kRef[i].id, p, cfg_k(256));
        m[i] = {r.eye_width, r.max_distortion};
    }
    // indices: 0 acos_log, 1 acos_asinh, 2 acsch_log, 3 acoth_acsch,
    //          4 acsch_asech, 5 rc
    // among the three new pulses the width order acsch_log > acoth > asech
    // holds at every truncation depth
    CHECK(m[2].width > m[3].width);
    CHECK(m[3].width > m[4].width);
    // at deep truncation the faster-decaying reference pulses overtake all
    // three new pulses on both metrics
    for (int i : {2, 3, 4}) {
        CHECK(m[0].width > m[i].width);
        CHECK(m[1].width > m[i].width);
        CHECK(m[0].dist < m[i].dist);
        CHECK(m[1].dist < m[i].dist);
    }
    // asech keeps the largest worst-case distortion of the family
    for (int i = 0; i < 4; ++i) CHECK(m[4].dist > m[i].dist);
}

TEST_CASE("shallow truncation reproduces the published distortion ordering") {
    // at K = 3 the published distortion chain holds exactly:
    // asech < acoth < acsch_log < acos_log < acos_asinh
    PulseParams p;
    double d[5];
    const PulseId order[] = {PulseId::acsch_asech, PulseId::acoth_acsch,
                             PulseId::acsch_log, PulseId::acos_log,
                             PulseId::acos_asinh};
    for (int i = 0; i < 5; ++i)
        d[i] = eye_boundaries(order[i], p, cfg_k(3)).max_distortion;
    for (int i = 0; i + 1 < 5; ++i) CHECK(d[i] < d[i + 1]);
}
