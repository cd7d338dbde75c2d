#include "nyq/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace nyq {

namespace {

// 16-point Gauss-Legendre rule on [-1, 1]
constexpr int kPanelOrder = 16;
constexpr double kGL16[16][2] = {
    {-9.89400934991649939e-01, 2.71524594117564660e-02},
    {-9.44575023073232600e-01, 6.22535239386476300e-02},
    {-8.65631202387831755e-01, 9.51585116824923138e-02},
    {-7.55404408355002999e-01, 1.24628971255533627e-01},
    {-6.17876244402643771e-01, 1.49595988816576375e-01},
    {-4.58016777657227425e-01, 1.69156519395002120e-01},
    {-2.81603550779258915e-01, 1.82603415044923278e-01},
    {-9.50125098376374544e-02, 1.89450610455068114e-01},
    {9.50125098376374544e-02, 1.89450610455068114e-01},
    {2.81603550779258915e-01, 1.82603415044923278e-01},
    {4.58016777657227425e-01, 1.69156519395002120e-01},
    {6.17876244402643771e-01, 1.49595988816576375e-01},
    {7.55404408355002999e-01, 1.24628971255533627e-01},
    {8.65631202387831755e-01, 9.51585116824923138e-02},
    {9.44575023073232600e-01, 6.22535239386476300e-02},
    {9.89400934991649939e-01, 2.71524594117564660e-02},
};

constexpr long long kGridSampleCap = 50'000'000;

// Panelized nodes on [a, b]: geometric grading (2^-j cuts) toward the
// singular endpoint where S' diverges, equal-width panels across the rest
// to resolve the cos(2 pi f t) oscillation, 16-point GL per panel.
void segment_nodes(double a, double b, bool sing_at_a, const QuadratureConfig& q,
                   std::vector<double>& nodes, std::vector<double>& weights) {
    const double w = b - a;
    if (q.scheme == QuadScheme::composite_trapezoid) {
        const int n = q.nodes_per_segment;
        const double h = w / (n - 1);
        for (int i = 0; i < n; ++i) {
            nodes.push_back(a + i * h);
            weights.push_back((i == 0 || i == n - 1) ? 0.5 * h : h);
        }
        return;
    }
    const int panels = std::max(4, q.nodes_per_segment / kPanelOrder);
    const int levels = std::min(50, panels / 2);
    const int m_equal = panels - levels;
    std::vector<double> cuts;
    for (int m = 1; m < m_equal; ++m) cuts.push_back(a + w * m / m_equal);
    for (int j = 1; j <= levels; ++j) {
        const double g = w * std::ldexp(1.0, -j);
        cuts.push_back(sing_at_a ? a + g : b - g);
    }
    // innermost 2^-levels sliver at the singular end is dropped; S is bounded
    // there so the truncation is below machine noise for levels ~ 50
    const double lo = sing_at_a ? a + w * std::ldexp(1.0, -levels) : a;
    const double hi = sing_at_a ? b : b - w * std::ldexp(1.0, -levels);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<double> edges;
    edges.push_back(lo);
    for (double c : cuts)
        if (c > lo && c < hi) edges.push_back(c);
    edges.push_back(hi);
    for (size_t e = 0; e + 1 < edges.size(); ++e) {
        const double half = 0.5 * (edges[e + 1] - edges[e]);
        const double mid = 0.5 * (edges[e + 1] + edges[e]);
        for (const auto& gl : kGL16) {
            nodes.push_back(mid + half * gl[0]);
            weights.push_back(half * gl[1]);
        }
    }
}

double sinc(double x) {  // sin(pi x)/(pi x)
    if (x == 0.0) return 1.0;
    const double px = M_PI * x;
    return std::sin(px) / px;
}

}  // namespace

void QuadratureConfig::validate() const {
    if (nodes_per_segment < 64)
        throw std::domain_error("nodes_per_segment must be >= 64");
}

QuadPlan make_plan(PulseId id, const PulseParams& p, const QuadratureConfig& q) {
    p.validate();
    q.validate();
    QuadPlan plan;
    plan.T = p.T;
    const double B = p.B();
    if (p.alpha == 0.0) {  // rectangle: passband closed form covers everything
        plan.f1 = B;
        return plan;
    }
    const double f1 = B * (1.0 - p.alpha), f2 = B * (1.0 + p.alpha);
    plan.f1 = f1;
    std::vector<double> nodes, weights;
    segment_nodes(f1, B, true, q, nodes, weights);   // S' singular at f1
    segment_nodes(B, f2, false, q, nodes, weights);  // S' singular at f2
    plan.nodes = std::move(nodes);
    plan.coef.resize(plan.nodes.size());
    for (size_t i = 0; i < plan.nodes.size(); ++i)
        plan.coef[i] = 2.0 * weights[i] * spectrum(id, p, plan.nodes[i]);
    return plan;
}

double plan_eval(const QuadPlan& plan, double t) {
    const double at = std::fabs(t);
    double s;
    if (at < 1e-12) {
        s = 2.0 * plan.T * plan.f1;
    } else {
        s = 2.0 * plan.T * std::sin(2.0 * M_PI * plan.f1 * at) / (2.0 * M_PI * at);
    }
    const double wt = 2.0 * M_PI * at;
    for (size_t i = 0; i < plan.nodes.size(); ++i)
        s += plan.coef[i] * std::cos(wt * plan.nodes[i]);
    return s;
}

double raised_cosine_impulse(const PulseParams& p, double t) {
    p.validate();
    const double x = t / p.T;
    const double s = sinc(x);
    if (p.alpha == 0.0) return s;
    const double den = 1.0 - (2.0 * p.alpha * x) * (2.0 * p.alpha * x);
    if (std::fabs(den) <= 1e-4) {
        // near |x| = 1/(2 alpha) both cos and den vanish; dividing the raw
        // values loses ~5 digits, but the ratio written in the offset
        // d = |x| - 1/(2 alpha) is insensitive to the cancellation in d
        const double d = std::fabs(x) - 1.0 / (2.0 * p.alpha);
        const double ratio =
            d == 0.0 ? M_PI / 2.0
                     : std::sin(M_PI * p.alpha * d) / (2.0 * p.alpha * d);
        return s * ratio / (1.0 + 2.0 * p.alpha * std::fabs(x));
    }
    return s * std::cos(M_PI * p.alpha * x) / den;
}

double impulse_at_quadrature(PulseId id, const PulseParams& p,
                             const QuadratureConfig& q, double t) {
    return plan_eval(make_plan(id, p, q), t);
}

double impulse_at(PulseId id, const PulseParams& p, const QuadratureConfig& q,
                  double t) {
    if (id == PulseId::raised_cosine) return raised_cosine_impulse(p, t);
    return impulse_at_quadrature(id, p, q, t);
}

ImpulseGrid impulse_grid(PulseId id, const PulseParams& p, const QuadratureConfig& q,
                         int span_symbols, int samples_per_symbol) {
    p.validate();
    q.validate();
    if (span_symbols < 1) throw std::domain_error("span_symbols must be >= 1");
    if (samples_per_symbol < 2)
        throw std::domain_error("samples_per_symbol must be >= 2");
    const long long half = 1LL * span_symbols * samples_per_symbol;
    if (2 * half + 1 > kGridSampleCap)
        throw std::length_error("impulse grid exceeds sample cap");
    ImpulseGrid grid;
    grid.T = p.T;
    grid.dt = p.T / samples_per_symbol;
    grid.n = static_cast<int>(2 * half + 1);
    grid.samples.resize(grid.n);
    const int c = grid.center();

    if (id == PulseId::raised_cosine) {
        for (long long j = 0; j <= half; ++j) {
            const double v = raised_cosine_impulse(p, j * grid.dt);
            grid.samples[c + j] = v;
            grid.samples[c - j] = v;
        }
        return grid;
    }

    const QuadPlan plan = make_plan(id, p, q);
    const size_t m = plan.nodes.size();
    // phase-rotation recurrence over the half grid, resynced against std::cos
    // every kResync steps to keep accumulated drift under ~1e-13
    constexpr long long kResync = 512;
    std::vector<double> cs(m), sn(m), cd(m), sd(m);
    for (size_t i = 0; i < m; ++i) {
        const double dphi = 2.0 * M_PI * plan.nodes[i] * grid.dt;
        cd[i] = std::cos(dphi);
        sd[i] = std::sin(dphi);
    }
    for (long long j = 0; j <= half; ++j) {
        if (j % kResync == 0) {
            const double t = j * grid.dt;
            for (size_t i = 0; i < m; ++i) {
                const double phi = 2.0 * M_PI * plan.nodes[i] * t;
                cs[i] = std::cos(phi);
                sn[i] = std::sin(phi);
            }
        }
        const double t = j * grid.dt;
        double acc;
        if (t < 1e-12) {
            acc = 2.0 * plan.T * plan.f1;
        } else {
            acc = 2.0 * plan.T * std::sin(2.0 * M_PI * plan.f1 * t) / (2.0 * M_PI * t);
        }
        for (size_t i = 0; i < m; ++i) acc += plan.coef[i] * cs[i];
        grid.samples[c + j] = acc;
        grid.samples[c - j] = acc;  // s is even
        for (size_t i = 0; i < m; ++i) {
            const double nc = cs[i] * cd[i] - sn[i] * sd[i];
            sn[i] = sn[i] * cd[i] + cs[i] * sd[i];
            cs[i] = nc;
        }
    }
    return grid;
}

IsiSamples isi_samples(PulseId id, const PulseParams& p, const QuadratureConfig& q,
                       double tau, int k_min, int k_max) {
    p.validate();
    q.validate();
    if (!(k_min <= 0 && 0 <= k_max))
        throw std::domain_error("isi_samples requires k_min <= 0 <= k_max");
    IsiSamples out;
    out.tau = tau;
    out.k_min = k_min;
    out.k_max = k_max;
    out.g.reserve(k_max - k_min + 1);
    if (id == PulseId::raised_cosine) {
        for (int k = k_min; k <= k_max; ++k)
            out.g.push_back(raised_cosine_impulse(p, tau + k * p.T));
        return out;
    }
    const QuadPlan plan = make_plan(id, p, q);
    for (int k = k_min; k <= k_max; ++k)
        out.g.push_back(plan_eval(plan, tau + k * p.T));
    return out;
}

double decay_exponent(PulseId id, const PulseParams& p, const QuadratureConfig& q,
                      double t_min, double t_max) {
    p.validate();
    q.validate();
    if (!(t_min >= 5.0 * p.T)) throw std::domain_error("decay fit needs t_min >= 5T");
    if (!(t_max >= 2.0 * t_min))
        throw std::domain_error("decay fit needs t_max >= 2 t_min");
    // sample at half-steps, t = (j + 1/2) T / pps, so no point can land on a
    // Nyquist zero t = k T, where the value is rounding noise and the sign
    // pattern would perturb the crossing structure
    const int pps = 64;
    const long long j0 = static_cast<long long>(t_min * pps / p.T);
    const long long j1 = static_cast<long long>(t_max * pps / p.T) - 1;
    std::vector<double> vs(j1 - j0 + 1);
    if (id == PulseId::raised_cosine) {
        for (long long j = j0; j <= j1; ++j)
            vs[j - j0] = raised_cosine_impulse(p, (j + 0.5) * p.T / pps);
    } else {
        const QuadPlan plan = make_plan(id, p, q);
        for (long long j = j0; j <= j1; ++j)
            vs[j - j0] = plan_eval(plan, (j + 0.5) * p.T / pps);
    }
    // envelope: peak |s| between consecutive zero crossings
    std::vector<long long> cross;
    for (size_t i = 0; i + 1 < vs.size(); ++i)
        if ((vs[i] > 0) != (vs[i + 1] > 0)) cross.push_back(i);
    std::vector<double> lx, ly;
    for (size_t ci = 0; ci + 1 < cross.size(); ++ci) {
        double best = -1.0;
        long long bj = -1;
        for (long long i = cross[ci] + 1; i <= cross[ci + 1]; ++i) {
            if (std::fabs(vs[i]) > best) {
                best = std::fabs(vs[i]);
                bj = i;
            }
        }
        // no genuine tail lobe of a unit-peak pulse gets near this floor;
        // anything under it is numerical noise, not envelope
        if (best < 1e-12) continue;
        lx.push_back(std::log((j0 + bj + 0.5) / pps));  // log(t/T)
        ly.push_back(std::log(best));
    }
    if (lx.size() < 8)
        throw std::runtime_error("decay fit: fewer than 8 extrema in range");
    auto fit = [](const std::vector<double>& x, const std::vector<double>& y,
                  double& slope, double& icept) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        const double n = static_cast<double>(x.size());
        for (size_t i = 0; i < x.size(); ++i) {
            sx += x[i];
            sy += y[i];
            sxx += x[i] * x[i];
            sxy += x[i] * y[i];
        }
        slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        icept = (sy - slope * sx) / n;
    };
    double slope, icept;
    fit(lx, ly, slope, icept);
    std::vector<double> kx, ky;  // drop suppressed lobes (deep negative residual)
    for (size_t i = 0; i < lx.size(); ++i)
        if (ly[i] - (slope * lx[i] + icept) >= -0.5) {
            kx.push_back(lx[i]);
            ky.push_back(ly[i]);
        }
    if (kx.size() >= 2) fit(kx, ky, slope, icept);
    return slope;
}

std::vector<std::array<double, 3>> derivative_divergence_check(
    const PulseParams& p, const std::vector<double>& epsilons) {
    p.validate();
    if (p.alpha == 0.0)
        throw std::domain_error("divergence check undefined for alpha = 0");
    const double B = p.B();
    const double f1 = B * (1.0 - p.alpha), f2 = B * (1.0 + p.alpha);
    std::vector<std::array<double, 3>> rows;
    rows.reserve(epsilons.size());
    for (double eps : epsilons) {
        if (!(eps > 0.0)) throw std::domain_error("epsilons must be positive");
        rows.push_back({eps,
                        std::fabs(spectrum_derivative_acsch_asech(p, f1 + eps)),
                        std::fabs(spectrum_derivative_acsch_asech(p, f2 - eps))});
    }
    return rows;
}

}  // namespace nyq
