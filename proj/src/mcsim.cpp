#include "riscov/mcsim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace riscov {

namespace {

constexpr std::uint64_t kBatchSize = 512;
constexpr std::uint64_t kWarmupStreamBase = 1ULL << 48;

struct TrialOutput {
    SinrSample sinr;
    double interference_c = 0.0; // connected-user interference power, W
    std::uint64_t resamples = 0;
};

// Precomputed per-parameter-set state for the hot trial loop.
struct TrialEngine {
    explicit TrialEngine(const NetworkParams& params, ScenarioMode m)
        : p(params), mode(m) {
        r_max = p.r_max();
        rmin2 = p.R_L * p.R_L;
        span2 = r_max * r_max - rmin2;
        mean_count = p.lambda_b * M_PI * span2;
        aperture = p.L / (4.0 * M_PI);
        aperture2 = aperture * aperture;
        half_alpha_t = 0.5 * p.alpha_t;
        half_alpha_c = 0.5 * p.alpha_c;
        alpha_c_is_4 = p.alpha_c == 4.0;
        symmetric_split = p.rho_a == 0.5;
        rc2 = p.r_c * p.r_c;
        serv_gain_c = p.C * std::pow(p.r_c, -p.alpha_c);
        use_ris = mode != ScenarioMode::traditional_noma;
        nlos_penalty = std::pow(10.0, -p.nlos_penalty_db / 10.0);
    }

    NetworkParams p;
    ScenarioMode mode;
    double r_max, rmin2, span2, mean_count;
    double aperture, aperture2, half_alpha_t, half_alpha_c;
    bool alpha_c_is_4, symmetric_split, use_ris;
    double rc2, serv_gain_c, nlos_penalty;

    double direct_gain(double d2) const {
        if (alpha_c_is_4) {
            const double inv = 1.0 / d2;
            return p.C * inv * inv;
        }
        return p.C * std::pow(d2, -half_alpha_c);
    }

    // squared-sum aperture factor (cos th_br + cos th_ru)^2 for the link
    // toward `to` given the user direction v1 = -ris
    double aperture_factor(double v1x, double v1y, double r_ru, double tox,
                           double toy, double d2) const {
        const double dot = v1x * tox + v1y * toy;
        if (symmetric_split) {
            // theta_br = theta_ru = theta/2 with theta = pi - angle(v1,v2),
            // so (2 cos(theta/2))^2 = 2(1 - cos angle); no trig calls
            const double cosg = dot / (r_ru * std::sqrt(d2));
            return std::max(0.0, 2.0 * (1.0 - cosg));
        }
        const double cross = v1x * toy - v1y * tox;
        const double theta = M_PI - std::atan2(std::abs(cross), dot);
        const double tb =
            std::clamp(p.rho_a * theta, 0.0, 0.5 * M_PI);
        const double tr =
            std::clamp((1.0 - p.rho_a) * theta, 0.0, 0.5 * M_PI);
        const double s = std::cos(tb) + std::cos(tr);
        return s * s;
    }

    TrialOutput run(RngStream& rng, std::vector<Point>& pts) const {
        TrialOutput out;
        for (;;) {
            const Point ris = sample_ris(p.R_L, rng);
            const std::uint64_t n = rng.poisson(mean_count);
            if (n == 0) {
                ++out.resamples;
                continue;
            }
            pts.clear();
            pts.reserve(n);
            const double refx = use_ris ? ris.x : 0.0;
            const double refy = use_ris ? ris.y : 0.0;
            std::size_t assoc = 0;
            double best_d2 = std::numeric_limits<double>::infinity();
            for (std::uint64_t i = 0; i < n; ++i) {
                // rejection from the bounding square beats polar sampling
                // here: no sincos, no sqrt
                double px, py, r2;
                do {
                    px = r_max * (2.0 * rng.uniform01() - 1.0);
                    py = r_max * (2.0 * rng.uniform01() - 1.0);
                    r2 = px * px + py * py;
                } while (r2 <= rmin2 || r2 > r_max * r_max);
                pts.push_back({px, py});
                const double dx = px - refx;
                const double dy = py - refy;
                const double d2 = dx * dx + dy * dy;
                if (d2 < best_d2) {
                    best_d2 = d2;
                    assoc = i;
                }
            }
            const Point bs = pts[assoc];

            // serving-link gain for the typical user
            double gain_t;
            if (use_ris) {
                const double r_br = std::sqrt(best_d2);
                const double r_ru = std::sqrt(norm2(ris));
                const double theta = compute_link_angle(bs, ris, Point{0, 0});
                const auto [tb, tr] = split_angle(theta, p.rho_a);
                gain_t = pathloss_ris_approx(r_br, r_ru, tb, tr,
                                             p.ris_config(), p.alpha_t);
            } else {
                gain_t = nlos_penalty * direct_gain(best_d2);
            }

            const double fade_t = rng.gamma_unit_mean(p.m_t);
            const double fade_c = rng.gamma_unit_mean(p.m_c);

            // typical-user interference from the same field the association
            // was drawn on
            double sum_t = 0.0;
            const double v1x = -ris.x, v1y = -ris.y;
            const double r_ru = std::sqrt(norm2(ris));
            const double rru2_pow =
                use_ris ? std::pow(norm2(ris), -half_alpha_t) : 0.0;
            for (std::uint64_t i = 0; i < n; ++i) {
                if (i == assoc) continue;
                const Point& pt = pts[i];
                const double h = rng.gamma_unit_mean(p.m_t);
                if (use_ris) {
                    const double dxr = pt.x - ris.x;
                    const double dyr = pt.y - ris.y;
                    const double d2r = dxr * dxr + dyr * dyr;
                    const double apf =
                        aperture_factor(v1x, v1y, r_ru, dxr, dyr, d2r);
                    sum_t += h * aperture2 * apf *
                             std::pow(d2r, -half_alpha_t) * rru2_pow;
                } else {
                    sum_t += h * direct_gain(norm2(pt));
                }
            }

            // The connected user's interferers form their own field: its
            // serving BS is its nearest at r_c, so interference arrives from
            // a process dilated beyond r_c around it. Sampling that field
            // around the typical user's serving BS instead would inherit the
            // surface-side exclusion ball and understate the interference.
            // Only distances enter, so squared radii are drawn directly.
            double sum_c = 0.0;
            const std::uint64_t n_c =
                rng.poisson(p.lambda_b * M_PI * (r_max * r_max - rc2));
            const double span_c = r_max * r_max - rc2;
            for (std::uint64_t j = 0; j < n_c; ++j) {
                const double rho2 = rc2 + span_c * rng.uniform01();
                const double h = rng.gamma_unit_mean(p.m_t);
                sum_c += h * direct_gain(rho2);
            }

            // the fraction rho_t models the surface shielding part of the
            // interference; the blocked baseline instead attenuates every
            // direct path by the blockage penalty
            const double scale_t = use_ris ? p.rho_t : nlos_penalty;
            const double it = scale_t * p.P_b * sum_t;
            const double ic = p.P_b * sum_c;
            const double st = p.P_b * fade_t * gain_t;
            const double sc = p.P_b * fade_c * serv_gain_c;
            const double den_t = it + p.sigma2;
            const double den_c = ic + p.sigma2;

            out.sinr.gamma_sic =
                p.a_c * st / (p.a_t * st + den_t);
            out.sinr.gamma_t = p.a_t * st / den_t;
            out.sinr.gamma_t_oma = st / den_t;
            out.sinr.gamma_c = p.a_c * sc / (p.a_t * sc + den_c);
            out.sinr.gamma_c_oma = sc / den_c;
            out.interference_c = ic;
            return out;
        }
    }
};

CoverageEstimate make_estimate(std::uint64_t hits, std::uint64_t trials,
                               std::uint64_t seed) {
    CoverageEstimate e;
    e.trials = trials;
    e.seed = seed;
    e.probability = static_cast<double>(hits) / static_cast<double>(trials);
    e.ci_halfwidth =
        1.96 * std::sqrt(e.probability * (1.0 - e.probability) /
                         static_cast<double>(trials));
    return e;
}

} // namespace

SinrSample run_trial(const NetworkParams& p, ScenarioMode mode,
                     RngStream& rng) {
    p.validate();
    TrialEngine engine(p, mode);
    std::vector<Point> scratch;
    return engine.run(rng, scratch).sinr;
}

Realization sample_realization(const NetworkParams& p, RngStream& rng,
                               std::uint64_t* resample_count) {
    Realization real;
    real.rng_seed = rng.master_seed();
    for (;;) {
        real.ris = sample_ris(p.R_L, rng);
        real.bs_points = sample_ppp_annulus(p.lambda_b, p.R_L, p.r_max(), rng);
        if (!real.bs_points.empty()) break;
        if (resample_count) ++*resample_count;
    }
    real.associated_index = nearest_index(real.bs_points, real.ris);
    // informational: tangent of the specular bisector configuration
    const Point& bs = real.bs_points[real.associated_index];
    const double ux = -real.ris.x, uy = -real.ris.y;
    const double bx = bs.x - real.ris.x, by = bs.y - real.ris.y;
    const double un = std::hypot(ux, uy), bn = std::hypot(bx, by);
    if (un > 0.0 && bn > 0.0) {
        const double nx = ux / un + bx / bn;
        const double ny = uy / un + by / bn;
        real.ris_orientation = std::atan2(ny, nx) - 0.5 * M_PI;
    }
    return real;
}

std::pair<CoverageEstimate, CoverageEstimate> estimate_coverage(
    const NetworkParams& p, ScenarioMode mode, std::uint64_t trials,
    std::uint64_t seed, ExpectationMode emode) {
    if (trials < 1000)
        throw std::domain_error("estimate_coverage: trials must be >= 1000");
    p.validate();

    double mean_c_oma = 0.0, mean_t_oma = 0.0;
    if (mode != ScenarioMode::ris_oma) {
        if (emode == ExpectationMode::analytic) {
            mean_c_oma = gamma_c_e(p);
            mean_t_oma = gamma_t_e(p);
        } else {
            const std::uint64_t warm = std::max<std::uint64_t>(trials / 10, 1);
            TrialEngine engine(p, mode);
            const std::uint64_t nb = (warm + kBatchSize - 1) / kBatchSize;
            std::vector<double> sc(nb, 0.0), st(nb, 0.0);
            for_each_batch(warm, kBatchSize, [&](std::uint64_t b, std::uint64_t lo,
                                  std::uint64_t hi) {
                std::vector<Point> scratch;
                double acc_c = 0.0, acc_t = 0.0;
                for (std::uint64_t i = lo; i < hi; ++i) {
                    RngStream rng(seed, kWarmupStreamBase + i);
                    const TrialOutput out = engine.run(rng, scratch);
                    acc_c += out.sinr.gamma_c_oma;
                    acc_t += out.sinr.gamma_t_oma;
                }
                sc[b] = acc_c;
                st[b] = acc_t;
            });
            for (std::uint64_t b = 0; b < nb; ++b) {
                mean_c_oma += sc[b];
                mean_t_oma += st[b];
            }
            mean_c_oma /= static_cast<double>(warm);
            mean_t_oma /= static_cast<double>(warm);
        }
    }

    TrialEngine engine(p, mode);
    const std::uint64_t nb = (trials + kBatchSize - 1) / kBatchSize;
    std::vector<std::uint64_t> hits_t(nb, 0), hits_c(nb, 0), redraws(nb, 0);
    for_each_batch(trials, kBatchSize, [&](std::uint64_t b, std::uint64_t lo,
                            std::uint64_t hi) {
        std::vector<Point> scratch;
        std::uint64_t ht = 0, hc = 0, rs = 0;
        for (std::uint64_t i = lo; i < hi; ++i) {
            RngStream rng(seed, i);
            const TrialOutput out = engine.run(rng, scratch);
            const SinrSample& s = out.sinr;
            rs += out.resamples;
            if (mode == ScenarioMode::ris_oma) {
                ht += s.gamma_t_oma > p.gamma_t_th;
                hc += s.gamma_c_oma > p.gamma_c_th;
            } else {
                ht += s.gamma_sic > p.gamma_sic_th && s.gamma_t > p.gamma_t_th &&
                      s.gamma_t_oma > mean_c_oma;
                hc += s.gamma_c > p.gamma_c_th && mean_t_oma > s.gamma_c_oma;
            }
        }
        hits_t[b] = ht;
        hits_c[b] = hc;
        redraws[b] = rs;
    });
    std::uint64_t total_t = 0, total_c = 0, total_rs = 0;
    for (std::uint64_t b = 0; b < nb; ++b) {
        total_t += hits_t[b];
        total_c += hits_c[b];
        total_rs += redraws[b];
    }
    if (total_rs > 0)
        std::fprintf(stderr,
                     "estimate_coverage: %llu empty point sets redrawn\n",
                     static_cast<unsigned long long>(total_rs));
    return {make_estimate(total_t, trials, seed),
            make_estimate(total_c, trials, seed)};
}

ExpectationEstimates estimate_expectations(const NetworkParams& p,
                                           std::uint64_t trials,
                                           std::uint64_t seed) {
    if (trials < 1000)
        throw std::domain_error("estimate_expectations: trials must be >= 1000");
    p.validate();
    TrialEngine engine(p, ScenarioMode::ris_noma);
    const std::uint64_t nb = (trials + kBatchSize - 1) / kBatchSize;
    struct Sums {
        double c = 0, c2 = 0, t = 0, t2 = 0, ic = 0, ic2 = 0;
    };
    std::vector<Sums> acc(nb);
    for_each_batch(trials, kBatchSize, [&](std::uint64_t b, std::uint64_t lo,
                            std::uint64_t hi) {
        std::vector<Point> scratch;
        Sums s;
        for (std::uint64_t i = lo; i < hi; ++i) {
            RngStream rng(seed, i);
            const TrialOutput out = engine.run(rng, scratch);
            s.c += out.sinr.gamma_c_oma;
            s.c2 += out.sinr.gamma_c_oma * out.sinr.gamma_c_oma;
            s.t += out.sinr.gamma_t_oma;
            s.t2 += out.sinr.gamma_t_oma * out.sinr.gamma_t_oma;
            s.ic += out.interference_c;
            s.ic2 += out.interference_c * out.interference_c;
        }
        acc[b] = s;
    });
    Sums total;
    for (const Sums& s : acc) {
        total.c += s.c;
        total.c2 += s.c2;
        total.t += s.t;
        total.t2 += s.t2;
        total.ic += s.ic;
        total.ic2 += s.ic2;
    }
    const double n = static_cast<double>(trials);
    auto finish = [n](double sum, double sumsq, double& mean, double& ci) {
        mean = sum / n;
        const double var = std::max(0.0, sumsq / n - mean * mean);
        ci = 1.96 * std::sqrt(var / n);
    };
    ExpectationEstimates e;
    e.trials = trials;
    e.seed = seed;
    finish(total.c, total.c2, e.gamma_c_e_hat, e.gamma_c_e_ci);
    finish(total.t, total.t2, e.gamma_t_e_hat, e.gamma_t_e_ci);
    finish(total.ic, total.ic2, e.mean_ic_hat, e.mean_ic_ci);
    return e;
}

int worker_count() {
    if (const char* env = std::getenv("RIS_COVERAGE_THREADS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<int>(v);
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void for_each_batch(std::uint64_t items, std::uint64_t batch_size,
                    const std::function<void(std::uint64_t, std::uint64_t,
                                             std::uint64_t)>& fn) {
    const std::uint64_t nbatches = (items + batch_size - 1) / batch_size;
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (;;) {
            const std::uint64_t b = next.fetch_add(1);
            if (b >= nbatches) break;
            const std::uint64_t lo = b * batch_size;
            fn(b, lo, std::min(items, lo + batch_size));
        }
    };
    const int workers = worker_count();
    if (workers <= 1 || nbatches <= 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    const int count = static_cast<int>(
        std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), nbatches));
    pool.reserve(count);
    for (int i = 0; i < count; ++i) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

} // namespace riscov
