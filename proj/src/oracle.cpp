#include "cqed/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>

#include "cqed/errors.hpp"

namespace cqed {

namespace {

const cplx I(0.0, 1.0);

double edge_value(const SystemParams& p, EdgeKind k) {
    switch (k) {
    case EdgeKind::coupling_g1: return p.g1;
    case EdgeKind::coupling_g2: return p.g2;
    case EdgeKind::coupling_g12: return p.g12;
    case EdgeKind::decay_gamma1: return p.gamma1;
    case EdgeKind::decay_gamma2: return p.gamma2;
    case EdgeKind::decay_kappa: return p.kappa;
    }
    return 0.0;
}

double bath_center(const SystemParams& p, Bath b) {
    switch (b) {
    case Bath::qubit1: return p.omega01;
    case Bath::qubit2: return p.omega02;
    case Bath::cavity: return p.omega_c;
    }
    return 0.0;
}

// Energy with the excited qubit levels at zero.
double node_energy(const NetworkNode& nd, const SystemParams& p) {
    return -(1 - nd.q1) * p.omega01 - (1 - nd.q2) * p.omega02 + nd.n * p.omega_c;
}

struct Triplets {
    std::vector<std::map<std::size_t, cplx>> rows;
    explicit Triplets(std::size_t n) : rows(n) {}
    void add(std::size_t i, std::size_t j, cplx v) { rows[i][j] += v; }
};

CsrMatrix to_csr(const Triplets& t) {
    CsrMatrix a;
    a.n = t.rows.size();
    a.row_ptr.assign(a.n + 1, 0);
    for (std::size_t i = 0; i < a.n; ++i) {
        for (const auto& [j, v] : t.rows[i]) {
            a.col.push_back(j);
            a.val.push_back(v);
        }
        a.row_ptr[i + 1] = a.col.size();
    }
    return a;
}

// Chebyshev coefficients of exp(-i x R tau) on [-1, 1].
std::vector<cplx> chebyshev_coefficients(double r_tau, double tol) {
    std::vector<cplx> c;
    cplx phase = 1.0;
    for (int k = 0;; ++k) {
        const double j = std::cyl_bessel_j(static_cast<double>(k), r_tau);
        c.push_back((k == 0 ? 1.0 : 2.0) * phase * j);
        phase *= -I;
        if (k > r_tau + 10 && std::abs(j) < tol) break;
        if (k > 100000) throw IntegratorDivergence("Chebyshev expansion did not truncate");
    }
    return c;
}

class Propagator {
public:
    Propagator(const OracleSystem& s, double tol, MatvecMode mode) : s_(s), tol_(tol), mode_(mode) {}

    void step(std::vector<cplx>& v, double tau) {
        auto it = cache_.find(tau);
        if (it == cache_.end()) it = cache_.emplace(tau, chebyshev_coefficients(s_.spectral_radius * tau, tol_)).first;
        const auto& c = it->second;
        const std::size_t n = v.size();
        const double inv_r = 1.0 / s_.spectral_radius, shift = s_.spectral_center;
        w0_ = v;
        apply_scaled(w0_, w1_, inv_r, shift);
        acc_.assign(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) acc_[i] = c[0] * w0_[i] + c[1] * w1_[i];
        for (std::size_t k = 2; k < c.size(); ++k) {
            apply_scaled(w1_, w2_, inv_r, shift);
            for (std::size_t i = 0; i < n; ++i) {
                w2_[i] = 2.0 * w2_[i] - w0_[i];
                acc_[i] += c[k] * w2_[i];
            }
            std::swap(w0_, w1_);
            std::swap(w1_, w2_);
        }
        const cplx ph = std::exp(-I * shift * tau);
        for (std::size_t i = 0; i < n; ++i) v[i] = ph * acc_[i];
    }

private:
    void apply_scaled(const std::vector<cplx>& x, std::vector<cplx>& y, double inv_r, double shift) {
        csr_matvec(s_.h, x, y, mode_);
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = (y[i] - shift * x[i]) * inv_r;
    }

    const OracleSystem& s_;
    double tol_;
    MatvecMode mode_;
    std::map<double, std::vector<cplx>> cache_;
    std::vector<cplx> w0_, w1_, w2_, acc_;
};

double slot_population(const OracleSystem& s, std::size_t node, const std::vector<cplx>& v) {
    double sum = 0.0;
    for (std::size_t i = s.node_begin[node]; i < s.node_begin[node] + s.node_size[node]; ++i) sum += std::norm(v[i]);
    return sum;
}

} // namespace

void csr_matvec(const CsrMatrix& a, const std::vector<cplx>& x, std::vector<cplx>& y, MatvecMode mode) {
    y.resize(a.n);
    const auto n = static_cast<std::ptrdiff_t>(a.n);
    if (mode == MatvecMode::parallel) {
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            cplx s = 0.0;
            for (std::size_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) s += a.val[k] * x[a.col[k]];
            y[i] = s;
        }
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            cplx s = 0.0;
            for (std::size_t k = a.row_ptr[i]; k < a.row_ptr[i + 1]; ++k) s += a.val[k] * x[a.col[k]];
            y[i] = s;
        }
    }
}

BathGrid make_bath_grid(double spacing, double half_width, double taper_end) {
    BathGrid g;
    if (taper_end <= 2.0) {
        // Flat core to X, doubled density out to 2X.
        const auto j_core = static_cast<long>(std::ceil(half_width / spacing));
        for (long j = -2 * j_core; j <= 2 * j_core; ++j) {
            g.offset.push_back(j * spacing);
            g.weight.push_back(std::labs(j) <= j_core ? spacing : 2.0 * spacing);
        }
        return g;
    }
    // Cosine taper s(u) (1 + c (u - 1)) on u = |x| / X in [1, U], with c fixed by
    // int_1^U s / u^2 du = 1 so the tail's leading frequency shift is reproduced.
    const double u_end = taper_end;
    auto shape = [&](double u) { return 0.5 * (1.0 + std::cos(std::numbers::pi * (u - 1.0) / (u_end - 1.0))); };
    double i0 = 0.0, i1 = 0.0;
    const int n = 4000;
    for (int k = 0; k < n; ++k) {
        const double u = 1.0 + (u_end - 1.0) * (k + 0.5) / n, du = (u_end - 1.0) / n;
        i0 += shape(u) / (u * u) * du;
        i1 += shape(u) * (u - 1.0) / (u * u) * du;
    }
    const double c = (1.0 - i0) / i1;
    const auto j_max = static_cast<long>(std::ceil(u_end * half_width / spacing));
    for (long j = -j_max; j <= j_max; ++j) {
        const double x = j * spacing, u = std::abs(x) / half_width;
        const double w = u <= 1.0 ? 1.0 : shape(u) * (1.0 + c * (u - 1.0));
        if (w <= 0.0) continue;
        g.offset.push_back(x);
        g.weight.push_back(spacing * w);
    }
    return g;
}

double oracle_half_width(const SystemParams& p, const OracleConfig& cfg, Bath bath) {
    if (cfg.window_half_width > 0.0) return cfg.window_half_width;
    const double rate = bath == Bath::qubit1 ? p.gamma1 : bath == Bath::qubit2 ? p.gamma2 : p.kappa;
    const double coupling = std::abs(p.g1) + std::abs(p.g2) + std::abs(p.g12);
    const double detune = std::max({std::abs(p.omega01 - p.omega02), std::abs(p.omega_c - p.omega01),
                                    std::abs(p.omega_c - p.omega02)});
    return cfg.window_scale * std::max(1.0, rate) + 4.0 * coupling + detune;
}

OracleSystem build_oracle_system(const StateNetwork& net, const SystemParams& p, const OracleConfig& cfg) {
    validate_params(p);
    std::array<BathGrid, 3> grids;
    for (Bath b : {Bath::qubit1, Bath::qubit2, Bath::cavity})
        grids[static_cast<int>(b)] = make_bath_grid(cfg.spacing, oracle_half_width(p, cfg, b), cfg.taper_end);
    auto grid_of = [&](std::size_t node) -> const BathGrid& {
        return grids[static_cast<int>(net.nodes[node].photons.at(0))];
    };

    OracleSystem s;
    const std::size_t nn = net.nodes.size();
    s.node_begin.resize(nn);
    s.node_size.resize(nn);
    std::size_t total = 0;
    for (std::size_t k = 0; k < nn; ++k) {
        const auto np = net.nodes[k].photons.size();
        s.node_begin[k] = total;
        s.node_size[k] = np == 0 ? 1 : np == 1 ? grid_of(k).offset.size() : 0;
        total += s.node_size[k];
    }
    Triplets t(total);
    std::vector<double> off_norm;   // spectral norm bound per off-diagonal block

    for (std::size_t k = 0; k < nn; ++k) {
        const auto& nd = net.nodes[k];
        const double e = node_energy(nd, p);
        if (nd.photons.empty()) {
            t.add(s.node_begin[k], s.node_begin[k], e);
        } else if (nd.photons.size() == 1) {
            const double c = bath_center(p, nd.photons[0]);
            const auto& grid = grid_of(k);
            for (std::size_t j = 0; j < grid.offset.size(); ++j)
                t.add(s.node_begin[k] + j, s.node_begin[k] + j, e + c + grid.offset[j]);
        }
    }
    for (const auto& ed : net.edges) {
        const double v = edge_value(p, ed.kind) * ed.multiplicity;
        const auto& a = net.nodes[ed.from];
        const auto& b = net.nodes[ed.to];
        if (!is_decay(ed.kind)) {
            if (v == 0.0) continue;
            for (std::size_t j = 0; j < s.node_size[ed.from]; ++j) {
                t.add(s.node_begin[ed.from] + j, s.node_begin[ed.to] + j, v);
                t.add(s.node_begin[ed.to] + j, s.node_begin[ed.from] + j, v);
            }
            off_norm.push_back(std::abs(v));
            continue;
        }
        const double rate = edge_value(p, ed.kind) * ed.multiplicity * ed.multiplicity;
        if (rate == 0.0) continue;
        if (a.photons.empty()) {
            const auto& grid = grid_of(ed.to);
            double w2 = 0.0;
            for (std::size_t j = 0; j < grid.offset.size(); ++j) {
                const double c = std::sqrt(rate * grid.weight[j] / (2.0 * std::numbers::pi));
                t.add(s.node_begin[ed.to] + j, s.node_begin[ed.from], c);
                t.add(s.node_begin[ed.from], s.node_begin[ed.to] + j, c);
                w2 += c * c;
            }
            off_norm.push_back(std::sqrt(w2));
        } else if (a.photons.size() == 1 && b.terminal) {
            for (std::size_t j = 0; j < s.node_size[ed.from]; ++j)
                t.add(s.node_begin[ed.from] + j, s.node_begin[ed.from] + j, -0.5 * I * rate);
            s.sinks.push_back({ed.from, ed.to, rate});
        } else {
            throw Error("oracle: unsupported decay from " + a.label + " to " + b.label);
        }
    }
    s.h = to_csr(t);
    s.initial_index = s.node_begin[net.initial];

    // Real spectrum inside [min diag - B, max diag + B], B = sum of block norms.
    double lo = 1e300, hi = -1e300;
    for (std::size_t i = 0; i < total; ++i) {
        const double d = t.rows[i].count(i) ? t.rows[i].at(i).real() : 0.0;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    double b = 0.0;
    for (double v : off_norm) b += v;
    lo -= b;
    hi += b;
    s.spectral_center = 0.5 * (lo + hi);
    s.spectral_radius = 0.5 * (hi - lo) * 1.01 + 1e-3;
    return s;
}

std::vector<double> OracleResult::sum(const std::vector<std::string>& labels) const {
    std::vector<double> out(time_grid.size(), 0.0);
    for (const auto& l : labels) {
        const auto it = population.find(l);
        if (it == population.end()) throw Error("oracle result has no node " + l);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += it->second[i];
    }
    return out;
}

ProbabilityTrace OracleResult::trace(const std::string& label, const std::vector<std::string>& nodes,
                                     const SystemParams& p) const {
    return {time_grid, sum(nodes), label, p};
}

namespace {

double system_frequency(const SystemParams& p) {
    return std::max({1.0, p.gamma1, p.gamma2, p.kappa, 2.0 * std::abs(p.g1), 2.0 * std::abs(p.g2),
                     2.0 * std::abs(p.g12), std::abs(p.omega01 - p.omega02), std::abs(p.omega_c - p.omega01),
                     std::abs(p.omega_c - p.omega02)});
}

OracleResult evolve_once(const StateNetwork& net, const SystemParams& p, const OracleConfig& cfg,
                         const std::vector<double>& times, MatvecMode mode) {
    if (times.empty() || times.front() != 0.0) throw Error("oracle time grid must start at 0");
    for (std::size_t i = 1; i < times.size(); ++i)
        if (!(times[i] > times[i - 1])) throw Error("oracle time grid must increase");

    const auto sys = build_oracle_system(net, p, cfg);
    const std::size_t nn = net.nodes.size();
    std::vector<cplx> v(sys.h.n, 0.0);
    v[sys.initial_index] = 1.0;

    OracleResult r;
    r.time_grid = times;
    r.modes = sys.h.n;
    std::vector<std::vector<double>> pop(nn, std::vector<double>(times.size(), 0.0));
    std::vector<double> sink(nn, 0.0);

    auto record = [&](std::size_t ti) {
        double norm = 0.0;
        for (std::size_t k = 0; k < nn; ++k) {
            const double a = slot_population(sys, k, v);
            pop[k][ti] = a + sink[k];
            norm += a + sink[k];
        }
        if (!std::isfinite(norm) || norm > 1.0 + 1e-4)
            throw IntegratorDivergence("oracle norm grew to " + std::to_string(norm));
        r.norm.push_back(norm);
    };
    auto flux = [&](std::vector<double>& f) {
        f.assign(nn, 0.0);
        for (const auto& sk : sys.sinks) f[sk.target] += sk.rate * slot_population(sys, sk.source, v);
    };

    Propagator prop(sys, cfg.tolerance, mode);
    record(0);
    const double h_max = 1.0 / (8.0 * system_frequency(p));
    std::vector<double> f0, f1, f2;
    for (std::size_t ti = 1; ti < times.size(); ++ti) {
        const double dt = times[ti] - times[ti - 1];
        if (sys.sinks.empty()) {
            prop.step(v, dt);
        } else {
            // Simpson's rule for the sink flux on an even number of substeps.
            const auto half = static_cast<std::size_t>(std::max(1.0, std::ceil(dt / (2.0 * h_max))));
            const double h = dt / (2.0 * half);
            flux(f0);
            for (std::size_t k = 0; k < half; ++k) {
                prop.step(v, h);
                flux(f1);
                prop.step(v, h);
                flux(f2);
                for (std::size_t q = 0; q < nn; ++q) sink[q] += h / 3.0 * (f0[q] + 4.0 * f1[q] + f2[q]);
                std::swap(f0, f2);
            }
        }
        record(ti);
    }
    for (std::size_t k = 0; k < nn; ++k) r.population[net.nodes[k].label] = std::move(pop[k]);
    return r;
}

} // namespace

OracleResult oracle_evolve(const StateNetwork& net, const SystemParams& p, const OracleConfig& cfg,
                           const std::vector<double>& times, MatvecMode mode) {
    auto r = evolve_once(net, p, cfg, times, mode);
    if (!cfg.convergence_doubling) return r;
    OracleConfig wide = cfg;
    if (wide.window_half_width > 0.0) wide.window_half_width *= 2.0;
    wide.window_scale *= 2.0;
    wide.convergence_doubling = false;
    const auto r2 = evolve_once(net, p, wide, times, mode);
    double err = 0.0;
    for (const auto& [label, a] : r.population) {
        const auto& b = r2.population.at(label);
        for (std::size_t i = 0; i < a.size(); ++i) err = std::max(err, std::abs(a[i] - b[i]));
    }
    r.error_estimate = err;
    if (err > 10.0 * cfg.target_tolerance)
        throw NonConvergedDiscretization("oracle doubling check changed a trace by " + std::to_string(err));
    return r;
}

} // namespace cqed
