#include "hypratio/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <sstream>

namespace hypratio {

void gauss_jacobi_rule(int n, double alpha, double beta,
                       std::vector<double>& nodes, std::vector<double>& weights) {
    if (n < 1) throw ParamError("gauss_jacobi_rule: n must be positive");
    if (alpha <= -1.0 || beta <= -1.0)
        throw ParamError("gauss_jacobi_rule: exponents must exceed -1");

    const double ab = alpha + beta;
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    J(0, 0) = (beta - alpha) / (ab + 2.0);
    for (int k = 1; k < n; ++k) {
        double den = (2.0 * k + ab) * (2.0 * k + ab + 2.0);
        J(k, k) = (beta * beta - alpha * alpha) / den;
        double b2;
        if (k == 1) {
            b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) /
                 ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        } else {
            b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                 ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) *
                  (2.0 * k + ab - 1.0));
        }
        J(k, k - 1) = J(k - 1, k) = std::sqrt(b2);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    double mu0 = std::exp((ab + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                          std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0));
    nodes.resize(n);
    weights.resize(n);
    for (int i = 0; i < n; ++i) {
        nodes[i] = es.eigenvalues()(i);
        double v0 = es.eigenvectors()(0, i);
        weights[i] = mu0 * v0 * v0;
    }
}

namespace {

// log(1 + e^x) without overflow
double softplus(double x) {
    if (x > 36.0) return x;
    if (x < -700.0) return 0.0;
    return std::log1p(std::exp(x));
}

constexpr double kH0 = 0.5;
// Safety cap on the transformed variable only; node generation normally stops
// much earlier, when the transformed weight drops below e^-60. Endpoint
// exponents close to -1 push useful nodes far beyond |u| = 8 (t underflows to
// 0 there; the node weights are carried in logarithms, and the density
// callbacks take well-defined limits).
constexpr double kUMax = 40.0;

} // namespace

WeightedDensity::WeightedDensity(double p, double q, DensityFn g, QuadratureConfig cfg)
    : p_(p), q_(q), g_(std::move(g)), cfg_(cfg) {
    if (p_ <= -1.0 || q_ <= -1.0)
        throw ParamError("quadrature density exponents must exceed -1");
    if (cfg_.max_levels < 2 || cfg_.abs_tol <= 0.0 || cfg_.rel_tol <= 0.0)
        throw ParamError("invalid quadrature configuration");
}

double WeightedDensity::value_at(double t) const {
    double omt = 1.0 - t;
    return std::pow(t, p_) * std::pow(omt, q_) * g_(t, omt, std::log(t), std::log1p(-t));
}

void WeightedDensity::ensure_level(int level) const {
    while (static_cast<int>(levels_.size()) <= level) {
        int L = static_cast<int>(levels_.size());
        double h = kH0 / double(1 << L);
        std::vector<Node> nodes;

        auto push = [&](double u) -> bool {
            double w = M_PI_2 * std::sinh(u);
            double logt = -softplus(-2.0 * w);
            double logomt = -softplus(2.0 * w);
            // transform weight dt/du = pi*cosh(u)*t*(1-t), times the step h
            double logwp = std::log(M_PI * h * std::cosh(u)) + logt + logomt;
            double logdw = logwp + p_ * logt + q_ * logomt;
            if (logwp < -740.0 && logdw < -740.0) return false;
            Node nd;
            nd.t = std::exp(logt);
            nd.omt = std::exp(logomt);
            nd.wplain = std::exp(std::max(logwp, -745.0));
            double dw = std::exp(std::max(logdw, -745.0));
            nd.dens = dw == 0.0 ? 0.0 : dw * g_(nd.t, nd.omt, logt, logomt);
            nodes.push_back(nd);
            return logwp > -60.0 || logdw > -60.0;
        };

        if (L == 0) {
            push(0.0);
            for (int dir : {+1, -1}) {
                for (int k = 1; k * h <= kUMax; ++k)
                    if (!push(dir * k * h)) break;
            }
        } else {
            // only the odd multiples of h are new at this level
            for (int dir : {+1, -1}) {
                for (int k = 1; k * h <= kUMax; k += 2)
                    if (!push(dir * k * h)) break;
            }
        }
        levels_.push_back(std::move(nodes));
    }
}

QuadratureResult WeightedDensity::sum_levels(
    const std::function<cplx(const Node&)>& f) const {
    std::vector<cplx> partial; // per-level sums, each carrying its own h
    cplx prev = 0.0;
    for (int L = 0; L < cfg_.max_levels; ++L) {
        ensure_level(L);
        cplx s = 0.0;
        for (const Node& nd : levels_[L]) s += f(nd);
        partial.push_back(s);
        // trapezoid value at step h_L: coarser levels over-weight by 2^(L-l)
        cplx I = 0.0;
        for (int l = 0; l <= L; ++l) I += partial[l] * std::ldexp(1.0, l - L);
        if (L >= 1) {
            double gap = std::abs(I - prev);
            double bound = std::max(cfg_.abs_tol, cfg_.rel_tol * std::abs(I));
            if (gap <= bound) return {I, L + 1, gap};
        }
        prev = I;
    }
    std::ostringstream os;
    os << "quadrature did not converge in " << cfg_.max_levels
       << " levels; last gap " << std::abs(prev);
    throw NumericError(os.str());
}

QuadratureResult WeightedDensity::integrate(const KernelFn& kernel) const {
    if (cfg_.scheme == QuadScheme::GaussJacobiComposite) return integrate_gj(kernel);
    return sum_levels([&](const Node& nd) -> cplx {
        if (nd.dens == 0.0) return 0.0;
        return nd.dens * kernel(nd.t, nd.omt);
    });
}

QuadratureResult WeightedDensity::pv_cauchy(double x) const {
    if (!(x > 1.0)) throw ParamError("pv_cauchy requires x > 1");
    const double t0 = 1.0 / x;
    const double D0 = value_at(t0);
    const double pv_base = -std::log(x - 1.0) / x; // PV of 1/(1-xt) on (0,1)
    // slope of the density at the pole, for nodes landing exactly on it
    const double dstep = 1e-6 * std::min(t0, 1.0 - t0);
    const double D0p = (value_at(t0 + dstep) - value_at(t0 - dstep)) / (2.0 * dstep);
    QuadratureResult r = sum_levels([&](const Node& nd) -> cplx {
        double den = 1.0 - x * nd.t;
        if (std::fabs(den) < 1e-13) // removable: (D(t)-D0)/(1-xt) -> -D'(t0)/x
            return cplx(-nd.wplain * D0p / x);
        double num = nd.dens - D0 * nd.wplain;
        if (num == 0.0) return 0.0;
        return cplx(num / den);
    });
    r.value += D0 * pv_base;
    return r;
}

cplx WeightedDensity::gj_pass(int npanel, const KernelFn& kernel) const {
    const double sigma = 0.25;
    const int K = 10;

    std::vector<double> xs, ws, xj, wj;
    cplx total = 0.0;

    // graded breakpoints 0 < s0 < s1 < ... < 0.5, mirrored on the right
    std::vector<double> brk(K + 1);
    for (int j = 0; j <= K; ++j) brk[j] = 0.5 * std::pow(sigma, K - j);

    // left end panel (0, s0]: fold t^p into a Jacobi weight
    gauss_jacobi_rule(npanel, 0.0, p_, xj, wj);
    {
        double s = brk[0];
        double fac = std::pow(0.5 * s, p_ + 1.0);
        for (int i = 0; i < npanel; ++i) {
            double t = 0.5 * s * (xj[i] + 1.0);
            double omt = 1.0 - t;
            total += fac * wj[i] * std::pow(omt, q_) *
                     g_(t, omt, std::log(t), std::log1p(-t)) * kernel(t, omt);
        }
    }
    // right end panel [1-s0, 1): fold (1-t)^q
    gauss_jacobi_rule(npanel, q_, 0.0, xj, wj);
    {
        double s = brk[0];
        double fac = std::pow(0.5 * s, q_ + 1.0);
        for (int i = 0; i < npanel; ++i) {
            double omt = 0.5 * s * (1.0 - xj[i]);
            double t = 1.0 - omt;
            total += fac * wj[i] * std::pow(t, p_) *
                     g_(t, omt, std::log1p(-omt), std::log(omt)) * kernel(t, omt);
        }
    }
    // interior panels, Gauss-Legendre
    gauss_jacobi_rule(npanel, 0.0, 0.0, xs, ws);
    auto panel = [&](double lo, double hi, bool mirrored) {
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (int i = 0; i < npanel; ++i) {
            double u = mid + half * xs[i];
            double t = mirrored ? 1.0 - u : u;
            double omt = mirrored ? u : 1.0 - t;
            double logt = mirrored ? std::log1p(-u) : std::log(u);
            double logomt = mirrored ? std::log(u) : std::log1p(-u);
            total += half * ws[i] * std::pow(t, p_) * std::pow(omt, q_) *
                     g_(t, omt, logt, logomt) * kernel(t, omt);
        }
    };
    for (int j = 0; j < K; ++j) {
        panel(brk[j], brk[j + 1], false);
        panel(brk[j], brk[j + 1], true); // mirrored copy on [1-b_{j+1}, 1-b_j]
    }
    return total;
}

QuadratureResult WeightedDensity::integrate_gj(const KernelFn& kernel) const {
    static const int sizes[] = {16, 24, 32, 40};
    cplx prev = 0.0;
    for (size_t i = 0; i < std::size(sizes); ++i) {
        cplx I = gj_pass(sizes[i], kernel);
        if (i >= 1) {
            double gap = std::abs(I - prev);
            double bound = std::max(cfg_.abs_tol, cfg_.rel_tol * std::abs(I));
            if (gap <= bound) return {I, static_cast<int>(i) + 1, gap};
        }
        prev = I;
    }
    throw NumericError("composite Gauss-Jacobi quadrature did not converge");
}

} // namespace hypratio
