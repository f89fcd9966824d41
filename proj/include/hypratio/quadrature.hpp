#ifndef HYPRATIO_QUADRATURE_HPP
#define HYPRATIO_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "hypratio/types.hpp"

namespace hypratio {

enum class QuadScheme { DoubleExponential, GaussJacobiComposite };

struct QuadratureConfig {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_levels = 12;
    QuadScheme scheme = QuadScheme::DoubleExponential;
};

struct QuadratureResult {
    cplx value;
    int levels_used = 0;
    double last_gap = 0.0;
};

// Gauss-Jacobi rule on [-1,1] for the weight (1-x)^alpha (1+x)^beta,
// via the Golub-Welsch eigenvalue method. alpha, beta > -1.
void gauss_jacobi_rule(int n, double alpha, double beta,
                       std::vector<double>& nodes, std::vector<double>& weights);

// Integrals over (0,1) of  t^p (1-t)^q g(t) k(t)  for a fixed density
// t^p (1-t)^q g(t) (p, q > -1; g bounded and smooth on (0,1)) against many
// kernels k. Nodes and density values are cached across calls, so evaluating
// the same integral family at many z costs one g-evaluation pass only.
//
// The g callback receives (t, 1-t, log t, log(1-t)); the complement and both
// logarithms are computed without cancellation near the endpoints, and the
// logarithms stay exact even where t or 1-t underflows to 0 (deep
// double-exponential nodes), so endpoint asymptotics inside g can keep
// working from the logarithms alone.
class WeightedDensity {
public:
    using DensityFn = std::function<double(double, double, double, double)>;
    using KernelFn = std::function<cplx(double, double)>;

    WeightedDensity(double p, double q, DensityFn g, QuadratureConfig cfg = {});

    double exponent_zero() const { return p_; }
    double exponent_one() const { return q_; }
    const QuadratureConfig& config() const { return cfg_; }

    // t^p (1-t)^q g(t) at an interior point.
    double value_at(double t) const;

    // integral of density * kernel(t, 1-t) over (0,1); refines until two
    // consecutive levels agree within tolerances, else NumericError.
    QuadratureResult integrate(const KernelFn& kernel) const;

    // principal value of  integral density(t)/(1-x t) dt  for 1/x in (0,1),
    // by pole subtraction against the closed-form PV of 1/(1-xt).
    QuadratureResult pv_cauchy(double x) const;

private:
    struct Node {
        double t, omt;
        double wplain;  // transform weight for a plain dt integral (h included)
        double dens;    // wplain * t^p (1-t)^q g(t)
    };

    void ensure_level(int level) const;
    QuadratureResult sum_levels(const std::function<cplx(const Node&)>& f) const;

    QuadratureResult integrate_gj(const KernelFn& kernel) const;
    cplx gj_pass(int npanel, const KernelFn& kernel) const;

    double p_, q_;
    DensityFn g_;
    QuadratureConfig cfg_;
    mutable std::vector<std::vector<Node>> levels_;
};

} // namespace hypratio

#endif
