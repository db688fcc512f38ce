// quadrature.hpp — composite Gauss-Legendre panels with adaptive bisection
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gdicke {

/// Controls evaluation of the k-integrals: `panels` uniform starting panels,
/// refined by bisection until neighbouring estimates agree to `abs_tol`
/// (apportioned by panel width), with a hard cap of `max_panels` panel
/// evaluations.
struct QuadratureSpec {
    int panels = 16;
    double abs_tol = 1e-10;
    int max_panels = 4096;

    void validate() const {
        if (panels < 16) throw std::invalid_argument("QuadratureSpec: panels must be >= 16");
        if (!(abs_tol > 0.0)) throw std::invalid_argument("QuadratureSpec: abs_tol must be > 0");
        if (max_panels < panels)
            throw std::invalid_argument("QuadratureSpec: max_panels must be >= panels");
    }
};

/// Thrown when the adaptive refinement cannot reach abs_tol within max_panels.
struct QuadratureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// n-point Gauss-Legendre rule on [-1, 1]; nodes found by Newton iteration
/// on the Legendre recurrence. Exact for polynomials of degree 2n-1.
class GaussLegendre {
public:
    explicit GaussLegendre(int n);

    int size() const { return static_cast<int>(nodes_.size()); }

    template <class F>
    double apply(F&& f, double a, double b) const {
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        double sum = 0.0;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            sum += weights_[i] * f(mid + half * nodes_[i]);
        return sum * half;
    }

    const std::vector<double>& nodes() const { return nodes_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

/// Shared 16-point rule used by the adaptive driver.
const GaussLegendre& gauss_rule_16();

/// Fixed composite rule: `panels` equal panels of an `order`-point rule.
template <class F>
double composite_gauss(F&& f, double a, double b, int panels, int order = 16) {
    if (panels < 1) throw std::invalid_argument("composite_gauss: panels must be >= 1");
    const GaussLegendre rule(order);
    const double h = (b - a) / panels;
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) sum += rule.apply(f, a + i * h, a + (i + 1) * h);
    return sum;
}

/// Adaptive composite integration of f over [a, b]. Starts from spec.panels
/// uniform panels plus any `extra_breaks` inside (a, b); each panel is
/// accepted once its one-panel and two-half-panel 16-point estimates agree
/// to the panel's share of spec.abs_tol, otherwise it is bisected.
template <class F>
double integrate_adaptive(F&& f, double a, double b, const QuadratureSpec& spec,
                          std::span<const double> extra_breaks = {}) {
    spec.validate();
    if (!(b > a)) return 0.0;

    std::vector<double> cuts;
    cuts.reserve(spec.panels + extra_breaks.size() + 1);
    for (int i = 0; i <= spec.panels; ++i)
        cuts.push_back(a + (b - a) * (static_cast<double>(i) / spec.panels));
    for (double c : extra_breaks)
        if (c > a && c < b) cuts.push_back(c);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    struct Seg {
        double lo, hi;
    };
    std::vector<Seg> work;
    work.reserve(cuts.size() + 64);
    for (std::size_t i = cuts.size() - 1; i > 0; --i) work.push_back({cuts[i - 1], cuts[i]});

    const GaussLegendre& rule = gauss_rule_16();
    const double inv_width = 1.0 / (b - a);
    const double min_width = 1e-14 * (b - a);
    double total = 0.0;
    int used = 0;
    while (!work.empty()) {
        const Seg s = work.back();
        work.pop_back();
        if (++used > spec.max_panels)
            throw QuadratureError("integrate_adaptive: abs_tol " + std::to_string(spec.abs_tol) +
                                  " not reached within " + std::to_string(spec.max_panels) +
                                  " panels");
        const double mid = 0.5 * (s.lo + s.hi);
        const double coarse = rule.apply(f, s.lo, s.hi);
        const double fine = rule.apply(f, s.lo, mid) + rule.apply(f, mid, s.hi);
        // The rounding floor keeps an abs_tol below representable accuracy
        // from refining forever on large-magnitude integrands.
        const double noise = 32.0 * std::numeric_limits<double>::epsilon() * std::abs(fine);
        const double tol = std::max(spec.abs_tol * (s.hi - s.lo) * inv_width, noise);
        if (std::abs(fine - coarse) <= tol || (s.hi - s.lo) <= min_width) {
            total += fine;
        } else {
            work.push_back({mid, s.hi});
            work.push_back({s.lo, mid});
        }
    }
    return total;
}

}  // namespace gdicke
