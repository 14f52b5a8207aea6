#include "scsigma/numerics.hpp"

#include "scsigma/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace scsigma::numerics {

namespace {

// 15-point Kronrod extension of the 7-point Gauss rule (QUADPACK qk15).
// All nodes are interior, so the rule never touches the endpoints.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Panel {
    double a;
    double b;
    double value;
    double error;
};

struct PanelOrder {
    bool operator()(const Panel &x, const Panel &y) const { return x.error < y.error; }
};

Panel evaluate_panel(const ScalarFn &f, double a, double b) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double fc = f(center);
    double result_gauss = kWg[3] * fc;
    double result_kronrod = kWgk[7] * fc;
    double resabs = kWgk[7] * std::fabs(fc);

    double fv1[7];
    double fv2[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        fv1[j] = f(center - dx);
        fv2[j] = f(center + dx);
        const double fsum = fv1[j] + fv2[j];
        if (j % 2 == 1) {
            result_gauss += kWg[j / 2] * fsum;
        }
        result_kronrod += kWgk[j] * fsum;
        resabs += kWgk[j] * (std::fabs(fv1[j]) + std::fabs(fv2[j]));
    }

    const double mean = 0.5 * result_kronrod;
    double resasc = kWgk[7] * std::fabs(fc - mean);
    for (int j = 0; j < 7; ++j) {
        resasc += kWgk[j] * (std::fabs(fv1[j] - mean) + std::fabs(fv2[j] - mean));
    }

    const double value = result_kronrod * half;
    resabs *= std::fabs(half);
    resasc *= std::fabs(half);

    double err = std::fabs((result_kronrod - result_gauss) * half);
    if (resasc != 0.0 && err != 0.0) {
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    }
    const double eps = std::numeric_limits<double>::epsilon();
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) {
        err = std::max(eps * 50.0 * resabs, err);
    }

    if (!std::isfinite(value)) {
        throw DomainError("integrand produced a non-finite value");
    }
    return Panel{a, b, value, err};
}

bool splittable(const Panel &p) {
    const double mid = 0.5 * (p.a + p.b);
    return mid > p.a && mid < p.b;
}

} // namespace

QuadratureResult integrate_adaptive(const ScalarFn &f, double a, double b, double rel_tol,
                                    double abs_tol, std::size_t max_evaluations) {
    if (!(a < b)) {
        throw DomainError("integrate_adaptive requires a < b");
    }

    std::size_t evaluations = 15;
    Panel root = evaluate_panel(f, a, b);
    double total_value = root.value;
    double total_error = root.error;

    std::priority_queue<Panel, std::vector<Panel>, PanelOrder> active;
    active.push(root);
    double stuck_error = 0.0; // panels too narrow to split further

    auto tolerance = [&] { return std::max(abs_tol, rel_tol * std::fabs(total_value)); };

    while (total_error > tolerance()) {
        if (active.empty()) {
            throw ConvergenceError("quadrature stalled: interval resolution exhausted before "
                                   "reaching the requested tolerance");
        }
        Panel worst = active.top();
        active.pop();
        if (!splittable(worst)) {
            stuck_error += worst.error;
            if (stuck_error > tolerance() && active.empty()) {
                throw ConvergenceError("quadrature stalled on an unresolvable singularity");
            }
            continue;
        }
        if (evaluations + 30 > max_evaluations) {
            throw ConvergenceError("quadrature budget of " + std::to_string(max_evaluations) +
                                   " evaluations exhausted");
        }
        const double mid = 0.5 * (worst.a + worst.b);
        Panel left = evaluate_panel(f, worst.a, mid);
        Panel right = evaluate_panel(f, mid, worst.b);
        evaluations += 30;

        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        active.push(left);
        active.push(right);
    }

    return QuadratureResult{total_value, total_error, evaluations};
}

QuadratureResult integrate_semi_infinite(const ScalarFn &f, double a, double decay_scale,
                                         double rel_tol, double abs_tol,
                                         std::size_t max_evaluations) {
    if (!(decay_scale > 0.0)) {
        throw DomainError("integrate_semi_infinite requires decay_scale > 0");
    }
    const double s = decay_scale;
    auto mapped = [&f, a, s](double u) {
        const double om = 1.0 - u;
        double x = a + s * u / om;
        if (!std::isfinite(x)) {
            return 0.0; // beyond the representable tail of a decaying integrand
        }
        if (x <= a) {
            // u > 0 guarantees x > a mathematically; keep the evaluation on
            // the open interval when the offset rounds away
            x = std::nextafter(a, std::numeric_limits<double>::infinity());
        }
        const double fx = f(x);
        if (fx == 0.0) {
            return 0.0;
        }
        return fx * s / (om * om);
    };
    return integrate_adaptive(mapped, 0.0, 1.0, rel_tol, abs_tol, max_evaluations);
}

double bisect_root(const ScalarFn &f, double lo, double hi, double x_tol) {
    if (!(lo < hi)) {
        throw DomainError("bisect_root requires lo < hi");
    }
    double flo = f(lo);
    if (flo == 0.0) {
        return lo;
    }
    double fhi = f(hi);
    if (fhi == 0.0) {
        return hi;
    }
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw DomainError("bisect_root bracket does not straddle a sign change");
    }

    while (0.5 * (hi - lo) > x_tol) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi) {
            break; // interval narrower than one ulp
        }
        const double fmid = f(mid);
        if (fmid == 0.0) {
            return mid;
        }
        if ((fmid > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fmid;
        } else {
            hi = mid;
        }
    }
    return lo + 0.5 * (hi - lo);
}

ScalarMaximum maximize_scalar(const ScalarFn &f, double lo, double hi, double x_tol,
                              int grid_points) {
    if (!(lo < hi)) {
        throw DomainError("maximize_scalar requires lo < hi");
    }
    const int n = std::max(grid_points, 2);

    double best_x = lo;
    double best_f = -std::numeric_limits<double>::infinity();
    auto consider = [&](double x, double fx) {
        if (fx > best_f) {
            best_f = fx;
            best_x = x;
        }
    };

    const double step = (hi - lo) / static_cast<double>(n - 1);
    int best_index = 0;
    for (int i = 0; i < n; ++i) {
        const double x = (i == n - 1) ? hi : lo + step * i;
        const double fx = f(x);
        if (fx > best_f) {
            best_index = i;
        }
        consider(x, fx);
    }

    double a = std::max(lo, lo + step * (best_index - 1));
    double b = std::min(hi, lo + step * (best_index + 1));

    // golden-section refinement, tracking every evaluation
    const double invphi = 0.6180339887498948482;
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    consider(x1, f1);
    consider(x2, f2);
    while (b - a > x_tol) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            if (x2 <= x1 || x2 >= b) {
                break;
            }
            f2 = f(x2);
            consider(x2, f2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            if (x1 <= a || x1 >= x2) {
                break;
            }
            f1 = f(x1);
            consider(x1, f1);
        }
    }
    const double mid = 0.5 * (a + b);
    consider(mid, f(mid));

    return ScalarMaximum{best_x, best_f};
}

} // namespace scsigma::numerics
