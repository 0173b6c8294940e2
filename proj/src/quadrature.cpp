#include "axial/quadrature.hpp"

#include <cmath>

namespace axial {

namespace {

struct SimpsonState {
    const std::function<double(double)>& f;
    double worst_err = 0.0;
    bool tol_met = true;
};

double simpson(double fa, double fm, double fb, double h) {
    return h / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(SimpsonState& st, double a, double b, double fa, double fm, double fb,
             double whole, double tol, int depth, double& err_out) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = st.f(lm);
    const double frm = st.f(rm);
    const double left = simpson(fa, flm, fm, m - a);
    const double right = simpson(fm, frm, fb, b - m);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || depth <= 0) {
        if (depth <= 0 && std::abs(delta) > 15.0 * tol) st.tol_met = false;
        err_out = std::abs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    double el = 0.0, er = 0.0;
    const double vl = adapt(st, a, m, fa, flm, fm, left, tol / 2.0, depth - 1, el);
    const double vr = adapt(st, m, b, fm, frm, fb, right, tol / 2.0, depth - 1, er);
    err_out = el + er;
    return vl + vr;
}

}  // namespace

QuadratureResult integrate_adaptive(const std::function<double(double)>& f, double a,
                                    double b, double abs_tol, int max_depth) {
    if (!(abs_tol > 0.0)) throw std::domain_error("integrate_adaptive: abs_tol must be > 0");
    if (a == b) return {0.0, 0.0};

    SimpsonState st{f};
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson(fa, fm, fb, b - a);
    double err = 0.0;
    const double value = adapt(st, a, b, fa, fm, fb, whole, abs_tol, max_depth, err);
    if (!st.tol_met && err > abs_tol)
        throw ToleranceError("integrate_adaptive: tolerance not met", err);
    return {value, err};
}

}  // namespace axial
