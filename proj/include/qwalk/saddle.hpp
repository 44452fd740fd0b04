#ifndef QWALK_SADDLE_HPP
#define QWALK_SADDLE_HPP

#include <complex>
#include <string>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

using Complex = std::complex<double>;

// Parameters of the contour-integral representation
//   J_m^{(gamma, b m + beta)}(0) = \oint e^{m h(z)} g(z) dz,
//   h(z) = ln(z^2-1) - ln 2 - ln z + b ln(1+z),
//   g(z) = (1/2pi i) (1+z)^beta (1-z)^gamma / z.
// b = 2a/(1-a) throughout (a = |n|/t).  The left/right spinor components
// at nonnegative n use (gamma=0, beta=(1+a)/(1-a)) and (gamma=1, beta=b);
// at negative n the same h applies with (gamma=0, beta=-1) and
// (gamma=1, beta=b) at reduced degree.
struct PhaseContext {
    double alpha = 0.0;   // |n|/t
    int gamma = 0;        // 0 or 1
    double beta = 0.0;
    double b() const { return 2.0 * alpha / (1.0 - alpha); }

    static PhaseContext left(double a) { return {a, 0, (1.0 + a) / (1.0 - a)}; }
    static PhaseContext right(double a) { return {a, 1, 2.0 * a / (1.0 - a)}; }
    static PhaseContext left_neg(double a) { return {a, 0, -1.0}; }
    static PhaseContext right_neg(double a) { return {a, 1, 2.0 * a / (1.0 - a)}; }
};

// h and its derivatives 0..4, closed form.  ln(z^2-1) is evaluated as
// ln(z-1) + ln(z+1) with principal branches, which keeps the leaf-shaped
// level sets inside one sheet (cuts only on the real segments z <= 1 and
// z <= -1).
Complex h_eval(Complex z, double alpha, int order = 0);

// Same h on the sheet with ln(z-1) continued to ln(1-z) + i pi: analytic in
// a neighborhood of both saddles for every alpha in (0,1).  Derivatives of
// order >= 1 are rational and agree with h_eval.
Complex h_sheet(Complex z, double alpha);

// g and derivatives 0..2.
Complex g_eval(Complex z, const PhaseContext& ctx, int order = 0);

// Saddles of h: roots of (1+a) z^2 - 2a z + (1-a) = 0.  zeta_plus carries
// the + square root (upper half plane for |a| < 1/sqrt2, the larger real
// root above), matching the labeling that gives positive Airy variable on
// the exponential side.
struct SaddleData {
    Complex zeta_plus, zeta_minus;
    Complex h_plus[4];    // h, h', h'', h''' at zeta_plus
    Complex h_minus[4];
};
SaddleData saddle_points(double alpha);

// h(zeta_plus) minus the per-step growth the 2^{n/2} wavefunction prefactor
// absorbs; its real part vanishes identically on the oscillatory range, so
// exp of the step-normalized exponent is a pure phase there.
// (Re h(zeta_plus) = a/(1-a) ln 2 exactly for |a| < 1/sqrt2.)
Complex normalized_exponent(double alpha);

struct ContourPoint {
    double re, im, re_h, im_h;
};

struct ContourOptions {
    double step0 = 1e-3;        // initial arclength step
    int max_points = 2000;
    double reh_drop = 40.0;     // stop once Re h fell this far below the saddle
    double sing_tol = 1e-6;     // stop distance from z = 0, +-1
};

struct Contour {
    std::vector<ContourPoint> pts;
    bool truncated = false;     // step-size underflow before a stop condition
    std::string note;
};

// Number of descent rays leaving the saddle: 2 per simple saddle, 3 at the
// coalescence point.  Branch ids enumerate (saddle, ray).
int descent_branch_count(double alpha);

// Trace the level set Im h = Im h(saddle) from the saddle along descent
// directions (Re h strictly decreasing).  branch < rays(zeta_plus) selects
// a ray at zeta_plus, the rest index rays at zeta_minus.
Contour descent_contour(double alpha, int branch, const ContourOptions& opt = {});

// CSV columns: re,im,re_h,im_h
std::string contour_csv(const Contour& c);

} // namespace qwalk

#endif
