#include "qwalk/saddle.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qwalk {

namespace {
constexpr double kLn2 = 0.69314718055994530942;
constexpr double kInvSqrt2 = 0.70710678118654752440;

bool near(Complex z, Complex w, double tol) { return std::abs(z - w) < tol; }
} // namespace

Complex h_eval(Complex z, double alpha, int order) {
    if (near(z, {0, 0}, 1e-300) || near(z, {1, 0}, 1e-300) || near(z, {-1, 0}, 1e-300))
        fail(Errc::domain, "h_eval: singular point");
    const double b = 2.0 * alpha / (1.0 - alpha);
    switch (order) {
        case 0:
            return std::log(z - 1.0) + std::log(z + 1.0) - kLn2 - std::log(z) +
                   b * std::log(1.0 + z);
        case 1:
            return 1.0 / (z - 1.0) + (1.0 + b) / (1.0 + z) - 1.0 / z;
        case 2:
            return -1.0 / ((z - 1.0) * (z - 1.0)) - (1.0 + b) / ((1.0 + z) * (1.0 + z)) +
                   1.0 / (z * z);
        case 3:
            return 2.0 / std::pow(z - 1.0, 3) + 2.0 * (1.0 + b) / std::pow(1.0 + z, 3) -
                   2.0 / std::pow(z, 3);
        case 4:
            return -6.0 / std::pow(z - 1.0, 4) - 6.0 * (1.0 + b) / std::pow(1.0 + z, 4) +
                   6.0 / std::pow(z, 4);
        default:
            fail(Errc::domain, "h_eval: derivative order outside 0..4");
    }
}

Complex h_sheet(Complex z, double alpha) {
    const double b = 2.0 * alpha / (1.0 - alpha);
    return std::log(1.0 - z) + Complex(0.0, M_PI) + (1.0 + b) * std::log(1.0 + z) - kLn2 -
           std::log(z);
}

Complex g_eval(Complex z, const PhaseContext& ctx, int order) {
    if (near(z, {0, 0}, 1e-300)) fail(Errc::domain, "g_eval: z = 0");
    const Complex i2pi(0.0, 2.0 * M_PI);
    Complex base = std::exp(ctx.beta * std::log(1.0 + z)) / (i2pi * z);
    if (ctx.gamma == 1) base *= (1.0 - z);
    if (order == 0) return base;
    Complex ld = ctx.beta / (1.0 + z) - 1.0 / z;
    if (ctx.gamma == 1) ld -= 1.0 / (1.0 - z);
    if (order == 1) return base * ld;
    Complex ld2 = -ctx.beta / ((1.0 + z) * (1.0 + z)) + 1.0 / (z * z);
    if (ctx.gamma == 1) ld2 -= 1.0 / ((1.0 - z) * (1.0 - z));
    if (order == 2) return base * (ld * ld + ld2);
    fail(Errc::domain, "g_eval: derivative order outside 0..2");
}

SaddleData saddle_points(double alpha) {
    if (!(std::abs(alpha) < 1.0)) fail(Errc::domain, "saddle_points: |alpha| >= 1");
    const double disc = 2.0 * alpha * alpha - 1.0;
    const Complex s = disc >= 0.0 ? Complex(std::sqrt(disc), 0.0)
                                  : Complex(0.0, std::sqrt(-disc));
    SaddleData d;
    d.zeta_plus = (alpha + s) / (1.0 + alpha);
    d.zeta_minus = (alpha - s) / (1.0 + alpha);
    for (int k = 0; k < 4; ++k) {
        d.h_plus[k] = h_eval(d.zeta_plus, alpha, k);
        d.h_minus[k] = h_eval(d.zeta_minus, alpha, k);
    }
    return d;
}

Complex normalized_exponent(double alpha) {
    const SaddleData d = saddle_points(alpha);
    return d.h_plus[0] - alpha / (1.0 - alpha) * kLn2;
}

int descent_branch_count(double alpha) {
    return std::abs(std::abs(alpha) - kInvSqrt2) < 1e-12 ? 3 : 4;
}

namespace {

// Descent ray directions leaving a saddle: h'' != 0 gives two opposite rays
// where h''(dz)^2 is real negative; at the coalescence point h'' == 0 and
// h''' gives three rays.
std::vector<Complex> descent_dirs(Complex zs, double alpha) {
    const Complex h2 = h_eval(zs, alpha, 2);
    std::vector<Complex> dirs;
    if (std::abs(h2) > 1e-8) {
        const double th = (M_PI - std::arg(h2)) / 2.0;
        dirs.push_back(std::polar(1.0, th));
        dirs.push_back(std::polar(1.0, th + M_PI));
    } else {
        const Complex h3 = h_eval(zs, alpha, 3);
        const double th = (M_PI - std::arg(h3)) / 3.0;
        for (int k = 0; k < 3; ++k)
            dirs.push_back(std::polar(1.0, th + 2.0 * M_PI * k / 3.0));
    }
    return dirs;
}

} // namespace

Contour descent_contour(double alpha, int branch, const ContourOptions& opt) {
    if (!(std::abs(alpha) < 1.0 - 1e-9)) fail(Errc::domain, "descent_contour: |alpha| too close to 1");
    const SaddleData sd = saddle_points(alpha);
    const bool coalesced = descent_branch_count(alpha) == 3;
    Complex zs;
    std::vector<Complex> dirs;
    if (coalesced) {
        zs = 0.5 * (sd.zeta_plus + sd.zeta_minus);
        dirs = descent_dirs(zs, alpha);
        if (branch < 0 || branch >= 3) fail(Errc::domain, "descent_contour: branch outside 0..2");
    } else {
        auto dp = descent_dirs(sd.zeta_plus, alpha);
        auto dm = descent_dirs(sd.zeta_minus, alpha);
        if (branch < 0 || branch >= 4) fail(Errc::domain, "descent_contour: branch outside 0..3");
        zs = branch < 2 ? sd.zeta_plus : sd.zeta_minus;
        dirs = branch < 2 ? dp : dm;
    }
    const Complex dir0 = dirs[static_cast<std::size_t>(coalesced ? branch : branch % 2)];

    Contour c;
    const double im_level = h_eval(zs, alpha, 0).imag();
    const double reh0 = h_eval(zs, alpha, 0).real();
    auto push = [&](Complex z) {
        const Complex hv = h_eval(z, alpha, 0);
        c.pts.push_back(ContourPoint{z.real(), z.imag(), hv.real(), hv.imag()});
    };
    push(zs);

    // leave the saddle along the ray until |h'| is usable
    double step = opt.step0;
    Complex z = zs + step * dir0;
    double last_reh = reh0;
    for (int it = 0; it < opt.max_points; ++it) {
        // corrector: one Newton projection back onto Im h = im_level, moving
        // along i conj(h')/|h'| (the direction that changes Im h fastest).
        Complex hp = h_eval(z, alpha, 1);
        double ah = std::abs(hp);
        if (ah > 1e-12) {
            const double resid = h_eval(z, alpha, 0).imag() - im_level;
            z -= Complex(0, 1) * std::conj(hp) * (resid / (ah * ah));
            hp = h_eval(z, alpha, 1);
            ah = std::abs(hp);
        }
        const Complex hv = h_eval(z, alpha, 0);
        if (hv.real() > last_reh + 1e-12) {
            c.truncated = true;
            c.note = "descent monotonicity lost";
            break;
        }
        last_reh = hv.real();
        push(z);
        if (std::abs(z) < opt.sing_tol || std::abs(z - 1.0) < opt.sing_tol ||
            std::abs(z + 1.0) < opt.sing_tol) {
            c.note = "reached singularity";
            break;
        }
        if (hv.real() < reh0 - opt.reh_drop) {
            c.note = "Re h drop reached";
            break;
        }
        if (ah < 1e-14) {
            c.truncated = true;
            c.note = "stalled at a stationary point";
            break;
        }
        // predictor: RK2 along -conj(h')/|h'| (unit-speed descent keeps
        // Im h constant exactly in the continuum).
        const double curv = std::abs(h_eval(z, alpha, 2)) / ah;
        double ds = std::min(opt.step0 * 50.0, 0.2 / (1.0 + curv));
        // shrink near the singular endpoints so the polyline lands close
        const double dmin = std::min({std::abs(z), std::abs(z - 1.0), std::abs(z + 1.0)});
        ds = std::min(ds, 0.5 * dmin);
        if (ds < 1e-15) {
            c.truncated = true;
            c.note = "step underflow";
            break;
        }
        const Complex k1 = -std::conj(hp) / ah;
        const Complex zmid = z + 0.5 * ds * k1;
        const Complex hpm = h_eval(zmid, alpha, 1);
        const double ahm = std::abs(hpm);
        if (ahm < 1e-14) {
            c.truncated = true;
            c.note = "stalled at a stationary point";
            break;
        }
        z += ds * (-std::conj(hpm) / ahm);
    }
    if (c.note.empty() && !c.truncated) c.note = "max points reached";
    return c;
}

std::string contour_csv(const Contour& c) {
    std::ostringstream os;
    os << "re,im,re_h,im_h\n";
    char buf[160];
    for (const auto& p : c.pts) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", p.re, p.im, p.re_h, p.im_h);
        os << buf;
    }
    return os.str();
}

} // namespace qwalk
