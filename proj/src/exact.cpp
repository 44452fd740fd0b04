#include "qwalk/exact.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qwalk {

double scaled_to_double(const BigInt& num, long halfpow) {
    if (num.is_zero()) return 0.0;
    // num * 2^{-halfpow/2}; go through msb + shift so the numerator may be
    // far larger than DBL_MAX.
    const bool neg = num < 0;
    BigInt a = neg ? BigInt(-num) : num;
    const long bits = static_cast<long>(boost::multiprecision::msb(a)) + 1;
    double mant;
    long e2 = 0;
    if (bits > 62) {
        e2 = bits - 62;
        mant = static_cast<double>(static_cast<std::uint64_t>(a >> e2));
    } else {
        mant = static_cast<double>(static_cast<std::uint64_t>(a));
    }
    double v = std::ldexp(mant, static_cast<int>(e2)) ;
    // apply 2^{-halfpow/2} = 2^{-floor(halfpow/2)} * (1/sqrt2)^{halfpow%2}
    v = std::ldexp(v, static_cast<int>(-(halfpow / 2)));
    if (halfpow % 2) v *= 0.70710678118654752440;
    return neg ? -v : v;
}

double ExactAmplitude::value() const { return scaled_to_double(num, halfpow); }

BigRat ExactAmplitude::squared() const {
    BigInt den = BigInt(1) << halfpow;
    return BigRat(num * num, den);
}

WalkState WalkState::initial(StepOrder order) {
    WalkState s;
    s.t_ = 0;
    s.nmin_ = 0;
    s.order_ = order;
    s.amp_.push_back(AmpPair{BigInt(0), BigInt(1)});
    return s;
}

ExactAmplitude WalkState::psi_l(long n) const {
    ExactAmplitude a{BigInt(0), static_cast<std::uint32_t>(t_)};
    if (n >= nmin_ && n <= site_max() && (n - nmin_) % 2 == 0)
        a.num = amp_[static_cast<std::size_t>((n - nmin_) / 2)].l;
    return a;
}

ExactAmplitude WalkState::psi_r(long n) const {
    ExactAmplitude a{BigInt(0), static_cast<std::uint32_t>(t_)};
    if (n >= nmin_ && n <= site_max() && (n - nmin_) % 2 == 0)
        a.num = amp_[static_cast<std::size_t>((n - nmin_) / 2)].r;
    return a;
}

BigInt WalkState::norm_numerator() const {
    BigInt s = 0;
    for (const auto& a : amp_) s += a.l * a.l + a.r * a.r;
    return s;
}

bool WalkState::normalized() const { return norm_numerator() == (BigInt(1) << t_); }

WalkState step(const WalkState& s, long t_budget) {
    if (s.t_ >= t_budget)
        fail(Errc::resource, "exact step budget exceeded (t_max=" +
                                 std::to_string(t_budget) + "); use the floating path");
    WalkState out;
    out.t_ = s.t_ + 1;
    out.order_ = s.order_;
    out.nmin_ = s.nmin_ - 1;
    const long ncount = static_cast<long>(s.amp_.size()) + 1;
    out.amp_.resize(static_cast<std::size_t>(ncount));
    auto get = [&](long n) -> AmpPair {
        if (n < s.nmin_ || n > s.site_max() || (n - s.nmin_) % 2 != 0)
            return AmpPair{BigInt(0), BigInt(0)};
        return s.amp_[static_cast<std::size_t>((n - s.nmin_) / 2)];
    };
    for (long i = 0; i < ncount; ++i) {
        const long n = out.nmin_ + 2 * i;
        AmpPair from_right = get(n + 1);
        AmpPair from_left = get(n - 1);
        AmpPair& dst = out.amp_[static_cast<std::size_t>(i)];
        if (s.order_ == StepOrder::FlipThenMove) {
            // coin first, then the new chirality moves
            dst.l = -from_right.l + from_right.r;
            dst.r = from_left.l + from_left.r;
        } else {
            // components arrive, then the coin mixes them
            dst.l = -from_right.l + from_left.r;
            dst.r = from_right.l + from_left.r;
        }
    }
    // MoveThenFlip leaves the leftmost comb site empty from step 1 on; trim
    // so exports stay minimal.
    while (out.amp_.size() > 1 && out.amp_.front().l.is_zero() && out.amp_.front().r.is_zero()) {
        out.amp_.erase(out.amp_.begin());
        out.nmin_ += 2;
    }
    while (out.amp_.size() > 1 && out.amp_.back().l.is_zero() && out.amp_.back().r.is_zero())
        out.amp_.pop_back();
    return out;
}

WalkState evolve(long t, StepOrder order, long t_budget) {
    if (t < 0) fail(Errc::domain, "negative step count");
    if (t > t_budget)
        fail(Errc::resource, "t exceeds the exact budget (t_max=" +
                                 std::to_string(t_budget) + "); use the floating path");
    WalkState s = WalkState::initial(order);
    for (long i = 0; i < t; ++i) s = step(s, t_budget);
    return s;
}

namespace {

BigInt binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

} // namespace

PathSum path_sum_amplitude(long n, long t) {
    if (t < 1 || n < -t || n > t) fail(Errc::domain, "site outside [-t, t]");
    if (((n - t) % 2 + 2) % 2 != 0) fail(Errc::domain, "parity violation: n != t (mod 2)");
    const long l = (t - n) / 2;
    PathSum ps;
    ps.endpoint = (n == t || n == -t);
    ps.l.halfpow = ps.r.halfpow = static_cast<std::uint32_t>(t);
    BigInt accl = 0, accr = 0;
    // R: sum_s C(l-1,s-1) C(t-l,s) (-1)^{t-s};  L: C(l-1,s) C(t-l,s) (-1)^{t-s-1}
    for (long s = 0; s <= t; ++s) {
        const BigInt c2 = binom(t - l, s);
        if (c2.is_zero() && s > 0) break;
        const int sgn = ((t - s) % 2 == 0) ? 1 : -1;
        accr += sgn * binom(l - 1, s - 1) * c2;
        accl -= sgn * binom(l - 1, s) * c2;
    }
    ps.l.num = accl;
    ps.r.num = accr;
    return ps;
}

std::vector<std::pair<long, BigRat>> probability(const WalkState& s) {
    std::vector<std::pair<long, BigRat>> p;
    p.reserve(s.size());
    const BigInt den = BigInt(1) << s.t();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const AmpPair& a = s.raw(i);
        p.emplace_back(s.site(i), BigRat(a.l * a.l + a.r * a.r, den));
    }
    return p;
}

void Kahan::add(double x) {
    double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
        c += (sum - t) + x;
    else
        c += (x - t) + sum;
    sum = t;
}

FloatState float_evolve(long t, StepOrder order) {
    if (t < 0) fail(Errc::domain, "negative step count");
    FloatState s;
    s.order = order;
    s.t = t;
    s.nmin = -t;
    const std::size_t count = static_cast<std::size_t>(t) + 1;
    s.l.assign(count, 0.0);
    s.r.assign(count, 0.0);
    // scratch buffers, comb site n = -tau + 2i at time tau
    std::vector<double> l(count, 0.0), r(count, 0.0), l2(count, 0.0), r2(count, 0.0);
    r[0] = 1.0;
    const double c = 0.70710678118654752440;
    for (long tau = 0; tau < t; ++tau) {
        const long m = tau + 2;            // sites at tau+1
        for (long i = 0; i < m; ++i) {
            // site n = -(tau+1) + 2i; neighbors n+-1 at indices i, i-1
            const double lp = (i <= tau) ? l[static_cast<std::size_t>(i)] : 0.0;
            const double rp = (i <= tau) ? r[static_cast<std::size_t>(i)] : 0.0;
            const double lm = (i >= 1 && i - 1 <= tau) ? l[static_cast<std::size_t>(i - 1)] : 0.0;
            const double rm = (i >= 1 && i - 1 <= tau) ? r[static_cast<std::size_t>(i - 1)] : 0.0;
            if (order == StepOrder::FlipThenMove) {
                l2[static_cast<std::size_t>(i)] = c * (-lp + rp);
                r2[static_cast<std::size_t>(i)] = c * (lm + rm);
            } else {
                l2[static_cast<std::size_t>(i)] = c * (-lp + rm);
                r2[static_cast<std::size_t>(i)] = c * (lp + rm);
            }
        }
        std::swap(l, l2);
        std::swap(r, r2);
    }
    s.l.assign(l.begin(), l.end());
    s.r.assign(r.begin(), r.end());
    return s;
}

double FloatState::psi_l(long n) const {
    if (n < nmin || (n - nmin) % 2 != 0) return 0.0;
    const std::size_t i = static_cast<std::size_t>((n - nmin) / 2);
    return i < l.size() ? l[i] : 0.0;
}

double FloatState::psi_r(long n) const {
    if (n < nmin || (n - nmin) % 2 != 0) return 0.0;
    const std::size_t i = static_cast<std::size_t>((n - nmin) / 2);
    return i < r.size() ? r[i] : 0.0;
}

double FloatState::total_probability() const {
    Kahan k;
    for (std::size_t i = 0; i < l.size(); ++i) k.add(l[i] * l[i] + r[i] * r[i]);
    return k.result();
}

double FloatState::moment(int order_k) const {
    Kahan k;
    for (std::size_t i = 0; i < l.size(); ++i) {
        const double a = static_cast<double>(site(i)) / static_cast<double>(t);
        k.add((l[i] * l[i] + r[i] * r[i]) * std::pow(a, order_k));
    }
    return k.result();
}

std::string state_to_csv(const WalkState& s) {
    std::ostringstream os;
    os << "n,psi_L_num,psi_R_num,halfpow,p_exact_num,p_exact_den\n";
    const BigInt den = BigInt(1) << s.t();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const AmpPair& a = s.raw(i);
        BigRat p(a.l * a.l + a.r * a.r, den);
        os << s.site(i) << ',' << a.l.str() << ',' << a.r.str() << ',' << s.t() << ','
           << boost::multiprecision::numerator(p).str() << ','
           << boost::multiprecision::denominator(p).str() << '\n';
    }
    return os.str();
}

std::string state_to_json(const WalkState& s) {
    nlohmann::json j;
    j["t"] = s.t();
    j["convention"] = s.order() == StepOrder::FlipThenMove ? "flip" : "move";
    nlohmann::json sites = nlohmann::json::array();
    const BigInt den = BigInt(1) << s.t();
    for (std::size_t i = 0; i < s.size(); ++i) {
        const AmpPair& a = s.raw(i);
        BigRat p(a.l * a.l + a.r * a.r, den);
        sites.push_back({{"n", s.site(i)},
                         {"psi_L_num", a.l.str()},
                         {"psi_R_num", a.r.str()},
                         {"halfpow", s.t()},
                         {"p_exact_num", boost::multiprecision::numerator(p).str()},
                         {"p_exact_den", boost::multiprecision::denominator(p).str()}});
    }
    j["sites"] = std::move(sites);
    return j.dump(2) + "\n";
}

} // namespace qwalk
