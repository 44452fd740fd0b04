#include "qwalk/jacobi.hpp"

namespace qwalk {

BigRat hyp2f1_terminating(long j, const BigRat& b, const BigRat& c, const BigRat& z) {
    if (j < 0) fail(Errc::domain, "hyp2f1_terminating: series does not terminate (a = -j > 0)");
    BigRat sum = 1, term = 1;
    for (long k = 0; k < j; ++k) {
        const BigRat ck = c + k;
        if (ck.is_zero())
            fail(Errc::domain, "hyp2f1_terminating: lower parameter hits a nonpositive integer");
        term *= BigRat(-j + k) * (b + k);
        term /= ck * BigRat(k + 1);
        term *= z;
        sum += term;
    }
    return sum;
}

BigRat jacobi_at_zero(const JacobiParams& p) {
    if (p.j == -1) return BigRat(0);
    if (p.j < -1) fail(Errc::domain, "jacobi_at_zero: degree below -1");
    // ((u+1)_j / j!) * 2F1(-j, u+1+v+j; u+1; 1/2)
    BigRat poch = 1;
    for (long k = 0; k < p.j; ++k) poch *= (p.u + 1 + k) / BigRat(k + 1);
    return poch * hyp2f1_terminating(p.j, p.u + 1 + p.v + p.j, p.u + 1, BigRat(1, 2));
}

namespace {

// value = q * sqrt(2)^{-s}; convert to an integer over sqrt(2)^t.
ExactAmplitude to_amp(const BigRat& q, long s, long t) {
    const long e = t - s;
    if ((e % 2 + 2) % 2 != 0) fail(Errc::domain, "closed form: odd residual half-power");
    BigRat scaled = q;
    if (e >= 0)
        scaled *= BigRat(BigInt(1) << (e / 2));
    else
        scaled /= BigRat(BigInt(1) << (-e / 2));
    if (boost::multiprecision::denominator(scaled) != 1)
        fail(Errc::domain, "closed form: value is not an integer over sqrt(2)^t");
    return ExactAmplitude{boost::multiprecision::numerator(scaled),
                          static_cast<std::uint32_t>(t)};
}

} // namespace

std::pair<ClosedFormAmplitude, ClosedFormAmplitude> psi_closed_form(long n, long t) {
    if (t < 1) fail(Errc::domain, "closed form: t < 1");
    if (((n - t) % 2 + 2) % 2 != 0) fail(Errc::domain, "parity violation: n != t (mod 2)");
    if (n >= t || n < -t)
        fail(Errc::domain, "closed form: n = t endpoint is handled by the recursion engine");
    const int phase = ((t - n) / 2) % 2 == 0 ? 1 : -1;
    BigRat ql, qr;
    long sl, sr;  // value = q * sqrt(2)^{-s}
    if (n >= 0) {
        const long m = (t - n) / 2 - 1;
        qr = -BigRat(t + n, t - n) * jacobi_at_zero({m, BigRat(1), BigRat(n)});
        ql = jacobi_at_zero({m, BigRat(0), BigRat(n + 1)});
        if ((n + 1) % 2 != 0) ql = -ql;   // (-1)^{n+1}
        sl = sr = n + 2;                  // 2^{-n/2-1}
    } else {
        qr = -jacobi_at_zero({(t + n) / 2 - 1, BigRat(1), BigRat(-n)});
        sr = -n + 2;                      // 2^{n/2-1}
        ql = jacobi_at_zero({(t + n) / 2, BigRat(0), BigRat(-n - 1)});
        if ((n + 1) % 2 != 0) ql = -ql;
        sl = -n;                          // 2^{n/2}
    }
    ql *= phase;
    qr *= phase;
    return {ClosedFormAmplitude{to_amp(ql, sl, t), true},
            ClosedFormAmplitude{to_amp(qr, sr, t), true}};
}

} // namespace qwalk
