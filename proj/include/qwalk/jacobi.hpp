#ifndef QWALK_JACOBI_HPP
#define QWALK_JACOBI_HPP

#include "qwalk/exact.hpp"

#include <utility>

namespace qwalk {

struct JacobiParams {
    long j = 0;     // degree; -1 means the zero polynomial
    BigRat u, v;
};

// Terminating 2F1(-j, b; c; z), exact.  c must not hit a nonpositive
// integer inside the summation range.
BigRat hyp2f1_terminating(long j, const BigRat& b, const BigRat& c, const BigRat& z);

// J_j^{(u,v)}(0) = ((u+1)_j / j!) * 2F1(-j, u+1+v+j; u+1; 1/2), exact.
BigRat jacobi_at_zero(const JacobiParams& p);

// Closed-form amplitude: same representation as the engine's amplitudes
// (integer over sqrt(2)^t).  phase_applied records that the alternating
// factor (-1)^{(t-n)/2} has been multiplied in.
struct ClosedFormAmplitude {
    ExactAmplitude value;
    bool phase_applied = true;
};

// The four closed-form branches, evaluated exactly, with the external phase
// applied.  Valid for -t <= n < t, n == t (mod 2); n == t is rejected (the
// recursion engine owns the right endpoint).
//
// Relations frozen by tests (see also path_sum_amplitude):
//   psi_closed.L == (-1)^{(t-n)/2} * pathsum.L
//   psi_closed.R == (-1)^{(t-n)/2} * (-1)^t * pathsum.R
//   componentwise |psi_closed| == |engine| exactly; signs match the
//   FlipThenMove engine for psi_R everywhere, and for psi_L at even t.
std::pair<ClosedFormAmplitude, ClosedFormAmplitude> psi_closed_form(long n, long t);

} // namespace qwalk

#endif
