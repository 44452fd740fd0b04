#ifndef QWALK_EXACT_HPP
#define QWALK_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Which half of the unitary acts first in one time step.  The two orders
// describe the same walk up to a one-site relabeling; both are exposed and
// the relation is tested exactly (MoveThenFlip at t equals FlipThenMove at
// t-1 shifted one site to the right, distribution-wise).
enum class StepOrder { FlipThenMove, MoveThenFlip };

// Amplitude num / sqrt(2)^halfpow.  After t steps every amplitude carries
// halfpow == t, so the numerator stays an integer.
struct ExactAmplitude {
    BigInt num;
    std::uint32_t halfpow = 0;
    double value() const;
    BigRat squared() const;   // num^2 / 2^halfpow, reduced
    bool is_zero() const { return num.is_zero(); }
};

// num / sqrt(2)^halfpow as a double, usable far beyond double's exponent
// range of the raw numerator (needed around t ~ 1000 and above).
double scaled_to_double(const BigInt& num, long halfpow);

struct AmpPair {
    BigInt l, r;
};

// State at a fixed time.  Amplitudes live on the parity comb
// n = nmin, nmin+2, ..., nmin+2(size-1); off-comb sites are exactly zero.
class WalkState {
public:
    static WalkState initial(StepOrder order);

    long t() const { return t_; }
    StepOrder order() const { return order_; }
    std::size_t size() const { return amp_.size(); }
    long site(std::size_t i) const { return nmin_ + 2 * static_cast<long>(i); }
    long site_min() const { return nmin_; }
    long site_max() const { return site(amp_.size() - 1); }
    const AmpPair& raw(std::size_t i) const { return amp_[i]; }

    // Zero off the comb / outside the support.
    ExactAmplitude psi_l(long n) const;
    ExactAmplitude psi_r(long n) const;

    BigInt norm_numerator() const;      // sum of num^2 over both components
    bool normalized() const;            // == 2^t

    friend WalkState step(const WalkState& s, long t_budget);

private:
    WalkState() = default;
    long t_ = 0;
    long nmin_ = 0;
    StepOrder order_ = StepOrder::FlipThenMove;
    std::vector<AmpPair> amp_;
};

inline constexpr long kDefaultExactBudget = 10000;

WalkState step(const WalkState& s, long t_budget = kDefaultExactBudget);
WalkState evolve(long t, StepOrder order = StepOrder::FlipThenMove,
                 long t_budget = kDefaultExactBudget);

// Meyer's signed-path binomial sums for psi at (n, t), scale sqrt(2)^-t.
// Valid for -t <= n <= t with n == t (mod 2); |n| == t is flagged as an
// endpoint (the sums are not authoritative there, the recursion is).
//
// Sign bookkeeping, established against the engine and frozen by tests:
//   engine(n,t) = (-1)^{(t+n)/2} * pathsum(n,t)  componentwise, -t <= n < t.
struct PathSum {
    ExactAmplitude l, r;
    bool endpoint = false;
};
PathSum path_sum_amplitude(long n, long t);

// Exact per-site probabilities, ascending n over the parity comb; sums to 1.
std::vector<std::pair<long, BigRat>> probability(const WalkState& s);

// Floating evolution for step counts past the exact-integer budget.  Sums
// over the state use compensated accumulation.
struct FloatState {
    long t = 0;
    long nmin = 0;
    StepOrder order = StepOrder::FlipThenMove;
    std::vector<double> l, r;
    long site(std::size_t i) const { return nmin + 2 * static_cast<long>(i); }
    double psi_l(long n) const;
    double psi_r(long n) const;
    double total_probability() const;
    double moment(int order_k) const;   // E[(n/t)^k]
};
FloatState float_evolve(long t, StepOrder order = StepOrder::FlipThenMove);

// Compensated (Neumaier) accumulator.
struct Kahan {
    double sum = 0.0, c = 0.0;
    void add(double x);
    double result() const { return sum + c; }
};

// CSV columns: n,psi_L_num,psi_R_num,halfpow,p_exact_num,p_exact_den
std::string state_to_csv(const WalkState& s);
std::string state_to_json(const WalkState& s);

} // namespace qwalk

#endif
