#pragma once

#include <cstdint>
#include <vector>

#include "pbc/bitseq.hpp"

namespace pbc {

/// Order-rho Markov source over the 2^rho shift-register states.  The state
/// is an unsigned integer whose binary form (MSB first) is the last rho bits
/// emitted; the binary-vector view is implicit.
struct SourceModel {
  int order = 2;                      // rho, bits per state, in [2,16]
  std::vector<double> transition_p1;  // transition_p1[s] = P(1|s), size 2^order
  uint32_t initial_state = 0;

  uint32_t state_count() const { return 1u << order; }
  void validate() const;  // throws ParamError
};

/// Every state shares the same P(1|s) = p1.
SourceModel uniform_source(int order, double p1);

/// Per-state coin flip assigns P(1|s) = p1 or 1-p1.  The Bayes error is the
/// same as the uniform source (min(p1, 1-p1)) but the optimal decision now
/// depends on the state, so a predictor cannot get by on the global bit bias.
SourceModel random_direction_source(int order, double p1, uint64_t table_seed);

/// Shift-register successor: drop the oldest bit, append `bit`.
uint32_t step(uint32_t state, int order, int bit);

/// Deterministic for a fixed (model, n, seed); draws bit i with probability
/// transition_p1[state], then advances the state.
BitSequence generate(const SourceModel& model, size_t n, uint64_t seed);

/// Stationary distribution reached from initial_state, by damped power
/// iteration (pi <- pi/2 + pi*P/2) to L1 tolerance `tol`.  The damping keeps
/// the iteration convergent on periodic chains without moving the fixed
/// point.  Throws NumericError when max_iters is exhausted.
std::vector<double> stationary_distribution(const SourceModel& model, double tol = 1e-10,
                                            long max_iters = 100000);

/// Sum over states of pi(s) * min(P(0|s), P(1|s)).
double bayes_error(const SourceModel& model, double tol = 1e-10, long max_iters = 100000);

}  // namespace pbc
