#include "pbc/source.hpp"

#include <algorithm>
#include <cmath>

#include "pbc/errors.hpp"
#include "pbc/rng.hpp"

namespace pbc {

void SourceModel::validate() const {
  if (order < 2 || order > 16) throw ParamError("source order must be in [2,16]");
  if (transition_p1.size() != state_count()) {
    throw ParamError("transition table must have exactly 2^order entries");
  }
  for (double p : transition_p1) {
    if (!(p >= 0.0 && p <= 1.0)) throw ParamError("transition probabilities must lie in [0,1]");
  }
  if (initial_state >= state_count()) throw ParamError("initial_state outside state range");
}

SourceModel uniform_source(int order, double p1) {
  if (order < 2 || order > 16) throw ParamError("source order must be in [2,16]");
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw ParamError("p1 must lie in [0,1]");
  SourceModel m;
  m.order = order;
  m.transition_p1.assign(size_t{1} << order, p1);
  m.initial_state = 0;
  return m;
}

SourceModel random_direction_source(int order, double p1, uint64_t table_seed) {
  SourceModel m = uniform_source(order, p1);
  SplitMix64 rng(table_seed);
  for (double& p : m.transition_p1) {
    if (rng.next_bit()) p = 1.0 - p;
  }
  return m;
}

uint32_t step(uint32_t state, int order, int bit) {
  return ((state << 1) | static_cast<uint32_t>(bit & 1)) & ((1u << order) - 1);
}

BitSequence generate(const SourceModel& model, size_t n, uint64_t seed) {
  model.validate();
  if (n == 0) throw ParamError("sequence length must be >= 1");
  SplitMix64 rng(seed);
  std::vector<uint8_t> bits;
  bits.reserve(n);
  uint32_t state = model.initial_state;
  for (size_t i = 0; i < n; ++i) {
    uint8_t bit = rng.next_double() < model.transition_p1[state] ? 1 : 0;
    bits.push_back(bit);
    state = step(state, model.order, bit);
  }
  return BitSequence(std::move(bits));
}

std::vector<double> stationary_distribution(const SourceModel& model, double tol,
                                            long max_iters) {
  model.validate();
  const uint32_t n = model.state_count();
  std::vector<double> pi(n, 0.0), next(n, 0.0);
  pi[model.initial_state] = 1.0;
  for (long iter = 0; iter < max_iters; ++iter) {
    std::fill(next.begin(), next.end(), 0.0);
    for (uint32_t s = 0; s < n; ++s) {
      if (pi[s] == 0.0) continue;
      const double p1 = model.transition_p1[s];
      next[step(s, model.order, 1)] += pi[s] * p1;
      next[step(s, model.order, 0)] += pi[s] * (1.0 - p1);
    }
    double diff = 0.0;
    for (uint32_t s = 0; s < n; ++s) {
      next[s] = 0.5 * pi[s] + 0.5 * next[s];
      diff += std::abs(next[s] - pi[s]);
    }
    pi.swap(next);
    if (diff < tol) return pi;
  }
  throw NumericError("stationary distribution did not converge", max_iters);
}

double bayes_error(const SourceModel& model, double tol, long max_iters) {
  const std::vector<double> pi = stationary_distribution(model, tol, max_iters);
  double err = 0.0;
  for (uint32_t s = 0; s < model.state_count(); ++s) {
    err += pi[s] * std::min(model.transition_p1[s], 1.0 - model.transition_p1[s]);
  }
  return err;
}

}  // namespace pbc
