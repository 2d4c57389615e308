#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ffq/gfield.hpp"
#include "ffq/linalg.hpp"
#include "ffq/ordered.hpp"

// Cardinal probability: integer-valued scaled probabilities x^2 |a_i|^2
// compared against scale labels mu = m x^2. Everything here is exact
// integer/rational arithmetic; no floating point.
namespace ffq::cardinal {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using StateVector = la::Vec<gf::GaussianElem>;

// sqrt' of m at precision t: the least integer s with s^2 >= m * 100^t.
// Each precision step scales the radicand by 100 so the root gains one
// decimal digit. When a range bound k is given, s^2 must stay within
// (k-1)/2 or the field is too small.
struct ApproxSqrt {
    u64 m = 0;
    unsigned t = 0;
    u64 s = 0;
};

ApproxSqrt approx_sqrt(u64 m, unsigned t, std::optional<u64> k = std::nullopt);

// Integer norm-squared of a state, evaluated on centered lifts. This is the
// "starting value" m of a state and must be positive for rescaling.
i64 lifted_norm_sq(const StateVector& psi);

struct NormWeight {
    u64 m = 0;      // original norm-squared
    u64 weight = 0; // x_m (real; y_m = 0)
    u64 mu = 0;     // m * x_m^2
};

// Re-weights norms m_i so each state's scale label mu approximates the
// common target T: with T/m = c^2 * r (r squarefree), the weight is
// c * sqrt'(r) at precision t (c * 10^t when r = 1). T must be a common
// multiple of all norms.
std::vector<NormWeight> rescale_norms(std::span<const u64> norms, u64 target, unsigned t);

struct ScaledState {
    StateVector base;
    u64 m = 0;
    u64 weight = 0;
    u64 mu = 0;
};

std::vector<ScaledState> rescale_states(std::span<const StateVector> states, u64 target,
                                        unsigned t);

// Per-outcome integers x^2 |a_i|^2; their sum is exactly mu. With a region
// supplied, amplitudes outside it raise RangeOverflow.
std::vector<u64> scaled_probabilities(const ScaledState& s,
                                      const std::optional<ordered::AmplitudeRegion>& region =
                                          std::nullopt);

// Exact rational; denominator positive.
struct Rat {
    i64 num = 0;
    i64 den = 1;
};

int rat_cmp(const Rat& a, const Rat& b);

// probs[state][outcome] together with the scale multiset {mu_m}.
struct CardinalRealization {
    std::vector<std::vector<u64>> probs;
    std::vector<u64> mu;
};

CardinalRealization realization_of(std::span<const ScaledState> states);

// Exact reference probabilities |a_i|^2 / m for each state.
std::vector<std::vector<Rat>> reference_probabilities(std::span<const StateVector> states);

enum class PairOrder { preserved, collapsed, reversed };

struct PairReport {
    std::size_t s1, i1, s2, i2; // reference has P[s1][i1] < P[s2][i2]
    PairOrder order;
};

// Classifies every pair of entries whose exact reference probabilities are
// strictly ordered: the realized integers preserve the inequality, collapse
// it to equality, or reverse it. Pairs with equal reference probabilities
// carry no constraint. Verdicts: valid = no reversals; strict = no
// reversals and no collapses.
struct RealizationReport {
    std::size_t preserved = 0;
    std::size_t collapsed = 0;
    std::size_t reversed = 0;
    std::size_t ref_equal = 0;
    std::vector<PairReport> collapses;
    std::vector<PairReport> reversals;

    bool valid() const { return reversed == 0; }
    bool strict() const { return reversed == 0 && collapsed == 0; }
};

RealizationReport validate_realization(const CardinalRealization& real,
                                       const std::vector<std::vector<Rat>>& reference);

// The reference family of one-qubit states with norms 1..4: (1,0), (1,1),
// (1, 1+i), (1-i, 1+i).
StateVector canonical_state(const gf::FieldCtx& ctx, unsigned m);

} // namespace ffq::cardinal
