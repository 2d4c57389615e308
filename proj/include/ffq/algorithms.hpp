#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ffq/gfield.hpp"
#include "ffq/linalg.hpp"
#include "ffq/modal.hpp"
#include "ffq/numtheory.hpp"

// End-to-end algorithms over complexified fields: the discrete Deutsch-Jozsa
// circuit with its field-size resource estimate, the integer-level Grover
// trace with cardinal probabilities, and the divisibility-driven UNIQUE-SAT
// variant.
namespace ffq::alg {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using StateVector = la::Vec<gf::GaussianElem>;
using Oracle = modal::Oracle;

// Field-size requirements of an algorithm instance: the exact bound on the
// ordered range, the least prime k meeting it, and (when resolvable) the
// pi(k)-th entry of the least-quadratic-non-residue sequence.
struct ResourceEstimate {
    unsigned n = 0; // input bits
    u64 d = 0;      // state dimension
    u64 k_bound = 0;
    u64 k = 0;
    u64 pi_k = 0;
    std::optional<u64> p;       // absent when beyond table and search budget
    std::optional<unsigned> j;  // Grover iteration count
};

// Deutsch-Jozsa with the integer-scaled Hadamard [[1,1],[1,-1]]: H on all
// n+1 qubits of |1>|0..0>, U_f, then H on the x register, reduced mod p.
StateVector dj_final_state(const Oracle& f, const gf::FieldCtx& ctx);

enum class DjVerdict { constant, balanced };

struct DjResult {
    DjVerdict verdict;
    // False when the final state matches neither the constant pattern
    // (support exactly {|0>|0..0>, |1>|0..0>}) nor the balanced pattern
    // (both |y>|0..0> amplitudes zero): the promise was violated.
    bool promise_consistent;
    StateVector state;
};

DjResult dj_decide(const Oracle& f, const gf::FieldCtx& ctx);

// k >= 2^(3n+2) + 1.
ResourceEstimate dj_resources(unsigned n,
                              u64 budget = numtheory::kDefaultSearchBudget);

// Integer-scaled diffusion and phase-rotation matrices: D has 1 - N/2 on
// the diagonal and 1 elsewhere; R negates the marked (first) position.
struct GroverBuild {
    la::Mat<i64> D;
    la::Mat<i64> R;
    unsigned j = 0;
};

GroverBuild grover_build(u64 N);

unsigned grover_iterations(u64 N);

// The (a_l, b_l) evolution under DR: a is the target amplitude, b the
// common amplitude of every other position.
struct GroverTrace {
    u64 N = 0;
    u64 target = 0;
    unsigned j = 0;
    std::vector<std::pair<i64, i64>> raw; // l = 0..j
    u64 mu = 0;
    std::vector<u64> weights;             // per-step re-weighting to norm mu
    std::vector<std::vector<i64>> scaled; // full vectors at common norm mu
    std::vector<u64> target_probs;
    std::vector<u64> other_probs;
};

// Runs the recurrence a_{l+1} = (N/2-1)a_l + (N-1)b_l,
// b_{l+1} = -a_l + (N/2-1)b_l from a_0 = b_0 = 1, cross-checks it against
// the dense matrix product, then re-weights every step to the minimal
// common norm-squared. With a field supplied, the required k is checked
// against the field's ordered range first.
GroverTrace grover_trace(u64 N, u64 target,
                         const std::optional<gf::FieldCtx>& ctx = std::nullopt);

// k >= 8 (N/2)^(2j+2) + 1.
ResourceEstimate grover_resources(u64 N,
                                  u64 budget = numtheory::kDefaultSearchBudget);

// UNIQUE-SAT over a complexified field: H on the x register, U_f, H again.
// Supernatural determinism (a satisfiable f never measures |0>|0..0>)
// occurs exactly when p divides 2^n - 1, the integer amplitude left at
// |0>|0..0> by a satisfiable oracle.
struct Dqc1Result {
    StateVector state;
    bool supernatural;
};

Dqc1Result dqc1_usat_run(const Oracle& f, const gf::FieldCtx& ctx);

} // namespace ffq::alg
