#include "ffq/algorithms.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ffq/errors.hpp"
#include "ffq/ordered.hpp"

namespace ffq::alg {

namespace nt = ffq::numtheory;
using u128 = unsigned __int128;

// ---- Deutsch-Jozsa ---------------------------------------------------------

static la::Mat<gf::GaussianElem> scaled_hadamard(const gf::FieldCtx& ctx) {
    return la::Mat<gf::GaussianElem>(
        2, 2, {ctx.elem(1), ctx.elem(1), ctx.elem(1), ctx.elem(-1)});
}

StateVector dj_final_state(const Oracle& f, const gf::FieldCtx& ctx) {
    if (ctx.p == 2)
        throw std::invalid_argument("dj_final_state: requires an odd-characteristic field");
    const unsigned nq = f.n + 1;
    StateVector v(std::size_t{1} << nq, ctx.zero());
    v[std::size_t{1} << f.n] = ctx.one(); // |1>|0..0>, y most significant
    const auto h = scaled_hadamard(ctx);
    for (unsigned q = 0; q < nq; ++q) la::apply_1q(v, nq, q, h);
    la::apply_oracle_perm(v, f.n, f.table);
    for (unsigned q = 1; q < nq; ++q) la::apply_1q(v, nq, q, h);
    return v;
}

DjResult dj_decide(const Oracle& f, const gf::FieldCtx& ctx) {
    StateVector v = dj_final_state(f, ctx);
    const std::size_t y1 = std::size_t{1} << f.n;
    const bool zero_row = !gf::is_zero(v[0]) || !gf::is_zero(v[y1]);
    const DjVerdict verdict = zero_row ? DjVerdict::constant : DjVerdict::balanced;

    bool consistent = true;
    if (verdict == DjVerdict::constant) {
        // Constant f concentrates all amplitude on |y>|0..0>.
        for (std::size_t i = 0; i < v.dim(); ++i)
            if (i != 0 && i != y1 && !gf::is_zero(v[i])) consistent = false;
    }
    return DjResult{verdict, consistent, std::move(v)};
}

// Published entries of the least-quadratic-non-residue sequence (OEIS
// A000229), re-verified before use; search covers what a budget reaches.
static std::optional<u64> known_a000229(u64 k) {
    struct Row {
        u64 k, p;
    };
    static constexpr Row rows[] = {
        {2, 3},           {3, 7},       {5, 23},      {7, 71},
        {11, 311},        {13, 479},    {17, 1559},   {19, 5711},
        {23, 10559},      {29, 18191},  {37, 422231}, {131, 196265095009},
    };
    for (const auto& r : rows)
        if (r.k == k) return r.p;
    return std::nullopt;
}

static std::optional<u64> resolve_field_prime(u64 k, u64 budget) {
    if (auto p = known_a000229(k)) {
        if (!nt::a000229_verify(*p, k))
            throw std::logic_error("resolve_field_prime: table entry failed verification");
        return p;
    }
    return nt::a000229_search(k, budget);
}

static u64 next_prime_at_least(u64 v) {
    while (!nt::is_prime(v)) ++v;
    return v;
}

ResourceEstimate dj_resources(unsigned n, u64 budget) {
    if (n < 1 || 3 * n + 2 >= 63)
        throw CapacityError("dj_resources: n out of supported range");
    ResourceEstimate est;
    est.n = n;
    est.d = u64{1} << (n + 1);
    est.k_bound = (u64{1} << (3 * n + 2)) + 1;
    est.k = next_prime_at_least(est.k_bound);
    est.pi_k = nt::prime_pi(est.k);
    est.p = resolve_field_prime(est.k, budget);
    return est;
}

// ---- Grover ----------------------------------------------------------------

unsigned grover_iterations(u64 N) {
    // Observer-side classical arithmetic; round half away from zero.
    const double theta = std::acos(std::sqrt(1.0 - 1.0 / static_cast<double>(N)));
    const double jr = std::numbers::pi / (4.0 * theta) - 0.5;
    const long j = std::lround(jr);
    return j < 1 ? 1u : static_cast<unsigned>(j);
}

static void require_grover_size(u64 N) {
    if (N < 4 || !std::has_single_bit(N))
        throw std::invalid_argument("grover: N must be a power of two >= 4");
    if (N > (u64{1} << 12))
        throw CapacityError("grover: dense dimension capped at 2^12");
}

GroverBuild grover_build(u64 N) {
    require_grover_size(N);
    const i64 diag = 1 - static_cast<i64>(N / 2);
    la::Mat<i64> d(N, N, i64{1});
    la::Mat<i64> r(N, N, i64{0});
    for (u64 i = 0; i < N; ++i) {
        d(i, i) = diag;
        r(i, i) = 1;
    }
    r(0, 0) = -1;
    return GroverBuild{std::move(d), std::move(r), grover_iterations(N)};
}

static std::string grover_k_need(u64 N, unsigned j) {
    // 8 (N/2)^(2j+2) + 1, reported even when it exceeds 128 bits.
    u128 v = 8;
    for (unsigned e = 0; e < 2 * j + 2; ++e) {
        if (v > (~u128{0}) / (N / 2)) return "more than 2^128";
        v *= N / 2;
    }
    return nt::to_string_u128(v + 1);
}

static i64 checked_add(i64 a, i64 b, const std::string& needed) {
    i64 r;
    if (__builtin_add_overflow(a, b, &r))
        throw RangeOverflow("grover: amplitude exceeds the integer range; requires k >= " + needed,
                            needed);
    return r;
}

static i64 checked_mul_i(i64 a, i64 b, const std::string& needed) {
    i64 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw RangeOverflow("grover: amplitude exceeds the integer range; requires k >= " + needed,
                            needed);
    return r;
}

GroverTrace grover_trace(u64 N, u64 target, const std::optional<gf::FieldCtx>& ctx) {
    require_grover_size(N);
    if (target >= N) throw std::invalid_argument("grover_trace: target out of range");
    const unsigned j = grover_iterations(N);
    const std::string needed = grover_k_need(N, j);

    if (ctx) {
        const auto range = ordered::ordered_range(ctx->p);
        bool fits = false;
        u128 bound = 8;
        for (unsigned e = 0; e < 2 * j + 2 && bound <= range.k; ++e) bound *= N / 2;
        fits = bound + 1 <= range.k;
        if (!fits)
            throw RangeOverflow("grover_trace: field has k = " + std::to_string(range.k) +
                                    " but the trace requires k >= " + needed,
                                needed);
    }

    GroverTrace tr;
    tr.N = N;
    tr.target = target;
    tr.j = j;
    const i64 half = static_cast<i64>(N / 2);
    i64 a = 1, b = 1;
    tr.raw.emplace_back(a, b);
    for (unsigned l = 0; l < j; ++l) {
        const i64 na = checked_add(checked_mul_i(half - 1, a, needed),
                                   checked_mul_i(static_cast<i64>(N) - 1, b, needed), needed);
        const i64 nb = checked_add(-a, checked_mul_i(half - 1, b, needed), needed);
        a = na;
        b = nb;
        tr.raw.emplace_back(a, b);
    }

    // Dense route must agree with the recurrence step by step.
    {
        auto build = grover_build(N);
        la::Mat<i64> r = std::move(build.R);
        r(0, 0) = 1;
        r(target, target) = -1;
        la::Vec<i64> v(N, i64{1});
        for (unsigned l = 1; l <= j; ++l) {
            v = la::apply(build.D, la::apply(r, v));
            for (u64 i = 0; i < N; ++i) {
                const i64 want = (i == target) ? tr.raw[l].first : tr.raw[l].second;
                if (v[i] != want)
                    throw std::logic_error("grover_trace: dense route disagrees with recurrence");
            }
        }
    }

    // Norm-squared scales by exactly (N/2)^2 per step (D^2 = (N/2)^2 I and R
    // is an isometry), so the final norm is the minimal common value.
    const auto mag = [](i64 v) { return v < 0 ? u64{0} - static_cast<u64>(v) : static_cast<u64>(v); };
    std::vector<u128> norms;
    for (const auto& [al, bl] : tr.raw)
        norms.push_back(u128{mag(al)} * mag(al) + u128{N - 1} * (u128{mag(bl)} * mag(bl)));
    const u128 mu = norms.back();
    if (mu > ~u64{0})
        throw RangeOverflow("grover_trace: scale exceeds the integer range; requires k >= " + needed,
                            needed);
    tr.mu = static_cast<u64>(mu);
    for (std::size_t l = 0; l < norms.size(); ++l) {
        if (mu % norms[l] != 0)
            throw std::logic_error("grover_trace: norms not square-equalizable");
        const u64 w = nt::ceil_sqrt(static_cast<u64>(mu / norms[l]));
        if (u128{w} * w != mu / norms[l])
            throw std::logic_error("grover_trace: norms not square-equalizable");
        tr.weights.push_back(w);
        const i64 sa = checked_mul_i(static_cast<i64>(w), tr.raw[l].first, needed);
        const i64 sb = checked_mul_i(static_cast<i64>(w), tr.raw[l].second, needed);
        std::vector<i64> vec(N, sb);
        vec[target] = sa;
        tr.scaled.push_back(std::move(vec));
        tr.target_probs.push_back(static_cast<u64>(u128{mag(sa)} * mag(sa)));
        tr.other_probs.push_back(static_cast<u64>(u128{mag(sb)} * mag(sb)));
    }
    return tr;
}

ResourceEstimate grover_resources(u64 N, u64 budget) {
    require_grover_size(N);
    const unsigned j = grover_iterations(N);
    u128 bound = 8;
    for (unsigned e = 0; e < 2 * j + 2; ++e) {
        bound *= N / 2;
        if (bound > (u128{1} << 62))
            throw CapacityError("grover_resources: k bound exceeds the 64-bit search range");
    }
    ResourceEstimate est;
    est.n = static_cast<unsigned>(std::countr_zero(N));
    est.d = N;
    est.j = j;
    est.k_bound = static_cast<u64>(bound) + 1;
    est.k = next_prime_at_least(est.k_bound);
    est.pi_k = nt::prime_pi(est.k);
    est.p = resolve_field_prime(est.k, budget);
    return est;
}

// ---- UNIQUE-SAT over a complexified field ----------------------------------

Dqc1Result dqc1_usat_run(const Oracle& f, const gf::FieldCtx& ctx) {
    if (!ctx.complexifiable)
        throw std::invalid_argument("dqc1_usat_run: requires a complexifiable field");
    if (f.sat_count > 1)
        throw std::invalid_argument(
            "UNIQUE-SAT requires at most one satisfying assignment (got " +
            std::to_string(f.sat_count) + ")");
    const unsigned nq = f.n + 1;
    StateVector v(std::size_t{1} << nq, ctx.zero());
    v[0] = ctx.one(); // |0>|0..0>
    const auto h = scaled_hadamard(ctx);
    for (unsigned q = 1; q < nq; ++q) la::apply_1q(v, nq, q, h);
    la::apply_oracle_perm(v, f.n, f.table);
    for (unsigned q = 1; q < nq; ++q) la::apply_1q(v, nq, q, h);
    const u64 amp = ((u64{1} << f.n) - 1) % ctx.p; // |0>|0..0> amplitude of a satisfiable f
    return Dqc1Result{std::move(v), amp == 0};
}

} // namespace ffq::alg
