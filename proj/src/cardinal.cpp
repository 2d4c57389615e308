#include "ffq/cardinal.hpp"

#include <stdexcept>

#include "ffq/errors.hpp"
#include "ffq/numtheory.hpp"

namespace ffq::cardinal {

namespace nt = ffq::numtheory;
using u128 = unsigned __int128;
using i128 = __int128;

static u64 checked_mul(u64 a, u64 b, const char* who) {
    const u128 r = u128{a} * b;
    if (r > ~u64{0}) throw CapacityError(std::string(who) + ": 64-bit overflow");
    return static_cast<u64>(r);
}

static u64 pow100(unsigned t, const char* who) {
    u64 r = 1;
    for (unsigned i = 0; i < t; ++i) r = checked_mul(r, 100, who);
    return r;
}

ApproxSqrt approx_sqrt(u64 m, unsigned t, std::optional<u64> k) {
    if (m == 0) throw std::invalid_argument("approx_sqrt: m must be positive");
    const u64 radicand = checked_mul(m, pow100(t, "approx_sqrt"), "approx_sqrt");
    const u64 s = nt::ceil_sqrt(radicand);
    if (k) {
        const u64 half = (*k - 1) / 2;
        if (u128{s} * s > half) {
            const std::string needed = nt::to_string_u128(u128{s} * s * 2 + 1);
            throw RangeOverflow("approx_sqrt: s^2 exceeds (k-1)/2 = " + std::to_string(half) +
                                    "; requires k >= " + needed,
                                needed);
        }
    }
    return ApproxSqrt{m, t, s};
}

i64 lifted_norm_sq(const StateVector& psi) {
    i64 acc = 0;
    for (const auto& amp : psi.a) {
        const auto [a, b] = gf::center_lift(amp);
        acc += a * a + b * b;
    }
    return acc;
}

// v = c^2 * r with r squarefree.
static std::pair<u64, u64> squarefree_decompose(u64 v) {
    u64 c = 1, r = 1;
    for (u64 q = 2; q * q <= v; ++q) {
        if (v % q) continue;
        unsigned e = 0;
        while (v % q == 0) {
            v /= q;
            ++e;
        }
        for (unsigned i = 0; i + 1 < e; i += 2) c *= q;
        if (e % 2) r *= q;
    }
    r *= v; // leftover prime
    return {c, r};
}

std::vector<NormWeight> rescale_norms(std::span<const u64> norms, u64 target, unsigned t) {
    if (target == 0) throw std::invalid_argument("rescale_norms: target must be positive");
    std::vector<NormWeight> out;
    out.reserve(norms.size());
    for (u64 m : norms) {
        if (m == 0 || target % m != 0)
            throw std::invalid_argument("rescale_norms: target is not a common multiple of the norms");
        const auto [c, r] = squarefree_decompose(target / m);
        u64 p10 = 1;
        for (unsigned i = 0; i < t; ++i) p10 = checked_mul(p10, 10, "rescale_norms");
        // Factor the exact square out first: 2*sqrt'(6), not sqrt'(24).
        const u64 x = (r > 1) ? checked_mul(c, approx_sqrt(r, t).s, "rescale_norms")
                              : checked_mul(c, p10, "rescale_norms");
        const u64 mu = checked_mul(m, checked_mul(x, x, "rescale_norms"), "rescale_norms");
        out.push_back(NormWeight{m, x, mu});
    }
    return out;
}

std::vector<ScaledState> rescale_states(std::span<const StateVector> states, u64 target,
                                        unsigned t) {
    std::vector<u64> norms;
    norms.reserve(states.size());
    for (const auto& psi : states) {
        const i64 m = lifted_norm_sq(psi);
        if (m <= 0)
            throw std::invalid_argument("rescale_states: state norm must be positive");
        norms.push_back(static_cast<u64>(m));
    }
    const auto weights = rescale_norms(norms, target, t);
    std::vector<ScaledState> out;
    out.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i)
        out.push_back(ScaledState{states[i], weights[i].m, weights[i].weight, weights[i].mu});
    return out;
}

std::vector<u64> scaled_probabilities(const ScaledState& s,
                                      const std::optional<ordered::AmplitudeRegion>& region) {
    if (region) {
        const auto check = ordered::in_region(s.base, *region);
        if (!check.ok)
            throw RangeOverflow("scaled_probabilities: " + check.reason);
    }
    const u64 w2 = checked_mul(s.weight, s.weight, "scaled_probabilities");
    std::vector<u64> out;
    out.reserve(s.base.dim());
    u64 sum = 0;
    for (const auto& amp : s.base.a) {
        const auto [a, b] = gf::center_lift(amp);
        const u64 mag = static_cast<u64>(a * a + b * b);
        const u64 pr = checked_mul(w2, mag, "scaled_probabilities");
        sum += pr;
        out.push_back(pr);
    }
    if (sum != s.mu)
        throw std::logic_error("scaled_probabilities: probabilities do not sum to mu");
    return out;
}

int rat_cmp(const Rat& a, const Rat& b) {
    if (a.den <= 0 || b.den <= 0) throw std::invalid_argument("rat_cmp: denominators must be positive");
    const i128 lhs = i128{a.num} * b.den;
    const i128 rhs = i128{b.num} * a.den;
    if (lhs < rhs) return -1;
    if (lhs > rhs) return 1;
    return 0;
}

CardinalRealization realization_of(std::span<const ScaledState> states) {
    CardinalRealization real;
    for (const auto& s : states) {
        real.probs.push_back(scaled_probabilities(s));
        real.mu.push_back(s.mu);
    }
    return real;
}

std::vector<std::vector<Rat>> reference_probabilities(std::span<const StateVector> states) {
    std::vector<std::vector<Rat>> out;
    for (const auto& psi : states) {
        const i64 m = lifted_norm_sq(psi);
        if (m <= 0)
            throw std::invalid_argument("reference_probabilities: state norm must be positive");
        std::vector<Rat> row;
        for (const auto& amp : psi.a) {
            const auto [a, b] = gf::center_lift(amp);
            row.push_back(Rat{a * a + b * b, m});
        }
        out.push_back(std::move(row));
    }
    return out;
}

RealizationReport validate_realization(const CardinalRealization& real,
                                       const std::vector<std::vector<Rat>>& reference) {
    if (real.probs.size() != reference.size())
        throw std::invalid_argument("validate_realization: index sets differ");
    struct Entry {
        std::size_t s, i;
    };
    std::vector<Entry> entries;
    for (std::size_t s = 0; s < reference.size(); ++s) {
        if (real.probs[s].size() != reference[s].size())
            throw std::invalid_argument("validate_realization: index sets differ");
        for (std::size_t i = 0; i < reference[s].size(); ++i) entries.push_back({s, i});
    }

    RealizationReport rep;
    for (std::size_t x = 0; x < entries.size(); ++x)
        for (std::size_t y = x + 1; y < entries.size(); ++y) {
            Entry lo = entries[x], hi = entries[y];
            int rc = rat_cmp(reference[lo.s][lo.i], reference[hi.s][hi.i]);
            if (rc == 0) {
                // Equalities carry no constraint: the theory may realize
                // them as inequalities of any order.
                ++rep.ref_equal;
                continue;
            }
            if (rc > 0) std::swap(lo, hi);
            const u64 rlo = real.probs[lo.s][lo.i];
            const u64 rhi = real.probs[hi.s][hi.i];
            PairReport pr{lo.s, lo.i, hi.s, hi.i, PairOrder::preserved};
            if (rlo < rhi) {
                ++rep.preserved;
            } else if (rlo == rhi) {
                pr.order = PairOrder::collapsed;
                ++rep.collapsed;
                rep.collapses.push_back(pr);
            } else {
                pr.order = PairOrder::reversed;
                ++rep.reversed;
                rep.reversals.push_back(pr);
            }
        }
    return rep;
}

StateVector canonical_state(const gf::FieldCtx& ctx, unsigned m) {
    switch (m) {
        case 1: return StateVector{{ctx.elem(1), ctx.elem(0)}};
        case 2: return StateVector{{ctx.elem(1), ctx.elem(1)}};
        case 3: return StateVector{{ctx.elem(1), ctx.elem(1, 1)}};
        case 4: return StateVector{{ctx.elem(1, -1), ctx.elem(1, 1)}};
        default:
            throw std::invalid_argument("canonical_state: only norms 1..4 have canonical states");
    }
}

} // namespace ffq::cardinal
