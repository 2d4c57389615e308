// Acceptance suite: one line per criterion, exit status non-zero on any
// failure. Each criterion is self-contained and uses its own ground truth.

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "ffq/algorithms.hpp"
#include "ffq/cardinal.hpp"
#include "ffq/gfield.hpp"
#include "ffq/linalg.hpp"
#include "ffq/modal.hpp"
#include "ffq/numtheory.hpp"
#include "ffq/ordered.hpp"

using namespace ffq;
namespace nt = ffq::numtheory;
namespace ord = ffq::ordered;
namespace card = ffq::cardinal;
using gf::Bit;
using u64 = std::uint64_t;
using i64 = std::int64_t;
using Clock = std::chrono::steady_clock;

static int failures = 0;

static void criterion(int number, const std::string& name, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS criterion " << number << ": " << name << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL criterion " << number << ": " << name << " -- " << e.what() << "\n";
    }
}

static void check(bool ok, const std::string& what) {
    if (!ok) throw std::runtime_error(what);
}

static double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

int main() {
    criterion(1, "Table I reproduction by search, < 60 s", [] {
        const auto t0 = Clock::now();
        const u64 ks[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
        const u64 ps[] = {3, 7, 23, 71, 311, 479, 1559, 5711, 10559, 18191};
        for (int i = 0; i < 10; ++i) {
            const auto got = nt::a000229_search(ks[i]);
            check(got.has_value(), "search exhausted for k=" + std::to_string(ks[i]));
            check(*got == ps[i], "wrong p for k=" + std::to_string(ks[i]));
        }
        check(seconds_since(t0) < 60.0, "search exceeded 60 s");
    });

    criterion(2, "A000229 verification at scale, < 1 s each, no search", [] {
        auto t0 = Clock::now();
        check(nt::a000229_verify(422231, 37), "verify(422231, 37)");
        check(seconds_since(t0) < 1.0, "verify(422231, 37) exceeded 1 s");
        t0 = Clock::now();
        check(nt::a000229_verify(196265095009ULL, 131), "verify(196265095009, 131)");
        check(seconds_since(t0) < 1.0, "verify(196265095009, 131) exceeded 1 s");
    });

    criterion(3, "Table II reproduction for k=11, d=1..6", [] {
        using P = std::pair<i64, i64>;
        auto as_set = [](const std::vector<P>& v) { return std::set<P>(v.begin(), v.end()); };
        const std::set<P> d1 = {
            {0, 0},  {1, 0},  {-1, 0}, {2, 0},  {-2, 0}, {0, 1},  {0, -1},
            {0, 2},  {0, -2}, {1, 1},  {1, -1}, {-1, 1}, {-1, -1},
            {1, 2},  {1, -2}, {-1, 2}, {-1, -2}, {2, 1}, {2, -1}, {-2, 1}, {-2, -1}};
        const std::set<P> d2 = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1},
                                {1, 1}, {1, -1}, {-1, 1}, {-1, -1}};
        const std::set<P> d3 = {{0, 0}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
        const std::set<P> d6 = {{0, 0}};
        check(as_set(ord::allowed_amplitudes_k(11, 1)) == d1, "d=1 set");
        check(ord::allowed_amplitudes_k(11, 1).size() == 21, "|F^1(11)| = 21");
        check(as_set(ord::allowed_amplitudes_k(11, 2)) == d2, "d=2 set");
        check(as_set(ord::allowed_amplitudes_k(11, 3)) == d3, "d=3 set");
        check(as_set(ord::allowed_amplitudes_k(11, 4)) == d3, "d=4 set");
        check(as_set(ord::allowed_amplitudes_k(11, 5)) == d3, "d=5 set");
        check(as_set(ord::allowed_amplitudes_k(11, 6)) == d6, "d=6 set");
    });

    criterion(4, "modal UNIQUE-SAT exhaustive for n <= 6, < 10 s", [] {
        const auto t0 = Clock::now();
        for (unsigned n = 1; n <= 6; ++n) {
            const u64 slots = u64{1} << n;
            check(modal::usat_decide(modal::oracle_from_ones(n, {})) ==
                      modal::SatVerdict::unsatisfiable,
                  "zero table must be unsatisfiable");
            for (u64 x = 0; x < slots; ++x)
                check(modal::usat_decide(modal::oracle_from_ones(n, {x})) ==
                          modal::SatVerdict::satisfiable,
                      "one-hot table must be satisfiable");
        }
        check(seconds_since(t0) < 10.0, "exceeded 10 s");
    });

    criterion(5, "discrete Deutsch-Jozsa: exhaustive n <= 3 over F_9 and resources", [] {
        const auto f9 = gf::make_field(3);
        for (unsigned n = 1; n <= 3; ++n) {
            const u64 slots = u64{1} << n;
            std::vector<std::vector<std::uint8_t>> tables;
            tables.emplace_back(slots, 0);
            tables.emplace_back(slots, 1);
            for (u64 bits = 0; bits < (u64{1} << slots); ++bits) {
                if (std::popcount(bits) != static_cast<int>(slots / 2)) continue;
                std::vector<std::uint8_t> t(slots);
                for (u64 x = 0; x < slots; ++x) t[x] = (bits >> x) & 1;
                tables.push_back(std::move(t));
            }
            for (auto& t : tables) {
                const u64 ones = static_cast<u64>(std::count(t.begin(), t.end(), 1));
                const bool constant = ones == 0 || ones == slots;
                const auto f = modal::make_oracle(n, std::move(t));
                const auto res = alg::dj_decide(f, f9);
                check((res.verdict == alg::DjVerdict::constant) == constant,
                      "wrong verdict at n=" + std::to_string(n));
            }
        }
        const auto r1 = alg::dj_resources(1);
        check(r1.k == 37 && r1.pi_k == 12 && r1.p && *r1.p == 422231, "dj_resources(1)");
        const auto r2 = alg::dj_resources(2);
        check(r2.k == 257 && r2.pi_k == 55 && !r2.p, "dj_resources(2)");
    });

    criterion(6, "Grover N=8 trace: raw, scaled, cardinal probabilities", [] {
        const auto tr = alg::grover_trace(8, 0);
        check(tr.raw == std::vector<std::pair<i64, i64>>{{1, 1}, {10, 2}, {44, -4}}, "raw");
        check(tr.mu == 2048, "mu");
        check(tr.weights == std::vector<u64>{16, 4, 1}, "weights");
        check(tr.target_probs == std::vector<u64>{256, 1600, 1936}, "target probabilities");
        check(tr.other_probs == std::vector<u64>{256, 64, 16}, "other probabilities");
        for (std::size_t l = 1; l < tr.target_probs.size(); ++l)
            check(tr.target_probs[l] > tr.target_probs[l - 1],
                  "target probability must increase");
        const std::vector<i64> s0(8, 16);
        check(tr.scaled[0] == s0, "scaled step 0");
        std::vector<i64> s1(8, 8);
        s1[0] = 40;
        check(tr.scaled[1] == s1, "scaled step 1");
        std::vector<i64> s2(8, -4);
        s2[0] = 44;
        check(tr.scaled[2] == s2, "scaled step 2");
    });

    criterion(7, "Grover resources: N=4 and N=8, certainty at N=4", [] {
        const auto r4 = alg::grover_resources(4);
        check(r4.k == 131 && r4.pi_k == 32 && r4.p && *r4.p == 196265095009ULL,
              "grover_resources(4)");
        const auto r8 = alg::grover_resources(8);
        check(r8.k == 32771 && r8.pi_k == 3513, "grover_resources(8)");
        const auto tr = alg::grover_trace(4, 0);
        check(tr.raw.back() == std::pair<i64, i64>{4, 0}, "final state (4,0,0,0)");
        check(tr.mu == 16 && tr.target_probs.back() == 16 && tr.other_probs.back() == 0,
              "probability 16/16 at the target");
    });

    criterion(8, "cardinal probability: sqrt', scale sets, realization verdicts", [] {
        check(card::approx_sqrt(2, 0).s == 2, "sqrt'2");
        check(card::approx_sqrt(3, 0).s == 2, "sqrt'3");
        check(card::approx_sqrt(6, 0).s == 3, "sqrt'6");
        check(card::approx_sqrt(2, 1).s == 15, "sqrt'200");
        check(card::approx_sqrt(3, 1).s == 18, "sqrt'300");
        check(card::approx_sqrt(6, 1).s == 25, "sqrt'600");

        const auto ctx = gf::make_field(311);
        std::vector<card::StateVector> states;
        for (unsigned m = 1; m <= 4; ++m) states.push_back(card::canonical_state(ctx, m));
        const auto ref = card::reference_probabilities(states);

        const auto s0 = card::rescale_states(states, 24, 0);
        check(s0[0].mu == 36 && s0[1].mu == 32 && s0[2].mu == 48 && s0[3].mu == 36,
              "mu set at t=0");
        const auto real0 = card::realization_of(s0);
        check(real0.probs[1][0] == 16 && real0.probs[2][0] == 16,
              "t=0 collapse 16 = 16 present");
        const auto rep0 = card::validate_realization(real0, ref);
        check(rep0.valid() && !rep0.strict() && rep0.collapsed >= 1, "t=0 verdict");

        const auto s1 = card::rescale_states(states, 24, 1);
        check(s1[0].mu == 2500 && s1[1].mu == 2592 && s1[2].mu == 2700 && s1[3].mu == 2500,
              "mu set at t=1");
        const auto real1 = card::realization_of(s1);
        check(real1.probs[1][0] == 1296 && real1.probs[2][0] == 900,
              "t=1 resolves the collapse (900 vs 1296)");
        const auto rep1 = card::validate_realization(real1, ref);
        check(rep1.strict(), "t=1 verdict");

        auto weighted = [&](const u64 (&w)[4]) {
            std::vector<card::ScaledState> out;
            for (unsigned i = 0; i < 4; ++i) {
                const u64 m = static_cast<u64>(card::lifted_norm_sq(states[i]));
                out.push_back(card::ScaledState{states[i], m, w[i], m * w[i] * w[i]});
            }
            return out;
        };
        const u64 failing[4] = {4, 3, 2, 2};
        const auto rep_fail =
            card::validate_realization(card::realization_of(weighted(failing)), ref);
        check(rep_fail.reversed >= 1, "failing choice must contain a reversal");
        const u64 good[4] = {16, 12, 9, 8};
        const auto rep_good =
            card::validate_realization(card::realization_of(weighted(good)), ref);
        check(rep_good.reversed == 0 && rep_good.valid(), "successful choice has 0 reversals");
    });

    criterion(9, "property suites (>= 1000 cases or exhaustive)", [] {
        std::mt19937_64 rng(0xacce97edULL);

        // Hermitian conditions A and B, 1000+ random cases over three fields
        for (u64 p : {3ULL, 7ULL, 311ULL}) {
            const auto ctx = gf::make_field(p);
            auto relem = [&] {
                return ctx.elem(static_cast<i64>(rng() % p), static_cast<i64>(rng() % p));
            };
            auto rvec = [&](std::size_t d) {
                la::Vec<gf::GaussianElem> v;
                for (std::size_t i = 0; i < d; ++i) v.a.push_back(relem());
                return v;
            };
            for (int it = 0; it < 400; ++it) {
                const std::size_t d = 1 + it % 5;
                const auto x = rvec(d), y = rvec(d), z = rvec(d);
                const auto a = relem(), b = relem();
                check(la::herm_dot(x, y) == gf::conj(la::herm_dot(y, x)), "condition A");
                la::Vec<gf::GaussianElem> lin;
                for (std::size_t i = 0; i < d; ++i) lin.a.push_back(a * x[i] + b * y[i]);
                check(la::herm_dot(lin, z) == gf::conj(a) * la::herm_dot(x, z) +
                                                  gf::conj(b) * la::herm_dot(y, z),
                      "condition B (first argument)");
                check(la::herm_dot(z, lin) ==
                          a * la::herm_dot(z, x) + b * la::herm_dot(z, y),
                      "condition B (second argument)");
            }
        }

        // conj: involution and ring homomorphism, exhaustive over F_9
        {
            const auto f3 = gf::make_field(3);
            std::vector<gf::GaussianElem> elems;
            for (i64 a = 0; a < 3; ++a)
                for (i64 b = 0; b < 3; ++b) elems.push_back(f3.elem(a, b));
            for (const auto& x : elems)
                for (const auto& y : elems) {
                    check(gf::conj(gf::conj(x)) == x, "conj involution");
                    check(gf::conj(x * y) == gf::conj(x) * gf::conj(y), "conj mult");
                    check(gf::conj(x + y) == gf::conj(x) + gf::conj(y), "conj add");
                }
        }

        // unitary invariance of herm_dot
        {
            const auto ctx = gf::make_field(311);
            std::vector<gf::GaussianElem> units;
            for (u64 a = 0; a < 311 && units.size() < 40; ++a)
                for (u64 b = 0; b < 311 && units.size() < 40; ++b) {
                    const auto e = ctx.elem(static_cast<i64>(a), static_cast<i64>(b));
                    if (gf::norm_sq(e) == 1) units.push_back(e);
                }
            for (int it = 0; it < 1000; ++it) {
                const std::size_t d = 2 + it % 4;
                std::vector<std::size_t> perm(d);
                for (std::size_t i = 0; i < d; ++i) perm[i] = i;
                std::shuffle(perm.begin(), perm.end(), rng);
                la::Mat<gf::GaussianElem> u(d, d, ctx.zero());
                for (std::size_t c = 0; c < d; ++c)
                    u(perm[c], c) = units[rng() % units.size()];
                check(la::is_unitary(u), "generalized permutation is unitary");
                la::Vec<gf::GaussianElem> x, y;
                for (std::size_t i = 0; i < d; ++i) {
                    x.a.push_back(ctx.elem(static_cast<i64>(rng() % 311),
                                           static_cast<i64>(rng() % 311)));
                    y.a.push_back(ctx.elem(static_cast<i64>(rng() % 311),
                                           static_cast<i64>(rng() % 311)));
                }
                check(la::herm_dot(la::apply(u, x), la::apply(u, y)) == la::herm_dot(x, y),
                      "unitary invariance");
            }
        }

        // condition C fails globally but never inside the F^2(11) region
        {
            const auto ctx = gf::make_field(311);
            bool witness = false;
            for (u64 a = 0; a < 311 && !witness; ++a)
                for (u64 b = 0; b < 311 && !witness; ++b) {
                    const la::Vec<gf::GaussianElem> v{
                        {ctx.one(), ctx.elem(static_cast<i64>(a), static_cast<i64>(b))}};
                    if (gf::is_zero(la::herm_dot(v, v))) witness = true;
                }
            check(witness, "global null witness exists");
            const auto region = ord::make_region(2, ord::ordered_range(311));
            const auto amps = ord::allowed_amplitudes(region);
            for (const auto& [a0, b0] : amps)
                for (const auto& [a1, b1] : amps) {
                    const la::Vec<gf::GaussianElem> v{{ctx.elem(a0, b0), ctx.elem(a1, b1)}};
                    const auto lift = gf::center_lift(la::herm_dot(v, v)).first;
                    check(lift >= 0 && lift <= 5, "norm lift inside [0, (k-1)/2]");
                    check((lift == 0) == la::is_zero_vec(v), "norm vanishes only at zero");
                }
        }

        // the six modal maps form a closed group of order 6
        {
            const auto& maps = modal::modal_maps();
            check(maps.size() == 6, "exactly 6 maps");
            for (const auto& mi : maps)
                for (const auto& mj : maps) {
                    const auto prod = la::matmul(mi.m, mj.m);
                    bool closed = false;
                    for (const auto& mk : maps)
                        if (mk.m == prod) closed = true;
                    check(closed, "closure");
                }
        }

        // transitive order on S_x(k); failure of the (k+1)-length extension
        {
            std::mt19937_64 prng(99);
            const std::pair<u64, u64> table[] = {{3, 2},     {7, 3},     {23, 5},
                                                 {71, 7},    {311, 11},  {479, 13},
                                                 {1559, 17}, {5711, 19}, {10559, 23},
                                                 {18191, 29}};
            for (const auto& [p, k] : table) {
                const auto r = ord::ordered_range(p);
                check(r.k == k, "Table I k");
                for (int it = 0; it < 100; ++it) {
                    const i64 x = static_cast<i64>(prng() % p);
                    check(ord::check_transitive(ord::window_residues(r, x), r),
                          "S_x(k) transitively ordered");
                }
                auto ext = ord::window_residues(r, 0);
                const i64 right = ord::window(r, 0).back() + 1;
                ext.push_back(static_cast<u64>(
                    (right % static_cast<i64>(p) + static_cast<i64>(p)) %
                    static_cast<i64>(p)));
                check(!ord::check_transitive(ext, r), "(k+1)-extension fails");
            }
        }

        // DJ closed form equals the circuit for n <= 3
        {
            const auto ctx = gf::make_field(422231);
            for (unsigned n = 1; n <= 3; ++n) {
                const u64 slots = u64{1} << n;
                for (int it = 0; it < 200; ++it) {
                    std::vector<std::uint8_t> t(slots);
                    for (auto& e : t) e = rng() & 1;
                    const auto f = modal::make_oracle(n, std::move(t));
                    const auto v = alg::dj_final_state(f, ctx);
                    for (u64 z = 0; z < slots; ++z) {
                        i64 acc = 0;
                        for (u64 x = 0; x < slots; ++x)
                            acc += ((f.table[x] + std::popcount(x & z)) % 2) ? -1 : 1;
                        check(v[z] == ctx.elem(acc), "closed form (y=0)");
                        check(v[slots + z] == ctx.elem(-acc), "closed form (y=1)");
                    }
                }
            }
        }

        // Grover recurrence equals dense simulation for N in {4, 8, 16}
        for (u64 n2 : {4ULL, 8ULL, 16ULL})
            for (u64 target = 0; target < n2; ++target) {
                const auto tr = alg::grover_trace(n2, target);
                std::vector<i64> v(n2, 1);
                for (std::size_t l = 0; l < tr.raw.size(); ++l) {
                    check(v[target] == tr.raw[l].first, "dense a_l");
                    for (u64 i = 0; i < n2; ++i)
                        if (i != target) check(v[i] == tr.raw[l].second, "dense b_l");
                    if (l + 1 == tr.raw.size()) break;
                    std::vector<i64> w = v;
                    w[target] = -w[target];
                    std::vector<i64> nx(n2, 0);
                    for (u64 i = 0; i < n2; ++i) {
                        i64 acc = 0;
                        for (u64 c = 0; c < n2; ++c)
                            acc += (i == c ? 1 - static_cast<i64>(n2 / 2) : 1) * w[c];
                        nx[i] = acc;
                    }
                    v = std::move(nx);
                }
            }

        // no integer solution to 2 x1^2 = 3 x2^2 with x <= 10^6
        {
            u64 solutions = 0;
            for (u64 x2 = 1; x2 <= 1000000; ++x2) {
                const u64 val = 3 * x2 * x2;
                if (val % 2) continue;
                const u64 s = nt::ceil_sqrt(val / 2);
                if (s * s == val / 2) ++solutions;
            }
            check(solutions == 0, "Lagrange-style no-go");
        }
    });

    criterion(10, "DQC-I divisibility: determinism iff p | 2^n - 1", [] {
        const auto f3 = gf::make_field(3);
        // all 5 admissible oracles at n=2: satisfiable iff |0>|00> is absent
        {
            const auto f = modal::oracle_from_ones(2, {});
            const auto res = alg::dqc1_usat_run(f, f3);
            check(res.supernatural, "p=3 divides 2^2-1");
            const auto sup = la::support(res.state);
            check(std::find(sup.begin(), sup.end(), 0u) != sup.end(),
                  "unsatisfiable keeps |0>|00>");
        }
        for (u64 x = 0; x < 4; ++x) {
            const auto res = alg::dqc1_usat_run(modal::oracle_from_ones(2, {x}), f3);
            const auto sup = la::support(res.state);
            check(std::find(sup.begin(), sup.end(), 0u) == sup.end(),
                  "satisfiable excludes |0>|00>");
        }
        // p=7: the equivalence fails for at least one oracle
        const auto f7 = gf::make_field(7);
        bool broken = false;
        for (u64 x = 0; x < 4; ++x) {
            const auto res = alg::dqc1_usat_run(modal::oracle_from_ones(2, {x}), f7);
            const auto sup = la::support(res.state);
            if (std::find(sup.begin(), sup.end(), 0u) != sup.end()) broken = true;
        }
        check(broken, "p=7 must break the determinism");
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 10 acceptance criteria passed\n";
    return 0;
}
