#include "ffq/numtheory.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "ffq/errors.hpp"

namespace ffq::numtheory {

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    const int s = std::countr_zero(n - 1);
    const u64 d = (n - 1) >> s;
    // Witness set proven complete for n < 3.3 * 10^24.
    for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace detail {

int legendre_unchecked(i64 a, u64 p) {
    const i64 sp = static_cast<i64>(p);
    u64 r = static_cast<u64>((a % sp + sp) % sp);
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

} // namespace detail

static void require_odd_prime(u64 p, const char* who) {
    if (p == 2 || !is_prime(p))
        throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

int legendre_symbol(i64 a, u64 p) {
    require_odd_prime(p, "legendre_symbol");
    return detail::legendre_unchecked(a, p);
}

QnrReport least_qnr(u64 p) {
    require_odd_prime(p, "least_qnr");
    for (u64 k = 2;; ++k) {
        if (detail::legendre_unchecked(static_cast<i64>(k), p) == -1) {
            if (!is_prime(k))
                throw std::logic_error("least_qnr: least non-residue is not prime");
            return QnrReport{p, k};
        }
    }
}

std::vector<u64> primes_upto(u64 limit) {
    std::vector<u64> out;
    if (limit < 2) return out;
    if (limit > (u64{1} << 27))
        throw CapacityError("primes_upto: limit exceeds 2^27");
    std::vector<uint8_t> comp(limit + 1, 0);
    for (u64 i = 2; i * i <= limit; ++i)
        if (!comp[i])
            for (u64 j = i * i; j <= limit; j += i) comp[j] = 1;
    for (u64 i = 2; i <= limit; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

// Sieves [lo, hi) using base primes covering sqrt(hi) and returns the least
// prime in the block whose residue profile matches k, if any.
static std::optional<u64> scan_block(u64 lo, u64 hi, u64 k,
                                     const std::vector<u64>& small_primes,
                                     const std::vector<u64>& base) {
    std::vector<uint8_t> comp(hi - lo, 0);
    for (u64 q : base) {
        if (q * q >= hi) break;
        u64 start = std::max(q * q, (lo + q - 1) / q * q);
        for (u64 m = start; m < hi; m += q) comp[m - lo] = 1;
    }
    for (u64 v = std::max<u64>(lo, 3); v < hi; ++v) {
        if (comp[v - lo] || v % 2 == 0) continue;
        bool ok = true;
        for (u64 q : small_primes) {
            if (detail::legendre_unchecked(static_cast<i64>(q), v) != 1) {
                ok = false;
                break;
            }
        }
        if (ok && detail::legendre_unchecked(static_cast<i64>(k), v) == -1) return v;
    }
    return std::nullopt;
}

std::optional<u64> a000229_search(u64 k, u64 budget, unsigned threads) {
    if (!is_prime(k))
        throw std::invalid_argument("a000229_search: k must be prime");
    if (budget < 3) return std::nullopt;
    // The least non-residue of p is below p, so no candidate within the
    // budget can reach a k beyond it.
    if (k > budget) return std::nullopt;
    if (threads == 0)
        threads = std::max(1u, std::thread::hardware_concurrency());

    // Checking primes below k suffices: any composite below k factors into
    // them, and a product of residues is a residue.
    const std::vector<u64> small_primes = primes_upto(k - 1);
    const std::vector<u64> base = primes_upto(ceil_sqrt(budget) + 1);

    constexpr u64 kBlock = u64{1} << 16;
    u64 lo = 3;
    while (lo <= budget) {
        if (threads == 1) {
            u64 hi = std::min(lo + kBlock, budget + 1);
            if (auto hit = scan_block(lo, hi, k, small_primes, base)) return hit;
            lo = hi;
            continue;
        }
        // One round of `threads` consecutive blocks; block boundaries do not
        // depend on the thread count, so results are reproducible.
        std::vector<std::optional<u64>> found(threads);
        std::vector<std::thread> workers;
        for (unsigned t = 0; t < threads; ++t) {
            u64 blo = lo + t * kBlock;
            if (blo > budget) break;
            u64 bhi = std::min(blo + kBlock, budget + 1);
            workers.emplace_back([&, t, blo, bhi] {
                found[t] = scan_block(blo, bhi, k, small_primes, base);
            });
        }
        for (auto& w : workers) w.join();
        for (auto& f : found)
            if (f) return f;
        lo += u64{threads} * kBlock;
    }
    return std::nullopt;
}

bool a000229_verify(u64 p, u64 k) {
    require_odd_prime(p, "a000229_verify");
    if (k < 2 || !is_prime(k)) return false; // the least non-residue is prime
    for (u64 q = 2; q < k; ++q) {
        if (!is_prime(q)) continue;
        if (detail::legendre_unchecked(static_cast<i64>(q), p) != 1) return false;
    }
    return detail::legendre_unchecked(static_cast<i64>(k), p) == -1;
}

u64 prime_pi(u64 k) {
    if (k < 2) return 0;
    if (k > kPrimePiLimit)
        throw CapacityError("prime_pi: k exceeds the exact-counting limit 2^31");
    const std::vector<u64> base = primes_upto(ceil_sqrt(k) + 1);
    constexpr u64 kSegment = u64{1} << 21;
    u64 count = 0;
    std::vector<uint8_t> comp;
    for (u64 lo = 2; lo <= k; lo += kSegment) {
        u64 hi = std::min(lo + kSegment, k + 1);
        comp.assign(hi - lo, 0);
        for (u64 q : base) {
            if (q * q >= hi) break;
            u64 start = std::max(q * q, (lo + q - 1) / q * q);
            for (u64 m = start; m < hi; m += q) comp[m - lo] = 1;
        }
        for (u64 v = lo; v < hi; ++v)
            if (!comp[v - lo]) ++count;
    }
    return count;
}

u64 nth_prime(u64 n) {
    if (n < 1) throw std::invalid_argument("nth_prime: n must be >= 1");
    if (n > kNthPrimeLimit)
        throw CapacityError("nth_prime: n exceeds the supported range 10^7");
    // Rosser-style upper bound, padded; always sufficient for n <= 10^7.
    u64 bound = 15;
    if (n >= 6) {
        double nd = static_cast<double>(n);
        bound = static_cast<u64>(nd * (std::log(nd) + std::log(std::log(nd))) * 1.2) + 16;
    }
    const std::vector<u64> base = primes_upto(ceil_sqrt(bound) + 1);
    constexpr u64 kSegment = u64{1} << 21;
    u64 count = 0;
    std::vector<uint8_t> comp;
    for (u64 lo = 2; lo <= bound; lo += kSegment) {
        u64 hi = std::min(lo + kSegment, bound + 1);
        comp.assign(hi - lo, 0);
        for (u64 q : base) {
            if (q * q >= hi) break;
            u64 start = std::max(q * q, (lo + q - 1) / q * q);
            for (u64 m = start; m < hi; m += q) comp[m - lo] = 1;
        }
        for (u64 v = lo; v < hi; ++v) {
            if (comp[v - lo]) continue;
            if (++count == n) return v;
        }
    }
    throw std::logic_error("nth_prime: bound estimate too small");
}

u64 ceil_sqrt(u64 m) {
    if (m == 0) return 0;
    u64 s = static_cast<u64>(std::sqrt(static_cast<double>(m)));
    while (s > 0 && u128{s - 1} * (s - 1) >= m) --s;
    while (u128{s} * s < m) ++s;
    return s;
}

std::string to_string_u128(u128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

} // namespace ffq::numtheory
