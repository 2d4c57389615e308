#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ffq::numtheory {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using u128 = unsigned __int128;

// Candidate ceiling for a000229_search. Covers every published table entry
// up to 18191 as well as 422231.
inline constexpr u64 kDefaultSearchBudget = u64{1} << 22;

// Largest k accepted by prime_pi (segmented sieve; exact counting only).
inline constexpr u64 kPrimePiLimit = u64{1} << 31;

// Largest index accepted by nth_prime.
inline constexpr u64 kNthPrimeLimit = 10'000'000;

u64 mulmod(u64 a, u64 b, u64 m);
u64 powmod(u64 a, u64 e, u64 m);

// Deterministic Miller-Rabin with a fixed witness set valid for all 64-bit
// inputs. 0 and 1 are not prime.
bool is_prime(u64 n);

// Euler's criterion: +1 for a non-zero quadratic residue mod p, -1 for a
// non-residue, 0 when p divides a. p must be an odd prime.
int legendre_symbol(i64 a, u64 p);

struct QnrReport {
    u64 p;
    u64 k; // least quadratic non-residue of p; always prime
};

// Least k >= 2 with legendre_symbol(k, p) == -1.
QnrReport least_qnr(u64 p);

// Least prime p whose least quadratic non-residue is k (OEIS A000229).
// Scans candidate primes in increasing order up to `budget`; returns nullopt
// when the budget is exhausted without a hit. Deterministic for any thread
// count (threads == 0 means hardware concurrency).
std::optional<u64> a000229_search(u64 k, u64 budget = kDefaultSearchBudget,
                                  unsigned threads = 1);

// True iff least_qnr(p).k == k. Runs in O(k log p), independent of the
// magnitude of p.
bool a000229_verify(u64 p, u64 k);

// Number of primes <= k.
u64 prime_pi(u64 k);

// The n-th prime (1-based); prime_pi(nth_prime(n)) == n.
u64 nth_prime(u64 n);

// Least s with s*s >= m.
u64 ceil_sqrt(u64 m);

// All primes <= limit in increasing order.
std::vector<u64> primes_upto(u64 limit);

std::string to_string_u128(u128 v);

namespace detail {
// Euler's criterion without re-validating p; callers guarantee p is an odd
// prime. Used by the search/verify inner loops.
int legendre_unchecked(i64 a, u64 p);
} // namespace detail

} // namespace ffq::numtheory
