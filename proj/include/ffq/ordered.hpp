#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ffq/gfield.hpp"
#include "ffq/linalg.hpp"

// Runs of consecutive quadratic residues and the local order they induce:
// the window S_x(k), the quadratic-residue comparator, and the amplitude
// region d*(a^2+b^2) <= (k-1)/2.
namespace ffq::ordered {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using StateVector = la::Vec<gf::GaussianElem>;

struct OrderedRange {
    u64 p; // odd prime
    u64 k; // least quadratic non-residue of p; 1..k-1 are all residues
};

OrderedRange ordered_range(u64 p);

// S_x(k): the k consecutive integers centered at x. Odd k gives the
// symmetric window x-(k-1)/2 .. x+(k-1)/2; even k (only k=2, p=3) anchors
// at x and extends right.
std::vector<i64> window(const OrderedRange& r, i64 x);
std::vector<u64> window_residues(const OrderedRange& r, i64 x);

enum class QrCmp { less, greater, equal, incomparable };

// a < b iff b-a is a quadratic residue mod p. The order is only local;
// when neither difference is a residue the pair is incomparable.
QrCmp qr_less(u64 a, u64 b, const OrderedRange& r);

// True iff every pairwise forward difference seq[j]-seq[i] (i<j) is a
// non-zero quadratic residue.
bool check_transitive(std::span<const u64> seq, const OrderedRange& r);

struct AmplitudeRegion {
    u64 d;
    OrderedRange range;
};

// Requires d < p - (k-1)/2.
AmplitudeRegion make_region(u64 d, const OrderedRange& r);

// All centered pairs (a, b) with d*(a^2+b^2) <= (k-1)/2, over the integers,
// sorted lexicographically. Depends on (k, d) only.
std::vector<std::pair<i64, i64>> allowed_amplitudes_k(u64 k, u64 d);
std::vector<std::pair<i64, i64>> allowed_amplitudes(const AmplitudeRegion& region);

struct RegionCheck {
    bool ok = true;
    std::optional<std::size_t> violation_index; // first offending coordinate
    std::string reason;
};

// Evaluates the region bound on centered integer lifts; never on raw
// residues, since the bound is an integer statement and wrap-around would
// falsify it.
RegionCheck in_region(const StateVector& psi, const AmplitudeRegion& region);

} // namespace ffq::ordered
