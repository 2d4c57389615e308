#include "ffq/ordered.hpp"

#include <stdexcept>

#include "ffq/numtheory.hpp"

namespace ffq::ordered {

namespace nt = ffq::numtheory;

OrderedRange ordered_range(u64 p) {
    auto rep = nt::least_qnr(p); // validates p odd prime
    return OrderedRange{rep.p, rep.k};
}

std::vector<i64> window(const OrderedRange& r, i64 x) {
    const i64 left = static_cast<i64>((r.k - 1) / 2);
    const i64 right = static_cast<i64>(r.k - 1) - left;
    std::vector<i64> out;
    out.reserve(r.k);
    for (i64 v = x - left; v <= x + right; ++v) out.push_back(v);
    return out;
}

std::vector<u64> window_residues(const OrderedRange& r, i64 x) {
    const i64 sp = static_cast<i64>(r.p);
    std::vector<u64> out;
    out.reserve(r.k);
    for (i64 v : window(r, x)) out.push_back(static_cast<u64>((v % sp + sp) % sp));
    return out;
}

QrCmp qr_less(u64 a, u64 b, const OrderedRange& r) {
    a %= r.p;
    b %= r.p;
    if (a == b) return QrCmp::equal;
    const u64 fwd = (b + r.p - a) % r.p;
    if (nt::detail::legendre_unchecked(static_cast<i64>(fwd), r.p) == 1)
        return QrCmp::less;
    const u64 bwd = (a + r.p - b) % r.p;
    if (nt::detail::legendre_unchecked(static_cast<i64>(bwd), r.p) == 1)
        return QrCmp::greater;
    return QrCmp::incomparable;
}

bool check_transitive(std::span<const u64> seq, const OrderedRange& r) {
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = i + 1; j < seq.size(); ++j) {
            const u64 diff = (seq[j] % r.p + r.p - seq[i] % r.p) % r.p;
            if (diff == 0) return false;
            if (nt::detail::legendre_unchecked(static_cast<i64>(diff), r.p) != 1)
                return false;
        }
    return true;
}

AmplitudeRegion make_region(u64 d, const OrderedRange& r) {
    const u64 half = (r.k - 1) / 2;
    if (d == 0 || d >= r.p - half)
        throw std::invalid_argument("make_region: requires 0 < d < p - (k-1)/2");
    return AmplitudeRegion{d, r};
}

std::vector<std::pair<i64, i64>> allowed_amplitudes_k(u64 k, u64 d) {
    if (k < 2 || d == 0)
        throw std::invalid_argument("allowed_amplitudes: requires k >= 2 and d >= 1");
    const u64 half = (k - 1) / 2;
    const i64 s = static_cast<i64>(nt::ceil_sqrt(half / d));
    std::vector<std::pair<i64, i64>> out;
    for (i64 a = -s; a <= s; ++a)
        for (i64 b = -s; b <= s; ++b) {
            const gf::u128 mag = gf::u128{static_cast<u64>(a * a)} + static_cast<u64>(b * b);
            if (gf::u128{d} * mag <= half) out.emplace_back(a, b);
        }
    return out;
}

std::vector<std::pair<i64, i64>> allowed_amplitudes(const AmplitudeRegion& region) {
    return allowed_amplitudes_k(region.range.k, region.d);
}

RegionCheck in_region(const StateVector& psi, const AmplitudeRegion& region) {
    if (psi.dim() != region.d)
        throw std::invalid_argument("in_region: psi.dim must equal region.d");
    const u64 half = (region.range.k - 1) / 2;
    for (std::size_t i = 0; i < psi.dim(); ++i) {
        if (psi[i].p != region.range.p)
            throw std::invalid_argument("in_region: state and region fields differ");
        const auto [a, b] = gf::center_lift(psi[i]);
        const u64 ua = static_cast<u64>(a < 0 ? -a : a);
        const u64 ub = static_cast<u64>(b < 0 ? -b : b);
        const gf::u128 mag = gf::u128{ua} * ua + gf::u128{ub} * ub;
        if (gf::u128{region.d} * mag > half) {
            RegionCheck bad;
            bad.ok = false;
            bad.violation_index = i;
            bad.reason = "d*|amp|^2 exceeds (k-1)/2 = " + std::to_string(half) +
                         " at coordinate " + std::to_string(i);
            return bad;
        }
    }
    return RegionCheck{};
}

} // namespace ffq::ordered
