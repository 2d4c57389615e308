#include "ffq/modal.hpp"

#include <bit>
#include <stdexcept>

#include "ffq/errors.hpp"

namespace ffq::modal {

using gf::Bit;

static BitMat mat2(int a, int b, int c, int d) {
    return BitMat(2, 2,
                  std::vector<Bit>{Bit{static_cast<std::uint8_t>(a)},
                                   Bit{static_cast<std::uint8_t>(b)},
                                   Bit{static_cast<std::uint8_t>(c)},
                                   Bit{static_cast<std::uint8_t>(d)}});
}

const std::array<ModalMap, 6>& modal_maps() {
    static const std::array<ModalMap, 6> maps = {{
        {"X0", mat2(1, 0, 0, 1)},
        {"X1", mat2(0, 1, 1, 0)},
        {"S", mat2(1, 0, 1, 1)},
        {"Sdag", mat2(1, 1, 0, 1)},
        {"D1", mat2(0, 1, 1, 1)},
        {"D2", mat2(1, 1, 1, 0)},
    }};
    return maps;
}

Oracle make_oracle(unsigned n, std::vector<std::uint8_t> table) {
    if (n < 1 || n > 20)
        throw std::invalid_argument("oracle: n must be in 1..20");
    if (table.size() != (std::size_t{1} << n))
        throw std::invalid_argument("oracle: truth table must have 2^n entries");
    u64 ones = 0;
    for (auto& v : table) {
        if (v > 1) throw std::invalid_argument("oracle: table entries must be 0/1");
        ones += v;
    }
    return Oracle{n, std::move(table), ones};
}

Oracle oracle_from_ones(unsigned n, const std::vector<u64>& ones) {
    if (n < 1 || n > 20)
        throw std::invalid_argument("oracle: n must be in 1..20");
    std::vector<std::uint8_t> table(std::size_t{1} << n, 0);
    for (u64 x : ones) {
        if (x >= table.size())
            throw std::invalid_argument("oracle: assignment out of range");
        if (table[x]) throw std::invalid_argument("oracle: duplicate assignment");
        table[x] = 1;
    }
    return make_oracle(n, std::move(table));
}

Oracle oracle_from_json(const nlohmann::json& j) {
    const unsigned n = j.at("n").get<unsigned>();
    std::vector<u64> ones;
    for (const auto& s : j.at("ones")) {
        const std::string bits = s.get<std::string>();
        if (bits.size() != n)
            throw std::invalid_argument("oracle: bitstring length must equal n");
        u64 idx = 0;
        for (char c : bits) {
            if (c != '0' && c != '1')
                throw std::invalid_argument("oracle: bitstring must be 0/1");
            idx = (idx << 1) | static_cast<u64>(c - '0');
        }
        ones.push_back(idx);
    }
    return oracle_from_ones(n, ones);
}

static std::string bitstring(u64 x, unsigned width) {
    std::string s(width, '0');
    for (unsigned i = 0; i < width; ++i)
        if (x >> (width - 1 - i) & 1) s[i] = '1';
    return s;
}

nlohmann::json oracle_to_json(const Oracle& f) {
    nlohmann::json ones = nlohmann::json::array();
    for (std::size_t x = 0; x < f.table.size(); ++x)
        if (f.table[x]) ones.push_back(bitstring(x, f.n));
    return nlohmann::json{{"n", f.n}, {"ones", ones}};
}

std::vector<std::size_t> measure_outcomes(const BitVec& psi) {
    auto out = la::support(psi);
    if (out.empty())
        throw NonPhysicalState("measure: the zero vector is non-physical");
    return out;
}

BitVec apply_oracle(const Oracle& f, const BitVec& psi) {
    BitVec out = psi;
    la::apply_oracle_perm(out, f.n, f.table);
    return out;
}

static void require_unique_sat(const Oracle& f) {
    if (f.sat_count > 1)
        throw std::invalid_argument(
            "UNIQUE-SAT requires at most one satisfying assignment (got " +
            std::to_string(f.sat_count) + ")");
}

BitVec usat_run(const Oracle& f) {
    require_unique_sat(f);
    const unsigned nq = f.n + 1;
    BitVec v(std::size_t{1} << nq, Bit{0});
    v[0] = Bit{1}; // |0>|0...0>
    const BitMat& s = modal_maps()[2].m;
    const BitMat& sdag = modal_maps()[3].m;
    for (unsigned q = 1; q < nq; ++q) la::apply_1q(v, nq, q, s);
    la::apply_oracle_perm(v, f.n, f.table);
    for (unsigned q = 1; q < nq; ++q) la::apply_1q(v, nq, q, s);
    la::apply_1q(v, nq, 0, sdag);
    for (unsigned q = 1; q < nq; ++q) la::apply_cnot(v, nq, 0, q);
    la::apply_1q(v, nq, 0, sdag);
    return v;
}

SatVerdict usat_decide(const Oracle& f) {
    const auto outcomes = measure_outcomes(usat_run(f));
    if (outcomes.size() == 1 && outcomes[0] == 0) return SatVerdict::unsatisfiable;
    for (std::size_t idx : outcomes)
        if (idx == 0)
            throw std::logic_error("usat_decide: inconsistent support pattern");
    return SatVerdict::satisfiable;
}

std::optional<u64> usat_binary_search(const Oracle& f) {
    if (usat_decide(f) == SatVerdict::unsatisfiable) return std::nullopt;
    std::vector<std::uint8_t> seg = f.table;
    u64 base = 0;
    while (seg.size() > 1) {
        std::vector<std::uint8_t> left(seg.begin(), seg.begin() + seg.size() / 2);
        Oracle probe = (left.size() == 1)
                           ? make_oracle(1, {left[0], 0})
                           : make_oracle(static_cast<unsigned>(std::countr_zero(left.size())),
                                         left);
        if (usat_decide(probe) == SatVerdict::satisfiable) {
            seg = std::move(left);
        } else {
            base += seg.size() / 2;
            std::vector<std::uint8_t> right(seg.begin() + static_cast<std::ptrdiff_t>(seg.size() / 2),
                                            seg.end());
            seg = std::move(right);
        }
    }
    return base;
}

} // namespace ffq::modal
