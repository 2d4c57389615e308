#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ffq/gfield.hpp"
#include "ffq/linalg.hpp"

#include "json.hpp"

// Modal quantum theory over F_2: states are non-zero bit vectors, evolution
// is any invertible linear map, measurement returns the support set with no
// probability distribution attached.
namespace ffq::modal {

using u64 = std::uint64_t;
using BitVec = la::Vec<gf::Bit>;
using BitMat = la::Mat<gf::Bit>;

struct ModalMap {
    std::string name; // X0, X1, S, Sdag, D1, D2
    BitMat m;
};

// The six invertible one-qubit maps, in the order X0, X1, S, Sdag, D1, D2.
const std::array<ModalMap, 6>& modal_maps();

// Classical function f : B^n -> B as an explicit truth table. Index x packs
// x_1..x_n with x_1 most significant.
struct Oracle {
    unsigned n = 0;
    std::vector<std::uint8_t> table; // 2^n entries of 0/1
    u64 sat_count = 0;
};

Oracle make_oracle(unsigned n, std::vector<std::uint8_t> table);
Oracle oracle_from_ones(unsigned n, const std::vector<u64>& ones);

// File format: {"n": int, "ones": ["bitstring", ...]} with x_1 first.
Oracle oracle_from_json(const nlohmann::json& j);
nlohmann::json oracle_to_json(const Oracle& f);

// Support set of a non-zero state; measuring the zero vector is an error.
std::vector<std::size_t> measure_outcomes(const BitVec& psi);

// U_f |y>|x> = |y + f(x)>|x>, y most significant.
BitVec apply_oracle(const Oracle& f, const BitVec& psi);

// Pre-measurement state of the UNIQUE-SAT circuit: S on each x qubit, U_f,
// S on each x qubit, S+ on y, CNOT(y -> each x), S+ on y. Requires
// sat_count <= 1.
BitVec usat_run(const Oracle& f);

enum class SatVerdict { satisfiable, unsatisfiable };

// Deterministic decision: the support of usat_run is exactly {|0>|0..0>}
// for unsatisfiable f, and excludes it for satisfiable f.
SatVerdict usat_decide(const Oracle& f);

// Demo of the O(log N) database search sketched alongside UNIQUE-SAT: binary
// search over the table, one usat_decide call per halving. Returns the index
// of the satisfying assignment, or nullopt when f is unsatisfiable.
std::optional<u64> usat_binary_search(const Oracle& f);

} // namespace ffq::modal
