#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <string>

#include "qcss/bitvec.hpp"

namespace qcss {

enum class Basis : std::uint8_t { Z, X };

inline char basis_char(Basis b) { return b == Basis::Z ? 'Z' : 'X'; }

// Signed Pauli operator in X/Z support representation. Qubit i carries X iff
// x[i] and not z[i], Z iff the reverse, Y iff both. The CSS-restricted
// operations in this library keep every operator pure-type, so the i-phase of
// Y is never needed; only the +/-1 sign is tracked.
struct PauliOperator {
    BitVector x;
    BitVector z;
    int sign = +1;

    PauliOperator() = default;
    PauliOperator(BitVector x_supp, BitVector z_supp, int s = +1)
        : x(std::move(x_supp)), z(std::move(z_supp)), sign(s) {
        if (x.size() != z.size()) throw std::invalid_argument("Pauli support length mismatch");
        if (s != 1 && s != -1) throw std::invalid_argument("Pauli sign must be +1 or -1");
    }

    static PauliOperator identity(std::size_t n) { return {BitVector(n), BitVector(n), +1}; }
    static PauliOperator single(std::size_t n, std::size_t q, Basis b, int s = +1) {
        PauliOperator p = identity(n);
        (b == Basis::X ? p.x : p.z).set(q);
        p.sign = s;
        return p;
    }
    static PauliOperator x_on(std::size_t n, std::span<const std::size_t> qs, int s = +1) {
        return {BitVector::from_indices(n, qs), BitVector(n), s};
    }
    static PauliOperator z_on(std::size_t n, std::span<const std::size_t> qs, int s = +1) {
        return {BitVector(n), BitVector::from_indices(n, qs), s};
    }

    std::size_t n_qubits() const { return x.size(); }
    bool is_x_type() const { return !z.any(); }
    bool is_z_type() const { return !x.any(); }
    bool is_pure_type() const { return is_x_type() || is_z_type(); }
    bool is_identity_support() const { return !x.any() && !z.any(); }
    std::size_t weight() const { return x.popcount() + z.popcount() - x.count_and(z); }

    std::string to_string() const;
};

// 1 iff a and b anticommute: parity of |supp_x(a) ∩ supp_z(b)| + |supp_z(a) ∩ supp_x(b)|.
inline int symplectic_product(const PauliOperator& a, const PauliOperator& b) {
    if (a.n_qubits() != b.n_qubits())
        throw std::invalid_argument("symplectic_product: operator length mismatch");
    return static_cast<int>(a.x.parity_and(b.z) ^ a.z.parity_and(b.x));
}

// Product a*b with supports XORed and signs multiplied. A reordering sign
// would arise wherever a's Z meets b's X (or vice versa); CSS usage never
// produces that case, which is asserted here.
inline PauliOperator multiply(const PauliOperator& a, const PauliOperator& b) {
    if (a.n_qubits() != b.n_qubits()) throw std::invalid_argument("multiply: operator length mismatch");
    assert(!a.x.parity_and(b.z) && !a.z.parity_and(b.x) &&
           "multiply: mixed-type overlap would introduce an i-phase");
    assert(a.x.count_and(b.z) == 0 && a.z.count_and(b.x) == 0);
    return {a.x ^ b.x, a.z ^ b.z, a.sign * b.sign};
}

}  // namespace qcss
