#ifndef ZDGA_RING_HPP
#define ZDGA_RING_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "zdga/errors.hpp"

namespace zdga {

/// Default guard against accidental huge Cayley-table allocation.
inline constexpr int kDefaultOrderCap = 512;

/// Explicit finite commutative ring with identity: element labels plus
/// full addition/multiplication tables. Index 0 is the additive zero.
/// Immutable after construction; safe to share across threads.
struct FiniteRing {
    int order = 0;
    int one_index = 0;
    std::vector<std::string> labels;
    std::vector<std::uint16_t> add_table; // order*order, row-major
    std::vector<std::uint16_t> mul_table;
    std::string spec_text;

    int add(int a, int b) const { return add_table[static_cast<std::size_t>(a) * order + b]; }
    int mul(int a, int b) const { return mul_table[static_cast<std::size_t>(a) * order + b]; }

    void check_element(int x) const {
        if (x < 0 || x >= order)
            throw IndexError("element index " + std::to_string(x) + " out of range for ring of order " +
                             std::to_string(order));
    }
};

/// Per-axiom result of an exhaustive table check. On failure `witness`
/// holds the first counterexample triple (unused slots are -1).
struct AxiomCheck {
    std::string axiom;
    bool pass = true;
    std::array<int, 3> witness{-1, -1, -1};
};

struct AxiomReport {
    std::vector<AxiomCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Constructors. Every constructor fills explicit tables; `order_cap`
// bounds the resulting order.
FiniteRing build_zn(int n, int order_cap = kDefaultOrderCap);
FiniteRing build_gf(int p, int k, int order_cap = kDefaultOrderCap);
FiniteRing build_quotient(int p, const std::vector<int>& poly, int order_cap = kDefaultOrderCap);
FiniteRing build_product(const std::vector<FiniteRing>& factors, int order_cap = kDefaultOrderCap);
FiniteRing build_idealization(const FiniteRing& base, int rank, int order_cap = kDefaultOrderCap);

/// The monic irreducible modulus build_gf uses: smallest in lexicographic
/// order of the coefficient tuple (c0, ..., c_{k-1}), constant term first.
/// Returned as c0..c_{k-1} followed by the leading 1.
std::vector<int> gf_modulus(int p, int k);

AxiomReport verify_ring_axioms(const FiniteRing& ring);

// Ring-theoretic subsets, as sorted element-index lists. In a finite
// commutative ring the units are exactly the non-zero-divisors.
std::vector<int> zero_divisors(const FiniteRing& ring);
std::vector<int> units(const FiniteRing& ring);
std::vector<int> annihilator(const FiniteRing& ring, int x);
std::vector<int> nilradical(const FiniteRing& ring);

/// A finite commutative ring is local iff Z(R) is an ideal; we check
/// closure of Z(R) under addition and under multiplication by any element.
bool is_local(const FiniteRing& ring);

bool is_prime(int n);

} // namespace zdga

#endif
