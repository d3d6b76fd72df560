#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "config.hpp"
#include "errors.hpp"

namespace glr {

/// A finite pseudo MV-algebra as operation tables, plus derived structure.
///
/// odot, leq, join and meet are always filled mechanically from the defining
/// formulas; they are only meaningful once check_axioms passes.
struct MVTable {
    std::uint32_t n = 0;
    std::vector<std::uint16_t> oplus; ///< n x n
    std::vector<std::uint16_t> neg_minus;
    std::vector<std::uint16_t> neg_tilde;
    std::uint16_t zero = 0, one = 0;

    std::vector<std::uint16_t> odot; ///< x(.)y = (y- (+) x-)~
    std::vector<std::uint8_t> leq;   ///< x <= y iff x- (+) y = 1
    std::vector<std::uint16_t> join; ///< x (+) (x~ (.) y)
    std::vector<std::uint16_t> meet; ///< x (.) (x- (+) y)

    std::uint16_t op(std::uint16_t x, std::uint16_t y) const { return oplus[std::size_t(x) * n + y]; }
    std::uint16_t od(std::uint16_t x, std::uint16_t y) const { return odot[std::size_t(x) * n + y]; }
    std::uint16_t jn(std::uint16_t x, std::uint16_t y) const { return join[std::size_t(x) * n + y]; }
    std::uint16_t mt(std::uint16_t x, std::uint16_t y) const { return meet[std::size_t(x) * n + y]; }
    bool le(std::uint16_t x, std::uint16_t y) const { return leq[std::size_t(x) * n + y] != 0; }

    bool same_tables(const MVTable& o) const {
        return n == o.n && oplus == o.oplus && neg_minus == o.neg_minus &&
               neg_tilde == o.neg_tilde && zero == o.zero && one == o.one;
    }
};

/// Recompute the derived tables from oplus and the negations.
void derive_mv(MVTable& t);

/// The n-element chain with truncated addition; x- = x~ = (n-1) - x.
MVTable make_chain(std::uint32_t n);

MVTable product_mv(std::span<const MVTable> factors, const RunConfig& cfg = {});

struct AxiomCheck {
    std::string name;
    bool ok = true;
    /// First counterexample in lexicographic scan order (unused slots are -1).
    int a = -1, b = -1, c = -1;
};

struct MVAxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass = true;

    const AxiomCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// A1 over all triples, A2-A8 over all pairs/singletons, then the derived
/// order and the four-expression join/meet agreement checks.
MVAxiomReport check_axioms(const MVTable& t);

struct MVCommutativityReport {
    bool oplus_commutative = true;
    std::optional<std::pair<std::uint16_t, std::uint16_t>> witness;
    bool negations_coincide = true;
    std::optional<std::uint16_t> negation_witness;
};

MVCommutativityReport is_commutative(const MVTable& t);

/// Minimal nonzero elements in the derived order, ascending.
std::vector<std::uint16_t> atoms(const MVTable& t);

struct ChainProductIso {
    std::vector<std::uint32_t> chain_lengths;         ///< one per atom, ascending atom order
    std::vector<std::vector<std::uint16_t>> coords;   ///< element -> per-atom coordinate
};

/// Canonical decomposition as a product of chains: each atom spawns one chain
/// coordinate; absent when the canonical map is not a bijective homomorphism.
std::optional<ChainProductIso> iso_to_chain_product(const MVTable& t);

} // namespace glr
