#pragma once

// Brute-force reference implementations used only by the tests.  They stay
// deliberately independent of the enumeration/closure engines they check:
// everything here filters raw subsets against the definitions.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bitset.hpp"
#include "finite_ring.hpp"
#include "ideal_lattice.hpp"

namespace glr::oracle {

inline bool subset_is_ideal(const FiniteRing& R, std::uint32_t mask, bool two_sided) {
    const std::uint32_t n = R.size();
    if (!((mask >> R.zero()) & 1u)) return false;
    for (std::uint32_t a = 0; a < n; ++a) {
        if (!((mask >> a) & 1u)) continue;
        if (!((mask >> R.neg(ElementId(a))) & 1u)) return false;
        for (std::uint32_t b = a; b < n; ++b) {
            if (!((mask >> b) & 1u)) continue;
            if (!((mask >> R.add(ElementId(a), ElementId(b))) & 1u)) return false;
        }
        for (std::uint32_t r = 0; r < n; ++r) {
            if (!((mask >> R.mul(ElementId(r), ElementId(a))) & 1u)) return false;
            if (two_sided && !((mask >> R.mul(ElementId(a), ElementId(r))) & 1u)) return false;
        }
    }
    return true;
}

/// All two-sided ideals by filtering every one of the 2^n subsets (n <= 20).
inline std::vector<Bitset> brute_force_ideals(const FiniteRing& R, bool two_sided = true) {
    const std::uint32_t n = R.size();
    std::vector<Bitset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
        if (!subset_is_ideal(R, std::uint32_t(mask), two_sided)) continue;
        Bitset b(n);
        for (std::uint32_t i = 0; i < n; ++i)
            if ((mask >> i) & 1u) b.set(i);
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), Bitset::canonical_less);
    return out;
}

inline std::vector<Bitset> brute_force_left_ideals(const FiniteRing& R) {
    return brute_force_ideals(R, false);
}

/// Additive closure by repeated pairwise sums to a fixpoint.
inline Bitset brute_force_additive_closure(const FiniteRing& R, const Bitset& seed) {
    Bitset S = seed;
    S.set(R.zero());
    bool changed = true;
    while (changed) {
        changed = false;
        Bitset next = S;
        S.for_each([&](std::size_t a) {
            next.set(R.neg(ElementId(a)));
            S.for_each([&](std::size_t b) { next.set(R.add(ElementId(a), ElementId(b))); });
        });
        if (next != S) {
            S = next;
            changed = true;
        }
    }
    return S;
}

/// Ideal product from the definition: additive closure of all pairwise products.
inline Bitset brute_force_ideal_product(const FiniteRing& R, const Bitset& I, const Bitset& J) {
    Bitset seed(R.size());
    seed.set(R.zero());
    I.for_each([&](std::size_t a) {
        J.for_each([&](std::size_t b) { seed.set(R.mul(ElementId(a), ElementId(b))); });
    });
    return brute_force_additive_closure(R, seed);
}

/// All semiring ideals of the ideal lattice: nonempty subsets of ideal ids
/// closed under the sum table and downward closed (lattice size <= 20).
inline std::vector<Bitset> brute_force_semiring_ideals(const IdealLattice& L) {
    const std::uint32_t m = std::uint32_t(L.count());
    std::vector<Bitset> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << m); ++mask) {
        bool ok = true;
        for (std::uint32_t a = 0; a < m && ok; ++a) {
            if (!((mask >> a) & 1u)) continue;
            for (std::uint32_t b = 0; b < m && ok; ++b) {
                if (((mask >> b) & 1u) && !((mask >> L.sum(IdealId(a), IdealId(b))) & 1u))
                    ok = false;
                if (L.leq(IdealId(b), IdealId(a)) && !((mask >> b) & 1u)) ok = false;
            }
        }
        if (!ok) continue;
        Bitset b(m);
        for (std::uint32_t i = 0; i < m; ++i)
            if ((mask >> i) & 1u) b.set(i);
        out.push_back(std::move(b));
    }
    std::sort(out.begin(), out.end(), Bitset::canonical_less);
    return out;
}

inline Bitset mask_of(const FiniteRing& R, std::initializer_list<std::uint32_t> elems) {
    Bitset b(R.size());
    for (auto e : elems) b.set(e);
    return b;
}

} // namespace glr::oracle
