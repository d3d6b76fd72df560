#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "config.hpp"
#include "ideal_lattice.hpp"
#include "mv_algebra.hpp"

namespace glr {

/// Additively idempotent semiring with the two negation maps; the order is
/// derived as x <= y iff x + y = y.
struct GLSemiring {
    std::uint32_t n = 0;
    std::vector<std::uint16_t> plus;  ///< n x n
    std::vector<std::uint16_t> times; ///< n x n
    std::vector<std::uint16_t> neg_minus;
    std::vector<std::uint16_t> neg_tilde;
    std::uint16_t zero = 0, one = 0;

    std::uint16_t pl(std::uint16_t x, std::uint16_t y) const { return plus[std::size_t(x) * n + y]; }
    std::uint16_t tm(std::uint16_t x, std::uint16_t y) const { return times[std::size_t(x) * n + y]; }
    bool le(std::uint16_t x, std::uint16_t y) const { return pl(x, y) == y; }

    bool same_tables(const GLSemiring& o) const {
        return n == o.n && plus == o.plus && times == o.times && neg_minus == o.neg_minus &&
               neg_tilde == o.neg_tilde && zero == o.zero && one == o.one;
    }
};

/// The semiring of ideals: plus = ideal sum, times = ideal product,
/// negations = the two annihilators, 0 = {0}, 1 = R.
GLSemiring semiring_of_ideals(const IdealLattice& L);

struct GLAxiomReport {
    std::vector<AxiomCheck> checks;
    bool all_pass = true;

    const AxiomCheck* find(const std::string& name) const {
        for (const auto& c : checks)
            if (c.name == name) return &c;
        return nullptr;
    }
};

/// Semiring axioms, the three defining clauses, and the derived laws
/// (cancellation by negation, negations of the constants, double negation,
/// lattice structure).
GLAxiomReport check_gl_axioms(const GLSemiring& S);

/// x (+) y := (y~ . x~)-.  Requires check_gl_axioms to pass.
MVTable mv_from_semiring(const GLSemiring& S, const GLAxiomReport* precomputed = nullptr);

/// plus := derived join, times := odot.
GLSemiring semiring_from_mv(const MVTable& A);

struct DualityReport {
    bool semiring_round_trip = true; ///< S(A(S)) == S
    bool mv_round_trip = true;       ///< A(S(A)) == A
    bool exact() const { return semiring_round_trip && mv_round_trip; }
};

DualityReport check_duality(const MVTable& A, const GLSemiring& S);

/// A semiring ideal of Sem(R), as a bitset over ideal ids: a nonempty subset
/// closed under + and downward closed in the derived order.
using SemiringIdeal = Bitset;

/// S(I): the semiring ideal generated by the principal ideals of elements of
/// I; for a finite lattice this is the inclusion down-set of I.
SemiringIdeal semiring_ideal_S(const IdealLattice& L, const Bitset& I);

/// S^{-1}(bold I): elements whose principal ideal lies in the semiring ideal.
Bitset semiring_ideal_Sinv(const IdealLattice& L, const SemiringIdeal& bigI);

/// All semiring ideals of Sem(R) (the principal down-sets), sorted by
/// (popcount, value) over ideal-id bitsets.
std::vector<SemiringIdeal> enumerate_semiring_ideals(const IdealLattice& L,
                                                     const RunConfig& cfg = {});

struct GaloisReport {
    bool sinv_always_ideal = true;
    bool s_of_sinv_identity = true;      ///< S(S^{-1}(I)) == I for semiring ideals
    bool sinv_of_s_identity = true;      ///< S^{-1}(S(I)) == I for ring ideals
    bool monotone = true;
    bool properness_preserved = true;    ///< I proper => S(I) proper
    std::size_t semiring_ideal_count = 0;
    bool all_pass() const {
        return sinv_always_ideal && s_of_sinv_identity && sinv_of_s_identity && monotone &&
               properness_preserved;
    }
};

GaloisReport check_galois(const IdealLattice& L, const RunConfig& cfg = {});

} // namespace glr
