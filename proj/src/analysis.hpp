#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "finite_ring.hpp"
#include "gl_semiring.hpp"
#include "ideal_lattice.hpp"
#include "mv_algebra.hpp"

namespace glr {

/// A ring together with its ideal lattice; the unit of work for all checks.
struct AnalyzedRing {
    std::shared_ptr<const FiniteRing> ring;
    IdealLattice lattice;
};

AnalyzedRing analyze(const RingSpec& spec, const RunConfig& cfg = {});
AnalyzedRing analyze(std::shared_ptr<const FiniteRing> ring, const RunConfig& cfg = {});

/// I (+) J on ideal ids: (J~ . I~)-.
IdealId mv_oplus(const IdealLattice& L, IdealId i, IdealId j);

/// Minimal nonzero ideals, ascending by id.
std::vector<IdealId> lattice_atoms(const IdealLattice& L);

struct GLRReport {
    bool central_idempotent_generated = false;
    std::optional<ElementId> central_failing;

    bool an_holds = false;
    std::optional<IdealId> an_witness;
    bool co_holds = false;
    std::optional<std::pair<IdealId, IdealId>> co_witness;
    bool lr_holds = false;
    std::optional<std::pair<IdealId, IdealId>> lr_witness;

    /// The two clauses of the defining form, evaluated with both annihilators.
    bool glr1_holds = false;
    std::optional<std::pair<IdealId, IdealId>> glr1_witness;
    bool glr2_holds = false;
    std::optional<std::pair<IdealId, IdealId>> glr2_witness;

    bool is_glr = false;               ///< central + AN + CO + LR
    bool is_glr_by_definition = false; ///< central + GLR-1 + GLR-2 (must agree)

    bool double_annihilator_holds = false;
    std::optional<IdealId> double_ann_witness;
};

GLRReport check_glr(const AnalyzedRing& ar);

struct PMVReport {
    GLAxiomReport gl;
    MVAxiomReport mv_axioms;
    MVCommutativityReport commutativity;
    MVTable mv; ///< A(R), elements are ideal ids
    bool all_pass = false;
};

/// Builds A(R) and checks it is a commutative pseudo MV-algebra.
/// Requires a passing GLR report.
PMVReport check_pmv_of_ring(const AnalyzedRing& ar, const GLRReport& glr);

struct SPIRCertificate {
    IdealId maximal_ideal = -1;
    std::uint32_t nilpotency = 0;      ///< least n with M^n = {0}; 0 for the trivial ring
    std::vector<IdealId> powers;       ///< [R, M, M^2, ..., M^n = {0}]
    bool unitary = false;
};

/// Present iff the ring has a unique maximal ideal whose powers exhaust the
/// ideal list.  The trivial ring certifies with nilpotency 0 and powers [R].
std::optional<SPIRCertificate> is_spir(const AnalyzedRing& ar);

/// Both annihilators of M^k equal M^(n-k) for 1 <= k < n.
bool check_spir_annihilator_law(const SPIRCertificate& cert, const IdealLattice& L);

struct ClosureSuiteReport {
    struct Item {
        std::string description;
        bool is_glr = false;
    };
    std::vector<Item> products;
    std::vector<Item> quotients;
    bool all_glr = true;
};

/// Products (pairwise and one all-factor run under the cap) and all quotients
/// of the given GLRs are GLRs again.  Non-GLR inputs are skipped.
ClosureSuiteReport check_closure_suite(std::span<const AnalyzedRing> rings, const RunConfig& cfg);

struct InfiniteProductWitnessReport {
    struct Truncation {
        std::uint32_t k = 0;
        bool annihilator_is_complement = true; ///< I* == K (for k >= 2)
        bool lr_holds_on_triple = true;
        bool ring_is_glr = true;
    };
    std::vector<Truncation> truncations;
    std::string infinite_case_note;
    bool finite_part_holds = true;
};

/// The even/odd-support ideals of F^k satisfy the sum law for every finite k;
/// the infinite counterexample is documented, not computed.
InfiniteProductWitnessReport check_infinite_product_witness(const RunConfig& cfg = {});

struct DistributivityReport {
    bool binary_holds = true; ///< I /\ (J + K) = I /\ J + I /\ K on all triples
    std::optional<std::array<IdealId, 3>> binary_witness;
    bool family_holds = true; ///< I + /\ J_i = /\ (I + J_i)
    std::size_t families_checked = 0;
    bool exhaustive = false;
};

DistributivityReport check_distributivity(const IdealLattice& L, const RunConfig& cfg = {});

struct PrimeMaximalReport {
    std::vector<IdealId> primes;
    std::vector<IdealId> maximals;
    bool asserted = false; ///< assertion only applies to GLRs
    bool primes_are_maximal = true;
};

PrimeMaximalReport check_prime_maximal(const IdealLattice& L, const GLRReport& glr);

struct IdealSummandReport {
    IdealId summand = -1;
    bool summand_is_glr = false;
    bool complement_sum_is_ring = false; ///< M + M* = R
    GLRReport summand_report;
};

/// Materializes the ideal as a standalone ring and checks it is a GLR.
/// Requires M /\ M- = M /\ M~ = {0}; throws PreconditionFailed otherwise.
IdealSummandReport check_ideal_summand(const AnalyzedRing& ar, IdealId M, const RunConfig& cfg);

struct FinitenessUnitarityReport {
    std::size_t ideal_count = 0;
    bool mv_is_chain = false;
    bool unity_present = false;
    bool chain_implies_unitary = true;
    std::size_t atom_count = 0;
    std::size_t maximal_count = 0;
    bool atom_maximal_bijection = true; ///< M -> M* maps maximals bijectively onto atoms
};

FinitenessUnitarityReport check_finiteness_and_unitarity(const AnalyzedRing& ar,
                                                         const GLRReport& glr);

struct DecompositionFactor {
    IdealId atom = -1;
    IdealId summand = -1;    ///< R_x, the idempotent hull of the atom
    IdealId complement = -1; ///< R*_x
    std::uint32_t chain_length = 0;
    SPIRCertificate certificate; ///< of R / R*_x
    std::shared_ptr<const FiniteRing> factor_ring;
};

struct Decomposition {
    std::vector<DecompositionFactor> factors;
    /// element of R -> one element per factor ring
    std::vector<std::vector<ElementId>> canonical_map;
    bool facts_hold = false;
    bool map_is_isomorphism = false;
    bool chain_lengths_match_mv = false;
    bool certified = false;
};

/// The decomposition into unitary special primary rings, verified
/// exhaustively.  Throws GLRCheckFailed on non-GLR input and
/// CertificationFailed if any verification step fails.
Decomposition decompose(const AnalyzedRing& ar, const RunConfig& cfg = {});

struct ArtinianChainReport {
    bool unitary = false;
    bool left_chain = false;
    bool applicable = false; ///< unitary and left ideals totally ordered
    bool spir_present = false;
    bool glr_holds = false;
    bool ok = true; ///< !applicable || (spir_present && glr_holds)
};

ArtinianChainReport check_artinian_chain_criterion(const AnalyzedRing& ar,
                                                   const RunConfig& cfg = {});

} // namespace glr
