#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "bitset.hpp"
#include "config.hpp"
#include "finite_ring.hpp"

namespace glr {

using IdealId = std::int32_t;

/// Which multiplications the closure is taken under, in addition to the
/// additive subgroup structure.
enum class ClosureRule { AdditiveOnly, LeftIdeal, TwoSided };

/// Smallest subset containing the seeds that is an additive subgroup and is
/// closed under the rule's multiplications.
Bitset closure(const FiniteRing& ring, std::span<const ElementId> seeds, ClosureRule rule);

/// Additive subgroup generated by the seed mask.
Bitset additive_closure(const FiniteRing& ring, const Bitset& seed);

/// Greedy additive generating set of a subgroup mask (ascending element order).
std::vector<ElementId> subgroup_generators(const FiniteRing& ring, const Bitset& subgroup);

Bitset principal_ideal(const FiniteRing& ring, ElementId x);
Bitset principal_left_ideal(const FiniteRing& ring, ElementId x);

Bitset ideal_sum(const FiniteRing& ring, const Bitset& I, const Bitset& J);
Bitset ideal_product(const FiniteRing& ring, const Bitset& I, const Bitset& J);
Bitset ideal_intersection(const Bitset& I, const Bitset& J);

/// The set {x : I x = 0}.
Bitset right_annihilator(const FiniteRing& ring, const Bitset& I);
/// The set {x : x I = 0}.
Bitset left_annihilator(const FiniteRing& ring, const Bitset& I);

Bitset ideal_power(const FiniteRing& ring, const Bitset& I, std::uint32_t k);

/// All two-sided ideals of a finite ring with the full operation tables.
///
/// Ideal ids index the list sorted by (popcount, bitset value); id 0 is {0}
/// and the last id is the whole ring.
class IdealLattice {
public:
    IdealLattice(std::shared_ptr<const FiniteRing> ring, std::vector<Bitset> ideals,
                 std::vector<IdealId> principal_of_element);

    const FiniteRing& ring() const { return *ring_; }
    std::shared_ptr<const FiniteRing> ring_ptr() const { return ring_; }

    std::size_t count() const { return ideals_.size(); }
    const Bitset& ideal(IdealId i) const { return ideals_[std::size_t(i)]; }
    const std::vector<Bitset>& ideals() const { return ideals_; }

    IdealId bottom() const { return 0; }
    IdealId top() const { return IdealId(ideals_.size()) - 1; }

    IdealId sum(IdealId i, IdealId j) const { return sum_[idx(i, j)]; }
    IdealId product(IdealId i, IdealId j) const { return product_[idx(i, j)]; }
    IdealId intersection(IdealId i, IdealId j) const { return meet_[idx(i, j)]; }
    IdealId left_ann(IdealId i) const { return left_ann_[std::size_t(i)]; }
    IdealId right_ann(IdealId i) const { return right_ann_[std::size_t(i)]; }
    bool leq(IdealId i, IdealId j) const { return leq_[idx(i, j)] != 0; }

    IdealId power(IdealId i, std::uint32_t k) const;

    /// Id of an exact mask; -1 when the mask is not an ideal of the ring.
    IdealId id_of(const Bitset& mask) const;

    /// Smallest ideal containing the mask.
    IdealId smallest_superideal(const Bitset& mask) const;

    /// Id of the two-sided ideal generated by an element.
    IdealId principal(ElementId x) const { return principal_of_element_[x]; }

private:
    std::size_t idx(IdealId i, IdealId j) const {
        return std::size_t(i) * ideals_.size() + std::size_t(j);
    }

    std::shared_ptr<const FiniteRing> ring_;
    std::vector<Bitset> ideals_;
    std::vector<IdealId> principal_of_element_;
    std::vector<IdealId> sum_, product_, meet_;
    std::vector<IdealId> left_ann_, right_ann_;
    std::vector<std::uint8_t> leq_;
};

/// Join-closure enumeration of all two-sided ideals.
IdealLattice enumerate_ideals(std::shared_ptr<const FiniteRing> ring, const RunConfig& cfg = {});

/// All left ideals, sorted by (popcount, value).
std::vector<Bitset> enumerate_left_ideals(const FiniteRing& ring, const RunConfig& cfg = {});

bool is_left_chain_ring(const FiniteRing& ring, const RunConfig& cfg = {});

std::vector<IdealId> maximal_ideals(const IdealLattice& L);
std::vector<IdealId> prime_ideals(const IdealLattice& L);

/// Pairs (lower, upper) of the covering relation of the inclusion order.
std::vector<std::pair<IdealId, IdealId>> covering_relation(const IdealLattice& L);

} // namespace glr
