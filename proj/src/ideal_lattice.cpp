#include "ideal_lattice.hpp"

#include <algorithm>
#include <unordered_set>

namespace glr {

namespace {

/// Grow the subgroup S (in place) to S + <g>.
void expand_by(const FiniteRing& R, Bitset& S, ElementId g) {
    if (S.test(g)) return;
    Bitset orig = S;
    ElementId m = g;
    while (!orig.test(m)) {
        orig.for_each([&](std::size_t s) { S.set(R.add(ElementId(s), m)); });
        m = R.add(m, g);
    }
}

} // namespace

Bitset closure(const FiniteRing& R, std::span<const ElementId> seeds, ClosureRule rule) {
    Bitset S(R.size());
    S.set(R.zero());
    std::vector<ElementId> pending;
    auto insert = [&](ElementId g) {
        if (S.test(g)) return;
        expand_by(R, S, g);
        pending.push_back(g);
    };
    for (ElementId s : seeds) insert(s);
    while (!pending.empty()) {
        ElementId g = pending.back();
        pending.pop_back();
        for (std::uint32_t r = 0; r < R.size(); ++r) {
            if (rule != ClosureRule::AdditiveOnly) insert(R.mul(ElementId(r), g));
            if (rule == ClosureRule::TwoSided) insert(R.mul(g, ElementId(r)));
        }
    }
    return S;
}

Bitset additive_closure(const FiniteRing& R, const Bitset& seed) {
    Bitset S(R.size());
    S.set(R.zero());
    seed.for_each([&](std::size_t g) { expand_by(R, S, ElementId(g)); });
    return S;
}

std::vector<ElementId> subgroup_generators(const FiniteRing& R, const Bitset& subgroup) {
    std::vector<ElementId> gens;
    Bitset S(R.size());
    S.set(R.zero());
    subgroup.for_each([&](std::size_t g) {
        if (!S.test(g)) {
            expand_by(R, S, ElementId(g));
            gens.push_back(ElementId(g));
        }
    });
    return gens;
}

Bitset principal_ideal(const FiniteRing& R, ElementId x) {
    ElementId seeds[1] = {x};
    return closure(R, seeds, ClosureRule::TwoSided);
}

Bitset principal_left_ideal(const FiniteRing& R, ElementId x) {
    ElementId seeds[1] = {x};
    return closure(R, seeds, ClosureRule::LeftIdeal);
}

Bitset ideal_sum(const FiniteRing& R, const Bitset& I, const Bitset& J) {
    return additive_closure(R, I | J);
}

Bitset ideal_product(const FiniteRing& R, const Bitset& I, const Bitset& J) {
    // Products of additive generators additively generate I*J; the additive
    // closure of the pairwise products is already a two-sided ideal.
    std::vector<ElementId> gi = subgroup_generators(R, I);
    std::vector<ElementId> gj = subgroup_generators(R, J);
    Bitset seed(R.size());
    seed.set(R.zero());
    for (ElementId a : gi)
        for (ElementId b : gj) seed.set(R.mul(a, b));
    return additive_closure(R, seed);
}

Bitset ideal_intersection(const Bitset& I, const Bitset& J) { return I & J; }

Bitset right_annihilator(const FiniteRing& R, const Bitset& I) {
    std::vector<ElementId> gens = subgroup_generators(R, I);
    Bitset out(R.size());
    for (std::uint32_t x = 0; x < R.size(); ++x) {
        bool killed = true;
        for (ElementId g : gens)
            if (R.mul(g, ElementId(x)) != R.zero()) {
                killed = false;
                break;
            }
        if (killed) out.set(x);
    }
    return out;
}

Bitset left_annihilator(const FiniteRing& R, const Bitset& I) {
    std::vector<ElementId> gens = subgroup_generators(R, I);
    Bitset out(R.size());
    for (std::uint32_t x = 0; x < R.size(); ++x) {
        bool killed = true;
        for (ElementId g : gens)
            if (R.mul(ElementId(x), g) != R.zero()) {
                killed = false;
                break;
            }
        if (killed) out.set(x);
    }
    return out;
}

Bitset ideal_power(const FiniteRing& R, const Bitset& I, std::uint32_t k) {
    if (k == 0) {
        Bitset all(R.size());
        for (std::uint32_t x = 0; x < R.size(); ++x) all.set(x);
        return all;
    }
    Bitset acc = I;
    for (std::uint32_t i = 1; i < k; ++i) acc = ideal_product(R, acc, I);
    return acc;
}

IdealLattice::IdealLattice(std::shared_ptr<const FiniteRing> ring, std::vector<Bitset> ideals,
                           std::vector<IdealId> principal_of_element)
    : ring_(std::move(ring)), ideals_(std::move(ideals)),
      principal_of_element_(std::move(principal_of_element)) {
    const std::size_t m = ideals_.size();
    leq_.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            leq_[i * m + j] = ideals_[i].is_subset_of(ideals_[j]) ? 1 : 0;

    sum_.assign(m * m, 0);
    product_.assign(m * m, 0);
    meet_.assign(m * m, 0);
    left_ann_.assign(m, 0);
    right_ann_.assign(m, 0);

    std::vector<std::vector<ElementId>> gens(m);
    for (std::size_t i = 0; i < m; ++i) gens[i] = subgroup_generators(*ring_, ideals_[i]);

    const FiniteRing& R = *ring_;
    for (std::size_t i = 0; i < m; ++i) {
        left_ann_[i] = id_of(left_annihilator(R, ideals_[i]));
        right_ann_[i] = id_of(right_annihilator(R, ideals_[i]));
        if (left_ann_[i] < 0 || right_ann_[i] < 0)
            throw Error(ErrorCode::CertificationFailed, "annihilator is not an ideal");
        for (std::size_t j = 0; j < m; ++j) {
            meet_[i * m + j] = id_of(ideals_[i] & ideals_[j]);
            sum_[i * m + j] = smallest_superideal(ideals_[i] | ideals_[j]);
            Bitset prods(R.size());
            prods.set(R.zero());
            for (ElementId a : gens[i])
                for (ElementId b : gens[j]) prods.set(R.mul(a, b));
            product_[i * m + j] = smallest_superideal(prods);
            if (meet_[i * m + j] < 0 || sum_[i * m + j] < 0 || product_[i * m + j] < 0)
                throw Error(ErrorCode::CertificationFailed, "ideal table entry not in lattice");
        }
    }
}

IdealId IdealLattice::id_of(const Bitset& mask) const {
    auto it = std::lower_bound(ideals_.begin(), ideals_.end(), mask, Bitset::canonical_less);
    if (it != ideals_.end() && *it == mask) return IdealId(it - ideals_.begin());
    return -1;
}

IdealId IdealLattice::smallest_superideal(const Bitset& mask) const {
    for (std::size_t i = 0; i < ideals_.size(); ++i)
        if (mask.is_subset_of(ideals_[i])) return IdealId(i);
    return -1;
}

IdealId IdealLattice::power(IdealId i, std::uint32_t k) const {
    if (k == 0) return top();
    IdealId acc = i;
    for (std::uint32_t t = 1; t < k; ++t) acc = product(acc, i);
    return acc;
}

namespace {

std::vector<Bitset> join_closure(const FiniteRing& R, std::vector<Bitset> seeds,
                                 std::uint32_t cap, const char* what) {
    std::unordered_set<Bitset, Bitset::Hash> seen(seeds.begin(), seeds.end());
    std::vector<Bitset> work(seeds.begin(), seeds.end());
    if (work.size() > cap)
        throw Error(ErrorCode::IdealCountCapExceeded,
                    std::string(what) + " count exceeds cap " + std::to_string(cap));
    for (std::size_t i = 0; i < work.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            if (work[j].is_subset_of(work[i]) || work[i].is_subset_of(work[j])) continue;
            Bitset s = additive_closure(R, work[i] | work[j]);
            if (seen.insert(s).second) {
                work.push_back(std::move(s));
                if (work.size() > cap)
                    throw Error(ErrorCode::IdealCountCapExceeded,
                                std::string(what) + " count exceeds cap " + std::to_string(cap));
            }
        }
    }
    std::sort(work.begin(), work.end(), Bitset::canonical_less);
    return work;
}

} // namespace

IdealLattice enumerate_ideals(std::shared_ptr<const FiniteRing> ring, const RunConfig& cfg) {
    const FiniteRing& R = *ring;
    std::vector<Bitset> seeds;
    std::vector<Bitset> principal(R.size(), Bitset{});
    std::unordered_set<Bitset, Bitset::Hash> seen;
    Bitset zero_ideal(R.size());
    zero_ideal.set(R.zero());
    seeds.push_back(zero_ideal);
    seen.insert(zero_ideal);
    for (std::uint32_t x = 0; x < R.size(); ++x) {
        principal[x] = principal_ideal(R, ElementId(x));
        if (seen.insert(principal[x]).second) seeds.push_back(principal[x]);
    }
    std::vector<Bitset> all = join_closure(R, std::move(seeds), cfg.max_ideals, "ideal");

    std::vector<IdealId> principal_ids(R.size(), -1);
    for (std::uint32_t x = 0; x < R.size(); ++x) {
        auto it = std::lower_bound(all.begin(), all.end(), principal[x], Bitset::canonical_less);
        principal_ids[x] = IdealId(it - all.begin());
    }
    return IdealLattice(std::move(ring), std::move(all), std::move(principal_ids));
}

std::vector<Bitset> enumerate_left_ideals(const FiniteRing& R, const RunConfig& cfg) {
    std::vector<Bitset> seeds;
    std::unordered_set<Bitset, Bitset::Hash> seen;
    Bitset zero_ideal(R.size());
    zero_ideal.set(R.zero());
    seeds.push_back(zero_ideal);
    seen.insert(zero_ideal);
    for (std::uint32_t x = 0; x < R.size(); ++x) {
        Bitset p = principal_left_ideal(R, ElementId(x));
        if (seen.insert(p).second) seeds.push_back(std::move(p));
    }
    return join_closure(R, std::move(seeds), cfg.max_ideals, "left ideal");
}

bool is_left_chain_ring(const FiniteRing& R, const RunConfig& cfg) {
    std::vector<Bitset> left = enumerate_left_ideals(R, cfg);
    for (std::size_t i = 0; i < left.size(); ++i)
        for (std::size_t j = i + 1; j < left.size(); ++j)
            if (!left[i].is_subset_of(left[j]) && !left[j].is_subset_of(left[i])) return false;
    return true;
}

std::vector<IdealId> maximal_ideals(const IdealLattice& L) {
    std::vector<IdealId> out;
    const IdealId top = L.top();
    for (IdealId i = 0; i < IdealId(L.count()); ++i) {
        if (i == top) continue;
        bool maximal = true;
        for (IdealId j = 0; j < IdealId(L.count()) && maximal; ++j)
            if (j != i && j != top && L.leq(i, j)) maximal = false;
        if (maximal) out.push_back(i);
    }
    return out;
}

std::vector<IdealId> prime_ideals(const IdealLattice& L) {
    std::vector<IdealId> out;
    const IdealId top = L.top();
    const IdealId m = IdealId(L.count());
    for (IdealId p = 0; p < m; ++p) {
        if (p == top) continue;
        bool prime = true;
        for (IdealId a = 0; a < m && prime; ++a)
            for (IdealId b = 0; b < m && prime; ++b)
                if (L.leq(L.product(a, b), p) && !L.leq(a, p) && !L.leq(b, p)) prime = false;
        if (prime) out.push_back(p);
    }
    return out;
}

std::vector<std::pair<IdealId, IdealId>> covering_relation(const IdealLattice& L) {
    std::vector<std::pair<IdealId, IdealId>> out;
    const IdealId m = IdealId(L.count());
    for (IdealId lo = 0; lo < m; ++lo)
        for (IdealId hi = 0; hi < m; ++hi) {
            if (lo == hi || !L.leq(lo, hi)) continue;
            bool covers = true;
            for (IdealId mid = 0; mid < m && covers; ++mid)
                if (mid != lo && mid != hi && L.leq(lo, mid) && L.leq(mid, hi)) covers = false;
            if (covers) out.emplace_back(lo, hi);
        }
    return out;
}

} // namespace glr
