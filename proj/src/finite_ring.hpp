#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "bitset.hpp"
#include "config.hpp"
#include "errors.hpp"

namespace glr {

/// Index into a ring's element list; only meaningful relative to that ring.
using ElementId = std::uint16_t;

struct RingSpec;

/// Z/nZ.
struct CyclicSpec {
    std::uint32_t modulus = 0;
};

/// GF(p)[x] / (modulus); coefficients low degree first, leading one nonzero.
struct PolyQuotientSpec {
    std::uint32_t p = 0;
    std::vector<std::uint32_t> modulus;
};

/// dim x dim matrices over the base ring.
struct MatrixSpec {
    std::uint32_t dim = 0;
    std::shared_ptr<const RingSpec> base;
};

/// Direct product, componentwise operations.
struct ProductSpec {
    std::vector<RingSpec> factors;
};

/// base / (two-sided ideal generated by the listed element indices).
struct QuotientSpec {
    std::shared_ptr<const RingSpec> base;
    std::vector<std::uint32_t> generators;
};

/// Explicit Cayley tables; validated against all ring axioms before use.
struct TableSpec {
    std::uint32_t n = 0;
    std::vector<std::vector<std::uint32_t>> add;
    std::vector<std::vector<std::uint32_t>> mul;
};

struct RingSpec {
    std::variant<CyclicSpec, PolyQuotientSpec, MatrixSpec, ProductSpec, QuotientSpec, TableSpec> node;
};

bool spec_equal(const RingSpec& a, const RingSpec& b);

/// A finite ring as dense operation tables.  Immutable after construction;
/// safe to share across threads.
class FiniteRing {
public:
    FiniteRing(std::uint32_t n, std::vector<ElementId> add, std::vector<ElementId> mul,
               ElementId zero, std::optional<ElementId> unity, RingSpec provenance);

    std::uint32_t size() const { return n_; }
    ElementId add(ElementId a, ElementId b) const { return add_[std::size_t(a) * n_ + b]; }
    ElementId mul(ElementId a, ElementId b) const { return mul_[std::size_t(a) * n_ + b]; }
    ElementId neg(ElementId a) const { return neg_[a]; }
    ElementId zero() const { return zero_; }
    const std::optional<ElementId>& unity() const { return unity_; }
    const RingSpec& provenance() const { return provenance_; }

private:
    std::uint32_t n_;
    std::vector<ElementId> add_, mul_;
    std::vector<ElementId> neg_;
    ElementId zero_;
    std::optional<ElementId> unity_;
    RingSpec provenance_;
};

/// First ring-axiom violation found by the exhaustive validator.
struct RingAxiomWitness {
    std::string law;
    ElementId a = 0, b = 0, c = 0;
};

/// Exhaustively checks every ring axiom on all element triples/pairs.
std::optional<RingAxiomWitness> validate_ring(const FiniteRing& ring);

/// Number of elements the spec would produce, with overflow saturation.
std::uint64_t spec_size(const RingSpec& spec);

FiniteRing build_ring(const RingSpec& spec, const RunConfig& cfg = {});

std::optional<ElementId> find_unity(const FiniteRing& ring);

struct CentralIdempotentReport {
    bool holds = false;
    /// Per element x: a central idempotent e with e*x = x (when holds).
    std::vector<ElementId> witness_map;
    /// Element with no such idempotent (when !holds).
    std::optional<ElementId> failing;
};

CentralIdempotentReport is_central_idempotent_generated(const FiniteRing& ring);

struct QuotientResult {
    FiniteRing ring;
    /// Surjective ring homomorphism: element of the source -> element of the quotient.
    std::vector<ElementId> projection;
};

/// Quotient by a validated two-sided ideal; coset representatives are the
/// minimum element index per coset, numbered in ascending representative order.
QuotientResult quotient_ring(const FiniteRing& ring, const Bitset& ideal);

FiniteRing product_of_rings(std::span<const FiniteRing> factors, const RunConfig& cfg = {});

/// The ideal mask materialized as a standalone ring (tables restricted to the mask).
FiniteRing subring(const FiniteRing& ring, const Bitset& mask);

/// True when the mask is a two-sided ideal of the ring.
bool is_ideal_mask(const FiniteRing& ring, const Bitset& mask);

} // namespace glr
