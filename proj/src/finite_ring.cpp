#include "finite_ring.hpp"

#include <algorithm>
#include <cstring>

#include "ideal_lattice.hpp"

namespace glr {

namespace {

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < exp; ++i) {
        if (base != 0 && r > (std::uint64_t(1) << 40) / base) return std::uint64_t(1) << 62;
        r *= base;
    }
    return r;
}

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void check_cap(std::uint64_t n, const RunConfig& cfg) {
    if (n > cfg.max_elements)
        throw Error(ErrorCode::SizeCapExceeded,
                    "ring would have " + std::to_string(n) + " elements, cap is " +
                        std::to_string(cfg.max_elements));
}

FiniteRing build_cyclic(const CyclicSpec& s, const RunConfig& cfg) {
    if (s.modulus == 0) throw Error(ErrorCode::InvalidSpec, "cyclic modulus must be positive");
    check_cap(s.modulus, cfg);
    std::uint32_t n = s.modulus;
    std::vector<ElementId> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            add[std::size_t(a) * n + b] = ElementId((a + b) % n);
            mul[std::size_t(a) * n + b] = ElementId((std::uint64_t(a) * b) % n);
        }
    return FiniteRing(n, std::move(add), std::move(mul), 0,
                      n == 1 ? std::optional<ElementId>(0) : std::optional<ElementId>(1),
                      RingSpec{s});
}

FiniteRing build_poly_quotient(const PolyQuotientSpec& s, const RunConfig& cfg) {
    if (!is_prime(s.p)) throw Error(ErrorCode::InvalidSpec, "coefficient modulus must be prime");
    std::vector<std::uint32_t> mod = s.modulus;
    for (auto& c : mod) c %= s.p;
    while (!mod.empty() && mod.back() == 0) mod.pop_back();
    if (mod.size() < 2)
        throw Error(ErrorCode::InvalidSpec, "polynomial modulus must have degree >= 1");
    const std::uint32_t p = s.p;
    const std::uint32_t deg = std::uint32_t(mod.size()) - 1;
    std::uint64_t n64 = saturating_pow(p, deg);
    check_cap(n64, cfg);
    const std::uint32_t n = std::uint32_t(n64);

    // inverse of the leading coefficient mod p
    std::uint32_t lead_inv = 1;
    for (std::uint32_t t = 1; t < p; ++t)
        if (mod.back() * t % p == 1) { lead_inv = t; break; }

    // x^k mod modulus for k = deg .. 2*deg-2
    std::vector<std::vector<std::uint32_t>> xrem;
    {
        std::vector<std::uint32_t> r(deg);
        for (std::uint32_t i = 0; i < deg; ++i)
            r[i] = (p - mod[i] % p) % p * lead_inv % p;
        xrem.push_back(r);
        for (std::uint32_t k = deg + 1; k + 1 <= 2 * deg - 1; ++k) {
            std::vector<std::uint32_t> next(deg, 0);
            const auto& prev = xrem.back();
            // multiply by x, fold the overflowing degree-deg term back in
            std::uint32_t carry = prev[deg - 1];
            for (std::uint32_t i = deg - 1; i >= 1; --i) next[i] = prev[i - 1];
            next[0] = 0;
            for (std::uint32_t i = 0; i < deg; ++i)
                next[i] = (next[i] + carry * xrem[0][i]) % p;
            xrem.push_back(next);
        }
    }

    auto decode = [&](std::uint32_t idx, std::uint32_t* c) {
        for (std::uint32_t i = 0; i < deg; ++i) {
            c[i] = idx % p;
            idx /= p;
        }
    };
    auto encode = [&](const std::uint32_t* c) {
        std::uint32_t idx = 0;
        for (std::uint32_t i = deg; i-- > 0;) idx = idx * p + c[i];
        return idx;
    };

    std::vector<ElementId> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    std::vector<std::uint32_t> ca(deg), cb(deg), sum(deg), conv(2 * deg - 1), red(deg);
    for (std::uint32_t a = 0; a < n; ++a) {
        decode(a, ca.data());
        for (std::uint32_t b = 0; b < n; ++b) {
            decode(b, cb.data());
            for (std::uint32_t i = 0; i < deg; ++i) sum[i] = (ca[i] + cb[i]) % p;
            add[std::size_t(a) * n + b] = ElementId(encode(sum.data()));

            std::fill(conv.begin(), conv.end(), 0);
            for (std::uint32_t i = 0; i < deg; ++i)
                for (std::uint32_t j = 0; j < deg; ++j)
                    conv[i + j] = (conv[i + j] + ca[i] * cb[j]) % p;
            for (std::uint32_t i = 0; i < deg; ++i) red[i] = conv[i];
            for (std::uint32_t k = deg; k < 2 * deg - 1; ++k)
                for (std::uint32_t i = 0; i < deg; ++i)
                    red[i] = (red[i] + conv[k] * xrem[k - deg][i]) % p;
            mul[std::size_t(a) * n + b] = ElementId(encode(red.data()));
        }
    }
    return FiniteRing(n, std::move(add), std::move(mul), 0, std::nullopt,
                      RingSpec{PolyQuotientSpec{p, mod}});
}

FiniteRing build_matrix(const MatrixSpec& s, const RunConfig& cfg) {
    if (s.dim == 0) throw Error(ErrorCode::InvalidSpec, "matrix dimension must be >= 1");
    if (!s.base) throw Error(ErrorCode::InvalidSpec, "matrix spec missing base ring");
    FiniteRing base = build_ring(*s.base, cfg);
    const std::uint32_t k = s.dim;
    const std::uint32_t B = base.size();
    const std::uint32_t cells = k * k;
    std::uint64_t n64 = saturating_pow(B, cells);
    check_cap(n64, cfg);
    const std::uint32_t n = std::uint32_t(n64);

    auto decode = [&](std::uint32_t idx, ElementId* m) {
        for (std::uint32_t i = 0; i < cells; ++i) {
            m[i] = ElementId(idx % B);
            idx /= B;
        }
    };
    auto encode = [&](const ElementId* m) {
        std::uint64_t idx = 0;
        for (std::uint32_t i = cells; i-- > 0;) idx = idx * B + m[i];
        return std::uint32_t(idx);
    };

    std::vector<ElementId> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    std::vector<ElementId> ma(cells), mb(cells), mc(cells);
    for (std::uint32_t a = 0; a < n; ++a) {
        decode(a, ma.data());
        for (std::uint32_t b = 0; b < n; ++b) {
            decode(b, mb.data());
            for (std::uint32_t i = 0; i < cells; ++i) mc[i] = base.add(ma[i], mb[i]);
            add[std::size_t(a) * n + b] = ElementId(encode(mc.data()));
            for (std::uint32_t r = 0; r < k; ++r)
                for (std::uint32_t c = 0; c < k; ++c) {
                    ElementId acc = base.zero();
                    for (std::uint32_t t = 0; t < k; ++t)
                        acc = base.add(acc, base.mul(ma[r * k + t], mb[t * k + c]));
                    mc[r * k + c] = acc;
                }
            mul[std::size_t(a) * n + b] = ElementId(encode(mc.data()));
        }
    }
    RingSpec prov{MatrixSpec{k, std::make_shared<RingSpec>(base.provenance())}};
    return FiniteRing(n, std::move(add), std::move(mul), 0, std::nullopt, prov);
}

FiniteRing build_table(const TableSpec& s, const RunConfig& cfg) {
    if (s.n == 0) throw Error(ErrorCode::InvalidSpec, "table ring must have at least one element");
    check_cap(s.n, cfg);
    const std::uint32_t n = s.n;
    if (s.add.size() != n || s.mul.size() != n)
        throw Error(ErrorCode::InvalidSpec, "table ring: tables must be n x n");
    std::vector<ElementId> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    for (std::uint32_t a = 0; a < n; ++a) {
        if (s.add[a].size() != n || s.mul[a].size() != n)
            throw Error(ErrorCode::InvalidSpec, "table ring: tables must be n x n");
        for (std::uint32_t b = 0; b < n; ++b) {
            if (s.add[a][b] >= n || s.mul[a][b] >= n)
                throw Error(ErrorCode::TableNotARing, "table entry out of range at (" +
                                                          std::to_string(a) + "," +
                                                          std::to_string(b) + ")");
            add[std::size_t(a) * n + b] = ElementId(s.add[a][b]);
            mul[std::size_t(a) * n + b] = ElementId(s.mul[a][b]);
        }
    }

    // locate the additive identity and inverses before the full validation pass
    std::optional<ElementId> zero;
    for (std::uint32_t e = 0; e < n && !zero; ++e) {
        bool ok = true;
        for (std::uint32_t x = 0; x < n && ok; ++x)
            ok = add[std::size_t(e) * n + x] == x && add[std::size_t(x) * n + e] == x;
        if (ok) zero = ElementId(e);
    }
    if (!zero)
        throw Error(ErrorCode::TableNotARing, "no additive identity (law add-identity)");
    for (std::uint32_t a = 0; a < n; ++a) {
        bool has_inv = false;
        for (std::uint32_t b = 0; b < n && !has_inv; ++b)
            has_inv = add[std::size_t(a) * n + b] == *zero;
        if (!has_inv)
            throw Error(ErrorCode::TableNotARing,
                        "no additive inverse for element " + std::to_string(a) +
                            " (law add-inverse)");
    }

    FiniteRing ring(n, std::move(add), std::move(mul), *zero, std::nullopt, RingSpec{s});
    if (auto w = validate_ring(ring)) {
        throw Error(ErrorCode::TableNotARing,
                    "law " + w->law + " fails at (" + std::to_string(w->a) + "," +
                        std::to_string(w->b) + "," + std::to_string(w->c) + ")");
    }
    return ring;
}

FiniteRing with_unity(FiniteRing ring) {
    // rebuild with the detected unity recorded
    auto u = find_unity(ring);
    if (!u) return ring;
    const std::uint32_t n = ring.size();
    std::vector<ElementId> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            add[std::size_t(a) * n + b] = ring.add(ElementId(a), ElementId(b));
            mul[std::size_t(a) * n + b] = ring.mul(ElementId(a), ElementId(b));
        }
    return FiniteRing(n, std::move(add), std::move(mul), ring.zero(), u, ring.provenance());
}

} // namespace

FiniteRing::FiniteRing(std::uint32_t n, std::vector<ElementId> add, std::vector<ElementId> mul,
                       ElementId zero, std::optional<ElementId> unity, RingSpec provenance)
    : n_(n), add_(std::move(add)), mul_(std::move(mul)), neg_(n, 0), zero_(zero),
      unity_(unity), provenance_(std::move(provenance)) {
    for (std::uint32_t a = 0; a < n_; ++a) {
        bool found = false;
        for (std::uint32_t b = 0; b < n_; ++b)
            if (add_[std::size_t(a) * n_ + b] == zero_) {
                neg_[a] = ElementId(b);
                found = true;
                break;
            }
        if (!found)
            throw Error(ErrorCode::TableNotARing,
                        "no additive inverse for element " + std::to_string(a));
    }
}

std::uint64_t spec_size(const RingSpec& spec) {
    return std::visit(
        [](const auto& s) -> std::uint64_t {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CyclicSpec>) {
                return s.modulus;
            } else if constexpr (std::is_same_v<T, PolyQuotientSpec>) {
                std::size_t deg = s.modulus.empty() ? 0 : s.modulus.size() - 1;
                return saturating_pow(s.p, deg);
            } else if constexpr (std::is_same_v<T, MatrixSpec>) {
                return s.base ? saturating_pow(spec_size(*s.base), std::uint64_t(s.dim) * s.dim)
                              : 0;
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                std::uint64_t n = 1;
                for (const auto& f : s.factors) {
                    n = saturating_pow(spec_size(f), 1) * n;
                    if (n > (std::uint64_t(1) << 40)) return std::uint64_t(1) << 62;
                }
                return n;
            } else if constexpr (std::is_same_v<T, QuotientSpec>) {
                return s.base ? spec_size(*s.base) : 0; // upper bound
            } else {
                return s.n;
            }
        },
        spec.node);
}

FiniteRing build_ring(const RingSpec& spec, const RunConfig& cfg) {
    return std::visit(
        [&](const auto& s) -> FiniteRing {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CyclicSpec>) {
                return build_cyclic(s, cfg);
            } else if constexpr (std::is_same_v<T, PolyQuotientSpec>) {
                return with_unity(build_poly_quotient(s, cfg));
            } else if constexpr (std::is_same_v<T, MatrixSpec>) {
                return with_unity(build_matrix(s, cfg));
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                if (s.factors.empty())
                    throw Error(ErrorCode::InvalidSpec, "product needs at least one factor");
                std::vector<FiniteRing> factors;
                factors.reserve(s.factors.size());
                std::uint64_t total = 1;
                for (const auto& f : s.factors) {
                    total *= std::max<std::uint64_t>(spec_size(f), 1);
                    check_cap(total, cfg);
                    factors.push_back(build_ring(f, cfg));
                }
                return product_of_rings(factors, cfg);
            } else if constexpr (std::is_same_v<T, QuotientSpec>) {
                if (!s.base) throw Error(ErrorCode::InvalidSpec, "quotient spec missing base ring");
                FiniteRing base = build_ring(*s.base, cfg);
                std::vector<ElementId> gens;
                for (auto g : s.generators) {
                    if (g >= base.size())
                        throw Error(ErrorCode::InvalidSpec,
                                    "quotient generator " + std::to_string(g) +
                                        " out of range for base of size " +
                                        std::to_string(base.size()));
                    gens.push_back(ElementId(g));
                }
                Bitset ideal = closure(base, gens, ClosureRule::TwoSided);
                return quotient_ring(base, ideal).ring;
            } else {
                return with_unity(build_table(s, cfg));
            }
        },
        spec.node);
}

std::optional<RingAxiomWitness> validate_ring(const FiniteRing& R) {
    const std::uint32_t n = R.size();
    for (std::uint32_t a = 0; a < n; ++a) {
        if (R.add(ElementId(a), R.zero()) != a)
            return RingAxiomWitness{"add-identity", ElementId(a)};
        if (R.add(ElementId(a), R.neg(ElementId(a))) != R.zero())
            return RingAxiomWitness{"add-inverse", ElementId(a)};
        if (R.unity()) {
            ElementId u = *R.unity();
            if (R.mul(u, ElementId(a)) != a || R.mul(ElementId(a), u) != a)
                return RingAxiomWitness{"unity", ElementId(a)};
        }
    }
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b)
            if (R.add(ElementId(a), ElementId(b)) != R.add(ElementId(b), ElementId(a)))
                return RingAxiomWitness{"add-commutativity", ElementId(a), ElementId(b)};
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) {
            ElementId ab = R.add(ElementId(a), ElementId(b));
            ElementId mab = R.mul(ElementId(a), ElementId(b));
            for (std::uint32_t c = 0; c < n; ++c) {
                if (R.add(ab, ElementId(c)) != R.add(ElementId(a), R.add(ElementId(b), ElementId(c))))
                    return RingAxiomWitness{"add-associativity", ElementId(a), ElementId(b), ElementId(c)};
                if (R.mul(mab, ElementId(c)) != R.mul(ElementId(a), R.mul(ElementId(b), ElementId(c))))
                    return RingAxiomWitness{"mul-associativity", ElementId(a), ElementId(b), ElementId(c)};
                if (R.mul(ElementId(a), R.add(ElementId(b), ElementId(c))) !=
                    R.add(mab, R.mul(ElementId(a), ElementId(c))))
                    return RingAxiomWitness{"left-distributivity", ElementId(a), ElementId(b), ElementId(c)};
                if (R.mul(ab, ElementId(c)) !=
                    R.add(R.mul(ElementId(a), ElementId(c)), R.mul(ElementId(b), ElementId(c))))
                    return RingAxiomWitness{"right-distributivity", ElementId(a), ElementId(b), ElementId(c)};
            }
        }
    return std::nullopt;
}

std::optional<ElementId> find_unity(const FiniteRing& R) {
    const std::uint32_t n = R.size();
    for (std::uint32_t e = 0; e < n; ++e) {
        bool ok = true;
        for (std::uint32_t x = 0; x < n && ok; ++x)
            ok = R.mul(ElementId(e), ElementId(x)) == x && R.mul(ElementId(x), ElementId(e)) == x;
        if (ok) return ElementId(e);
    }
    return std::nullopt;
}

CentralIdempotentReport is_central_idempotent_generated(const FiniteRing& R) {
    const std::uint32_t n = R.size();
    std::vector<ElementId> centrals;
    for (std::uint32_t e = 0; e < n; ++e) {
        if (R.mul(ElementId(e), ElementId(e)) != e) continue;
        bool central = true;
        for (std::uint32_t r = 0; r < n && central; ++r)
            central = R.mul(ElementId(e), ElementId(r)) == R.mul(ElementId(r), ElementId(e));
        if (central) centrals.push_back(ElementId(e));
    }
    CentralIdempotentReport rep;
    rep.witness_map.assign(n, 0);
    for (std::uint32_t x = 0; x < n; ++x) {
        bool found = false;
        for (ElementId e : centrals)
            if (R.mul(e, ElementId(x)) == x) {
                rep.witness_map[x] = e;
                found = true;
                break;
            }
        if (!found) {
            rep.holds = false;
            rep.failing = ElementId(x);
            rep.witness_map.clear();
            return rep;
        }
    }
    rep.holds = true;
    return rep;
}

bool is_ideal_mask(const FiniteRing& R, const Bitset& mask) {
    if (mask.size() != R.size() || !mask.test(R.zero())) return false;
    bool ok = true;
    mask.for_each([&](std::size_t a) {
        if (!ok) return;
        if (!mask.test(R.neg(ElementId(a)))) { ok = false; return; }
        mask.for_each([&](std::size_t b) {
            if (ok && !mask.test(R.add(ElementId(a), ElementId(b)))) ok = false;
        });
        for (std::uint32_t r = 0; r < R.size() && ok; ++r)
            if (!mask.test(R.mul(ElementId(r), ElementId(a))) ||
                !mask.test(R.mul(ElementId(a), ElementId(r))))
                ok = false;
    });
    return ok;
}

QuotientResult quotient_ring(const FiniteRing& R, const Bitset& ideal) {
    if (!is_ideal_mask(R, ideal))
        throw Error(ErrorCode::NotAnIdeal, "mask is not a two-sided ideal");
    const std::uint32_t n = R.size();
    const ElementId unassigned = ElementId(0xffff);
    std::vector<ElementId> proj(n, unassigned);
    std::vector<ElementId> reps;
    for (std::uint32_t x = 0; x < n; ++x) {
        if (proj[x] != unassigned) continue;
        ElementId id = ElementId(reps.size());
        reps.push_back(ElementId(x));
        ideal.for_each([&](std::size_t i) { proj[R.add(ElementId(x), ElementId(i))] = id; });
    }
    const std::uint32_t m = std::uint32_t(reps.size());
    std::vector<ElementId> add(std::size_t(m) * m), mul(std::size_t(m) * m);
    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < m; ++b) {
            add[std::size_t(a) * m + b] = proj[R.add(reps[a], reps[b])];
            mul[std::size_t(a) * m + b] = proj[R.mul(reps[a], reps[b])];
        }
    RingSpec prov{QuotientSpec{std::make_shared<RingSpec>(R.provenance()),
                               [&] {
                                   std::vector<std::uint32_t> gens;
                                   for (ElementId g : subgroup_generators(R, ideal))
                                       gens.push_back(g);
                                   return gens;
                               }()}};
    FiniteRing q(m, std::move(add), std::move(mul), proj[R.zero()], std::nullopt, prov);
    return QuotientResult{with_unity(std::move(q)), std::move(proj)};
}

FiniteRing product_of_rings(std::span<const FiniteRing> factors, const RunConfig& cfg) {
    if (factors.empty()) return build_ring(RingSpec{CyclicSpec{1}}, cfg);
    std::uint64_t n64 = 1;
    for (const auto& f : factors) {
        n64 *= f.size();
        check_cap(n64, cfg);
    }
    const std::uint32_t n = std::uint32_t(n64);
    const std::size_t k = factors.size();
    std::vector<ElementId> da(k), db(k), dc(k);
    auto decode = [&](std::uint32_t idx, std::vector<ElementId>& d) {
        for (std::size_t i = 0; i < k; ++i) {
            d[i] = ElementId(idx % factors[i].size());
            idx /= factors[i].size();
        }
    };
    auto encode = [&](const std::vector<ElementId>& d) {
        std::uint64_t idx = 0;
        for (std::size_t i = k; i-- > 0;) idx = idx * factors[i].size() + d[i];
        return std::uint32_t(idx);
    };
    std::vector<ElementId> add(std::size_t(n) * n), mul(std::size_t(n) * n);
    for (std::uint32_t a = 0; a < n; ++a) {
        decode(a, da);
        for (std::uint32_t b = 0; b < n; ++b) {
            decode(b, db);
            for (std::size_t i = 0; i < k; ++i) dc[i] = factors[i].add(da[i], db[i]);
            add[std::size_t(a) * n + b] = ElementId(encode(dc));
            for (std::size_t i = 0; i < k; ++i) dc[i] = factors[i].mul(da[i], db[i]);
            mul[std::size_t(a) * n + b] = ElementId(encode(dc));
        }
    }
    ProductSpec prov;
    for (const auto& f : factors) prov.factors.push_back(f.provenance());
    return with_unity(FiniteRing(n, std::move(add), std::move(mul), 0, std::nullopt,
                                 RingSpec{std::move(prov)}));
}

FiniteRing subring(const FiniteRing& R, const Bitset& mask) {
    if (!is_ideal_mask(R, mask))
        throw Error(ErrorCode::NotAnIdeal, "subring restriction expects an ideal mask");
    std::vector<ElementId> elems;
    mask.for_each([&](std::size_t i) { elems.push_back(ElementId(i)); });
    const std::uint32_t m = std::uint32_t(elems.size());
    std::vector<ElementId> pos(R.size(), 0);
    for (std::uint32_t i = 0; i < m; ++i) pos[elems[i]] = ElementId(i);
    TableSpec prov;
    prov.n = m;
    prov.add.assign(m, std::vector<std::uint32_t>(m));
    prov.mul.assign(m, std::vector<std::uint32_t>(m));
    std::vector<ElementId> add(std::size_t(m) * m), mul(std::size_t(m) * m);
    for (std::uint32_t a = 0; a < m; ++a)
        for (std::uint32_t b = 0; b < m; ++b) {
            ElementId s = pos[R.add(elems[a], elems[b])];
            ElementId p = pos[R.mul(elems[a], elems[b])];
            add[std::size_t(a) * m + b] = s;
            mul[std::size_t(a) * m + b] = p;
            prov.add[a][b] = s;
            prov.mul[a][b] = p;
        }
    return with_unity(
        FiniteRing(m, std::move(add), std::move(mul), pos[R.zero()], std::nullopt,
                   RingSpec{std::move(prov)}));
}

bool spec_equal(const RingSpec& a, const RingSpec& b) {
    if (a.node.index() != b.node.index()) return false;
    return std::visit(
        [&](const auto& x) -> bool {
            using T = std::decay_t<decltype(x)>;
            const auto& y = std::get<T>(b.node);
            if constexpr (std::is_same_v<T, CyclicSpec>) {
                return x.modulus == y.modulus;
            } else if constexpr (std::is_same_v<T, PolyQuotientSpec>) {
                return x.p == y.p && x.modulus == y.modulus;
            } else if constexpr (std::is_same_v<T, MatrixSpec>) {
                return x.dim == y.dim && x.base && y.base && spec_equal(*x.base, *y.base);
            } else if constexpr (std::is_same_v<T, ProductSpec>) {
                if (x.factors.size() != y.factors.size()) return false;
                for (std::size_t i = 0; i < x.factors.size(); ++i)
                    if (!spec_equal(x.factors[i], y.factors[i])) return false;
                return true;
            } else if constexpr (std::is_same_v<T, QuotientSpec>) {
                return x.generators == y.generators && x.base && y.base &&
                       spec_equal(*x.base, *y.base);
            } else {
                return x.n == y.n && x.add == y.add && x.mul == y.mul;
            }
        },
        a.node);
}

} // namespace glr
