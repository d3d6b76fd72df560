#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace glr {

/// Fixed-width dynamic bitset used for element subsets (ideal masks) and
/// for subsets of ideal ids (semiring ideals).  Bit i corresponds to the
/// element/id i; the hex rendering treats the whole set as one integer
/// with bit 0 least significant.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    static Bitset single(std::size_t nbits, std::size_t bit) {
        Bitset b(nbits);
        b.set(bit);
        return b;
    }

    std::size_t size() const { return nbits_; }

    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t(1) << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    Bitset& operator|=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool operator==(const Bitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    bool is_subset_of(const Bitset& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    /// Numeric comparison of the underlying integers (most significant word first).
    static bool value_less(const Bitset& a, const Bitset& b) {
        for (std::size_t i = a.words_.size(); i-- > 0;) {
            if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
        }
        return false;
    }

    /// Enumeration order used for ideal ids: popcount first, value second.
    static bool canonical_less(const Bitset& a, const Bitset& b) {
        std::size_t ca = a.count(), cb = b.count();
        if (ca != cb) return ca < cb;
        return value_less(a, b);
    }

    template <class F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                unsigned bit = std::countr_zero(w);
                f(static_cast<std::size_t>(wi * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_indices() const {
        std::vector<std::uint32_t> out;
        out.reserve(count());
        for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
        return out;
    }

    std::string to_hex() const {
        static const char digits[] = "0123456789abcdef";
        std::string s;
        bool leading = true;
        for (std::size_t wi = words_.size(); wi-- > 0;) {
            for (int shift = 60; shift >= 0; shift -= 4) {
                unsigned nib = (words_[wi] >> shift) & 0xf;
                if (leading && nib == 0) continue;
                leading = false;
                s.push_back(digits[nib]);
            }
        }
        if (s.empty()) s = "0";
        return "0x" + s;
    }

    static Bitset from_hex(std::size_t nbits, const std::string& hex) {
        Bitset b(nbits);
        std::size_t start = hex.rfind("0x") == 0 ? 2 : 0;
        std::size_t bitpos = 0;
        for (std::size_t i = hex.size(); i-- > start; bitpos += 4) {
            char c = hex[i];
            unsigned nib = c >= '0' && c <= '9' ? unsigned(c - '0')
                         : c >= 'a' && c <= 'f' ? unsigned(c - 'a' + 10)
                         : c >= 'A' && c <= 'F' ? unsigned(c - 'A' + 10)
                                                : 0;
            for (unsigned k = 0; k < 4; ++k)
                if ((nib >> k) & 1u) b.set(bitpos + k);
        }
        return b;
    }

    struct Hash {
        std::size_t operator()(const Bitset& b) const {
            std::size_t h = b.nbits_;
            for (auto w : b.words_)
                h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            return h;
        }
    };

private:
    std::size_t nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace glr
