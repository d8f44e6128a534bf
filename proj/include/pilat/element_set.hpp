#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

#ifndef PILAT_MAX_GROUND
#define PILAT_MAX_GROUND 128
#endif

namespace pilat {

using Element = int;

/// Hard cap on the ground-set size. Blocks are fixed-width bitsets of this width.
inline constexpr int kMaxGround = PILAT_MAX_GROUND;
static_assert(kMaxGround > 0 && kMaxGround % 64 == 0, "ground cap must be a multiple of 64");

/// Fixed-width set of small non-negative integers (element ids or block indices).
class ElementSet {
public:
    static constexpr int kWords = kMaxGround / 64;

    constexpr ElementSet() = default;
    ElementSet(std::initializer_list<Element> elems) {
        for (Element e : elems) insert(e);
    }

    static ElementSet range(Element first, Element last) {  // [first, last)
        ElementSet s;
        for (Element e = first; e < last; ++e) s.insert(e);
        return s;
    }

    void insert(Element e) { words_[word(e)] |= bit(e); }
    void erase(Element e) { words_[word(e)] &= ~bit(e); }
    bool contains(Element e) const { return (words_[word(e)] & bit(e)) != 0; }

    bool empty() const {
        for (auto w : words_)
            if (w != 0) return false;
        return true;
    }
    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    /// Least element, or -1 when empty.
    Element min() const {
        for (int i = 0; i < kWords; ++i)
            if (words_[i] != 0) return i * 64 + std::countr_zero(words_[i]);
        return -1;
    }
    /// Greatest element, or -1 when empty.
    Element max() const {
        for (int i = kWords - 1; i >= 0; --i)
            if (words_[i] != 0) return i * 64 + 63 - std::countl_zero(words_[i]);
        return -1;
    }

    bool subset_of(const ElementSet& other) const {
        for (int i = 0; i < kWords; ++i)
            if ((words_[i] & ~other.words_[i]) != 0) return false;
        return true;
    }
    bool intersects(const ElementSet& other) const {
        for (int i = 0; i < kWords; ++i)
            if ((words_[i] & other.words_[i]) != 0) return true;
        return false;
    }

    ElementSet& operator|=(const ElementSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] |= o.words_[i];
        return *this;
    }
    ElementSet& operator&=(const ElementSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= o.words_[i];
        return *this;
    }
    ElementSet& operator-=(const ElementSet& o) {
        for (int i = 0; i < kWords; ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
    friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
    friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }

    friend bool operator==(const ElementSet&, const ElementSet&) = default;

    template <typename F>
    void for_each(F&& fn) const {
        for (int i = 0; i < kWords; ++i) {
            auto w = words_[i];
            while (w != 0) {
                fn(i * 64 + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

    std::vector<Element> elements() const {
        std::vector<Element> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](Element e) { out.push_back(e); });
        return out;
    }

    std::size_t hash() const noexcept {
        std::size_t h = 0;
        for (auto w : words_) h = h * 0x9E3779B97F4A7C15ull ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    static int word(Element e) { return e >> 6; }
    static std::uint64_t bit(Element e) { return std::uint64_t{1} << (e & 63); }

    std::array<std::uint64_t, kWords> words_{};
};

}  // namespace pilat
