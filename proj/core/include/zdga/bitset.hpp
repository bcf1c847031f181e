#ifndef ZDGA_BITSET_HPP
#define ZDGA_BITSET_HPP

#include <bit>
#include <cstdint>
#include <vector>

#include "zdga/errors.hpp"

namespace zdga {

/// Fixed-width dynamic bitset over vertex positions. All alliance
/// predicates reduce to popcounts of word-wise intersections.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int size)
        : size_(size), words_((size + 63) / 64, 0) {}

    int size() const { return size_; }

    bool test(int i) const {
        check_index(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i) {
        check_index(i);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }

    void reset(int i) {
        check_index(i);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    /// |this ∩ other| without materializing the intersection.
    int intersection_count(const Bitset& other) const {
        check_width(other);
        int c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += std::popcount(words_[i] & other.words_[i]);
        return c;
    }

    bool intersects(const Bitset& other) const {
        check_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& other) const {
        check_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    Bitset& operator|=(const Bitset& other) {
        check_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
        return *this;
    }

    Bitset& operator&=(const Bitset& other) {
        check_width(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
        return *this;
    }

    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    /// Complement within the fixed width.
    Bitset complement() const {
        Bitset r(size_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            r.words_[i] = ~words_[i];
        r.trim();
        return r;
    }

    bool operator==(const Bitset& other) const {
        return size_ == other.size_ && words_ == other.words_;
    }

    /// First set bit, or -1 if empty.
    int first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<int>(i * 64 + std::countr_zero(words_[i]));
        return -1;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int bit = std::countr_zero(w);
                f(static_cast<int>(i * 64 + bit));
                w &= w - 1;
            }
        }
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(count());
        for_each([&](int v) { out.push_back(v); });
        return out;
    }

    static Bitset full(int size) {
        Bitset r(size);
        for (auto& w : r.words_) w = ~std::uint64_t{0};
        r.trim();
        return r;
    }

    static Bitset from_indices(int size, const std::vector<int>& indices) {
        Bitset r(size);
        for (int i : indices) r.set(i);
        return r;
    }

    std::uint64_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (auto w : words_) {
            h ^= w;
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    void trim() {
        if (size_ % 64 != 0 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    void check_index(int i) const {
        if (i < 0 || i >= size_)
            throw IndexError("bit index " + std::to_string(i) + " out of range [0, " +
                             std::to_string(size_) + ")");
    }

    void check_width(const Bitset& other) const {
        if (size_ != other.size_)
            throw IndexError("bitset width mismatch: " + std::to_string(size_) + " vs " +
                             std::to_string(other.size_));
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace zdga

#endif
