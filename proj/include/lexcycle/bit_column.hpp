#ifndef LEXCYCLE_BIT_COLUMN_HPP
#define LEXCYCLE_BIT_COLUMN_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace lexcycle {

/// Dense GF(2) vector packed into 64-bit words.
class BitColumn {
public:
    BitColumn() = default;
    explicit BitColumn(std::size_t bits) : words_((bits + 63) / 64, 0), bits_(bits) {}

    std::size_t bits() const noexcept { return bits_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void flip(std::size_t i) noexcept { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    BitColumn& operator^=(const BitColumn& other) noexcept {
        for (std::size_t w = 0; w < words_.size(); ++w) words_[w] ^= other.words_[w];
        return *this;
    }

    bool none() const noexcept {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    /// Index of the highest set bit strictly below `limit`, or -1.
    long highest_below(std::size_t limit) const noexcept {
        if (limit == 0) return -1;
        std::size_t w = (limit - 1) >> 6;
        std::uint64_t word = words_[w];
        const unsigned top = static_cast<unsigned>((limit - 1) & 63);
        if (top < 63) word &= (std::uint64_t{2} << top) - 1;
        while (true) {
            if (word) return static_cast<long>(w * 64 + 63 - std::countl_zero(word));
            if (w == 0) return -1;
            word = words_[--w];
        }
    }

    /// Index of the highest set bit, or -1 for the zero vector.
    long highest() const noexcept { return highest_below(bits_); }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t word = words_[w];
            while (word) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        for_each_set([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
        return out;
    }

    friend bool operator==(const BitColumn&, const BitColumn&) = default;

private:
    std::vector<std::uint64_t> words_;
    std::size_t bits_ = 0;
};

} // namespace lexcycle

#endif // LEXCYCLE_BIT_COLUMN_HPP
