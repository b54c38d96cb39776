#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rstg {

// Dense square boolean matrix, one packed row of 64-bit words per vertex.
class BitMatrix {
public:
    using Word = std::uint64_t;

    BitMatrix() = default;
    explicit BitMatrix(std::size_t n)
        : n_(n), words_((n + 63) / 64), data_(n * words_, 0) {}

    std::size_t size() const { return n_; }
    std::size_t words_per_row() const { return words_; }

    bool test(std::size_t row, std::size_t col) const {
        return (data_[row * words_ + col / 64] >> (col % 64)) & 1u;
    }
    void set(std::size_t row, std::size_t col) {
        data_[row * words_ + col / 64] |= Word{1} << (col % 64);
    }
    void reset(std::size_t row, std::size_t col) {
        data_[row * words_ + col / 64] &= ~(Word{1} << (col % 64));
    }

    std::span<Word> row(std::size_t r) { return {data_.data() + r * words_, words_}; }
    std::span<const Word> row(std::size_t r) const { return {data_.data() + r * words_, words_}; }

    std::size_t row_count(std::size_t r) const {
        std::size_t c = 0;
        for (Word w : row(r)) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    // Column sums: out[c] = number of rows with bit c set.
    std::vector<std::size_t> column_counts() const {
        std::vector<std::size_t> out(n_, 0);
        for (std::size_t r = 0; r < n_; ++r) {
            auto rw = row(r);
            for (std::size_t w = 0; w < words_; ++w) {
                Word bits = rw[w];
                while (bits) {
                    out[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))]++;
                    bits &= bits - 1;
                }
            }
        }
        return out;
    }

    BitMatrix transposed() const {
        BitMatrix t(n_);
        for (std::size_t r = 0; r < n_; ++r) {
            auto rw = row(r);
            for (std::size_t w = 0; w < words_; ++w) {
                Word bits = rw[w];
                while (bits) {
                    t.set(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)), r);
                    bits &= bits - 1;
                }
            }
        }
        return t;
    }

    bool operator==(const BitMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::size_t words_ = 0;
    std::vector<Word> data_;
};

// Calls f(index) for every set bit of a packed row, ascending.
template <class F>
void for_each_bit(std::span<const BitMatrix::Word> bits, F&& f) {
    for (std::size_t w = 0; w < bits.size(); ++w) {
        BitMatrix::Word word = bits[w];
        while (word) {
            f(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
            word &= word - 1;
        }
    }
}

inline std::size_t popcount(std::span<const BitMatrix::Word> bits) {
    std::size_t c = 0;
    for (auto w : bits) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

}  // namespace rstg
