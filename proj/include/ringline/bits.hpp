#pragma once

#include <cstdint>
#include <vector>

namespace ringline {

// Square bit matrix with packed rows; row operations (subset/equality tests,
// intersection counts) run a word at a time.
class BitMatrix {
public:
    BitMatrix() : n_(0), words_(0) {}
    explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), data_(static_cast<size_t>(n) * words_, 0) {}

    int size() const { return n_; }

    bool get(int r, int c) const {
        return (data_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(int r, int c) {
        data_[static_cast<size_t>(r) * words_ + c / 64] |= std::uint64_t(1) << (c % 64);
    }

    const std::uint64_t* row(int r) const { return data_.data() + static_cast<size_t>(r) * words_; }

    bool row_subset(int r, int s) const {  // row r subset of row s
        const std::uint64_t* a = row(r);
        const std::uint64_t* b = row(s);
        for (int w = 0; w < words_; ++w)
            if (a[w] & ~b[w]) return false;
        return true;
    }

    bool rows_equal(int r, int s) const {
        const std::uint64_t* a = row(r);
        const std::uint64_t* b = row(s);
        for (int w = 0; w < words_; ++w)
            if (a[w] != b[w]) return false;
        return true;
    }

    long long intersect_count(int r, int s) const {
        const std::uint64_t* a = row(r);
        const std::uint64_t* b = row(s);
        long long c = 0;
        for (int w = 0; w < words_; ++w) c += __builtin_popcountll(a[w] & b[w]);
        return c;
    }

    long long row_count(int r) const {
        const std::uint64_t* a = row(r);
        long long c = 0;
        for (int w = 0; w < words_; ++w) c += __builtin_popcountll(a[w]);
        return c;
    }

    // Elements of the intersection of rows r and s, ascending.
    std::vector<int> intersect_elements(int r, int s) const {
        std::vector<int> out;
        const std::uint64_t* a = row(r);
        const std::uint64_t* b = row(s);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t m = a[w] & b[w];
            while (m) {
                int bit = __builtin_ctzll(m);
                out.push_back(w * 64 + bit);
                m &= m - 1;
            }
        }
        return out;
    }

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> data_;
};

// Flat bit set over element indices, used for ideal/unit masks.
class BitSet {
public:
    BitSet() : n_(0) {}
    explicit BitSet(int n) : n_(n), data_((n + 63) / 64, 0) {}

    int size() const { return n_; }
    bool get(int i) const { return (data_[i / 64] >> (i % 64)) & 1u; }
    void set(int i) { data_[i / 64] |= std::uint64_t(1) << (i % 64); }

    bool intersects(const BitSet& other) const {
        for (size_t w = 0; w < data_.size(); ++w)
            if (data_[w] & other.data_[w]) return true;
        return false;
    }

private:
    int n_;
    std::vector<std::uint64_t> data_;
};

}  // namespace ringline
