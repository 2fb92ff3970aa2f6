#pragma once

// Packed n x n bit matrix; row u holds a membership bitmask over vertices.
// Intersection sizes run through the dispatched popcount kernel.

#include <cstdint>
#include <vector>

#include "mmcc/kernels.hpp"

namespace mmcc {

class BitRows {
  public:
    BitRows() = default;
    explicit BitRows(int n)
        : n_(n), words_(static_cast<std::size_t>((n + 63) / 64)),
          bits_(static_cast<std::size_t>(n) * words_, 0) {}

    int n() const { return n_; }
    std::size_t words() const { return words_; }
    bool empty() const { return bits_.empty(); }

    void set(int u, int v) {
        bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |=
            1ULL << (static_cast<unsigned>(v) % 64);
    }

    bool test(int u, int v) const {
        return (bits_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >>
                (static_cast<unsigned>(v) % 64)) & 1ULL;
    }

    const std::uint64_t* row(int u) const {
        return bits_.data() + static_cast<std::size_t>(u) * words_;
    }

    std::uint64_t intersect_count(int u, int v) const {
        return kernels::and_popcount(row(u), row(v), words_);
    }

  private:
    int n_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace mmcc
