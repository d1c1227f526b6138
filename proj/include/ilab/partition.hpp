#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ilab/vector.hpp"

namespace ilab {

// Ordered list of disjoint index blocks A_1, A_2, ...  Blocks are 0-based
// internally; the dyadic preset follows the 1-based convention
// A_n = {2^{n-1}, ..., 2^n - 1}, i.e. 0-based {2^{n-1}-1, ..., 2^n-2}.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<IndexSet> blocks) : blocks_(std::move(blocks)) {
        validate();
    }

    // A_1, ..., A_count of the dyadic preset.
    static Partition dyadic(std::size_t count) {
        std::vector<IndexSet> blocks;
        std::size_t lo = 1;  // 1-based start of A_1
        for (std::size_t n = 0; n < count; ++n) {
            IndexSet b;
            for (std::size_t i = lo; i < 2 * lo; ++i) b.push_back(i - 1);
            blocks.push_back(std::move(b));
            lo *= 2;
        }
        return Partition(std::move(blocks));
    }

    // consecutive blocks of the given sizes starting at index 0
    static Partition contiguous(const std::vector<std::size_t>& sizes) {
        std::vector<IndexSet> blocks;
        std::size_t at = 0;
        for (std::size_t s : sizes) {
            if (s == 0) throw std::invalid_argument("Partition: empty block");
            IndexSet b;
            for (std::size_t i = 0; i < s; ++i) b.push_back(at++);
            blocks.push_back(std::move(b));
        }
        return Partition(std::move(blocks));
    }

    std::size_t count() const { return blocks_.size(); }
    const IndexSet& block(std::size_t n) const { return blocks_.at(n); }
    const std::vector<IndexSet>& blocks() const { return blocks_; }

    // smallest dim that contains every block
    std::size_t span() const {
        std::size_t d = 0;
        for (const auto& b : blocks_)
            for (std::size_t i : b) d = std::max(d, i + 1);
        return d;
    }

    // true when the blocks exactly cover {0, ..., span-1}
    bool complete() const {
        std::vector<char> seen(span(), 0);
        for (const auto& b : blocks_)
            for (std::size_t i : b) seen[i] = 1;
        for (char c : seen)
            if (!c) return false;
        return true;
    }

private:
    void validate() const {
        std::size_t prev_max = 0;
        bool first = true;
        for (const auto& b : blocks_) {
            if (b.empty()) throw std::invalid_argument("Partition: empty block");
            for (std::size_t k = 1; k < b.size(); ++k)
                if (b[k] <= b[k - 1])
                    throw std::invalid_argument("Partition: block indices must be increasing");
            if (!first && b.front() <= prev_max)
                throw std::invalid_argument("Partition: blocks must be disjoint and ordered");
            prev_max = b.back();
            first = false;
        }
    }

    std::vector<IndexSet> blocks_;
};

}  // namespace ilab
