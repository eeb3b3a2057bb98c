#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "ksub/errors.hpp"

namespace ksub {

using Label = std::uint32_t;

// Default cell budget: (k+1)^n may not exceed 2^26 unless overridden.
inline constexpr std::uint64_t kDefaultMaxCells = std::uint64_t(1) << 26;

// A point of [0,k]^n. Label 0 is the neutral "unassigned" element; input
// files use 1..k for fully labeled points.
class Labeling {
public:
    Labeling() = default;
    explicit Labeling(std::vector<Label> labels) : labels_(std::move(labels)) {}
    Labeling(std::initializer_list<Label> labels) : labels_(labels) {}

    static Labeling zeros(std::size_t n) { return Labeling(std::vector<Label>(n, 0)); }

    std::size_t size() const { return labels_.size(); }
    Label operator[](std::size_t i) const { return labels_[i]; }
    Label& operator[](std::size_t i) { return labels_[i]; }
    const std::vector<Label>& labels() const { return labels_; }

    bool operator==(const Labeling&) const = default;
    auto operator<=>(const Labeling&) const = default;

private:
    std::vector<Label> labels_;
};

// Componentwise: x_i where x and y agree, 0 where they differ.
Labeling meet(const Labeling& x, const Labeling& y);

// Componentwise: agreement keeps the label, a conflict of two nonzero labels
// gives 0, and 0 absorbs into the other argument.
Labeling join(const Labeling& x, const Labeling& y);

// Dual discriminator, extended componentwise: x_i on agreement of x and y,
// else z_i. Only defined for strictly positive labels.
Labeling theta(const Labeling& x, const Labeling& y, const Labeling& z);

// Number of coordinates equal to 0 (the elimination level of the point).
int zero_count(const Labeling& x);

// Mixed-radix bijection [0,k]^n <-> [0, (k+1)^n): index = sum x_j (k+1)^(j-1).
std::uint64_t encode(const Labeling& x, Label k);
Labeling decode(std::uint64_t index, std::size_t n, Label k);

// (k+1)^n, or a SizeGuardError if it exceeds max_cells.
std::uint64_t checked_cube_size(std::size_t n, Label k, std::uint64_t max_cells = kDefaultMaxCells);

// "(1,2,0)" -- used by reports and witnesses.
std::string format_labeling(const Labeling& x);

}  // namespace ksub
