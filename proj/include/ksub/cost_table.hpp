#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ksub/labeling.hpp"
#include "ksub/value.hpp"

namespace ksub {

// PositiveOnly tables live on [k]^n (no zero labels); Full tables on [0,k]^n.
enum class TableKind { PositiveOnly, Full };

// Sparse cost function keyed by encoded index; an absent key means +inf.
// Stored values are always finite. Iteration over entries is in ascending
// encoded order, which keeps witnesses and printed files deterministic.
class CostTable {
public:
    CostTable(std::uint32_t n, Label k, TableKind kind,
              std::uint64_t max_cells = kDefaultMaxCells)
        : n_(n), k_(k), kind_(kind), max_cells_(max_cells),
          cells_(checked_cube_size(n, k, max_cells)) {
        if (n == 0 || k == 0)
            throw std::invalid_argument("cost table requires n >= 1 and k >= 1");
    }

    std::uint32_t n() const { return n_; }
    Label k() const { return k_; }
    TableKind kind() const { return kind_; }
    std::uint64_t cells() const { return cells_; }
    std::uint64_t max_cells() const { return max_cells_; }

    // Number of finite entries.
    std::size_t dom_size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    void set(const Labeling& x, const Rational& v) { set_encoded(check_key(x), v); }
    void set_encoded(std::uint64_t index, const Rational& v) { entries_[index] = v; }

    bool contains(const Labeling& x) const { return entries_.count(encode(x, k_)) != 0; }
    bool contains_encoded(std::uint64_t index) const { return entries_.count(index) != 0; }

    CostValue value(const Labeling& x) const { return value_encoded(encode(x, k_)); }
    CostValue value_encoded(std::uint64_t index) const {
        auto it = entries_.find(index);
        return it == entries_.end() ? CostValue::infinity() : CostValue(it->second);
    }

    const std::map<std::uint64_t, Rational>& entries() const { return entries_; }

    std::vector<Labeling> dom_labelings() const {
        std::vector<Labeling> out;
        out.reserve(entries_.size());
        for (const auto& [index, v] : entries_)
            out.push_back(decode(index, n_, k_));
        return out;
    }

    bool operator==(const CostTable& o) const {
        return n_ == o.n_ && k_ == o.k_ && kind_ == o.kind_ && entries_ == o.entries_;
    }

private:
    std::uint64_t check_key(const Labeling& x) const {
        if (x.size() != n_)
            throw std::invalid_argument("labeling length " + std::to_string(x.size()) +
                                        " does not match table n = " + std::to_string(n_));
        if (kind_ == TableKind::PositiveOnly)
            for (std::size_t i = 0; i < x.size(); ++i)
                if (x[i] == 0)
                    throw std::invalid_argument(
                        "zero label in a positive-only table at " + format_labeling(x));
        return encode(x, k_);
    }

    std::uint32_t n_;
    Label k_;
    TableKind kind_;
    std::uint64_t max_cells_;
    std::uint64_t cells_;
    std::map<std::uint64_t, Rational> entries_;
};

}  // namespace ksub
