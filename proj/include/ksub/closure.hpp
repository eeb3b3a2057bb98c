#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "ksub/labeling.hpp"

namespace ksub {

// A finite set of labelings over a common [0,k]^n, stored by encoded index
// so iteration is in ascending encoded order.
class LabelingSet {
public:
    LabelingSet(std::uint32_t n, Label k) : n_(n), k_(k) {}

    std::uint32_t n() const { return n_; }
    Label k() const { return k_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    void insert(const Labeling& x);
    void insert_encoded(std::uint64_t index) { members_.insert(index); }
    bool contains(const Labeling& x) const { return members_.count(encode(x, k_)) != 0; }
    bool contains_encoded(std::uint64_t index) const { return members_.count(index) != 0; }

    const std::set<std::uint64_t>& encoded() const { return members_; }
    std::vector<Labeling> labelings() const;

    bool operator==(const LabelingSet&) const = default;

private:
    std::uint32_t n_;
    Label k_;
    std::set<std::uint64_t> members_;
};

// Least superset of a closed under the dual discriminator. Members must
// have no zero labels.
LabelingSet closure_theta(const LabelingSet& a);

// Least supersets closed under meet, respectively under meet and join.
LabelingSet closure_meet(const LabelingSet& b);
LabelingSet closure_meet_join(const LabelingSet& b);

struct ThetaTriple {
    Labeling x, y, z;
    Labeling image;  // theta(x, y, z), not a member of the input set
};

// First triple (by lexicographic order of encoded indices) whose theta image
// escapes the set, or nullopt when the set is theta-closed. By the closure
// characterization this decides whether any cost function with this domain
// admits a relaxation.
std::optional<ThetaTriple> theta_witness(const LabelingSet& a);

}  // namespace ksub
