#include "ksub/closure.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "ksub/kernels.hpp"

namespace ksub {

void LabelingSet::insert(const Labeling& x) {
    if (x.size() != n_)
        throw std::invalid_argument("labeling length does not match the set's n");
    members_.insert(encode(x, k_));
}

std::vector<Labeling> LabelingSet::labelings() const {
    std::vector<Labeling> out;
    out.reserve(members_.size());
    for (std::uint64_t index : members_)
        out.push_back(decode(index, n_, k_));
    return out;
}

namespace {

using detail::PackedKernel;

// Two interchangeable element representations for the fixpoint loops: packed
// nibbles when they fit, encoded indices (decoded per operation) otherwise.
// Both order identically, digit by digit, so sorted scans agree.
struct PackedRep {
    std::size_t n;
    Label k;
    std::uint64_t from(std::uint64_t enc) const {
        return PackedKernel::pack(decode(enc, n, k));
    }
    std::uint64_t to_enc(std::uint64_t v) const { return PackedKernel::encode(v, n, k); }
    std::uint64_t meet(std::uint64_t a, std::uint64_t b) const { return PackedKernel::meet(a, b); }
    std::uint64_t join(std::uint64_t a, std::uint64_t b) const { return PackedKernel::join(a, b); }
    std::uint64_t theta(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
        return PackedKernel::theta(a, b, c);
    }
};

struct GenericRep {
    std::size_t n;
    Label k;
    std::uint64_t from(std::uint64_t enc) const { return enc; }
    std::uint64_t to_enc(std::uint64_t v) const { return v; }
    std::uint64_t meet(std::uint64_t a, std::uint64_t b) const {
        return encode(ksub::meet(decode(a, n, k), decode(b, n, k)), Label(k));
    }
    std::uint64_t join(std::uint64_t a, std::uint64_t b) const {
        return encode(ksub::join(decode(a, n, k), decode(b, n, k)), Label(k));
    }
    std::uint64_t theta(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
        return encode(ksub::theta(decode(a, n, k), decode(b, n, k), decode(c, n, k)), Label(k));
    }
};

template <class Rep>
std::vector<std::uint64_t> initial_members(const Rep& rep, const LabelingSet& s) {
    std::vector<std::uint64_t> out;
    out.reserve(s.size());
    for (std::uint64_t enc : s.encoded())
        out.push_back(rep.from(enc));
    return out;
}

template <class Rep>
LabelingSet to_set(const Rep& rep, const LabelingSet& proto,
                   const std::vector<std::uint64_t>& members) {
    LabelingSet out(proto.n(), proto.k());
    for (std::uint64_t v : members)
        out.insert_encoded(rep.to_enc(v));
    return out;
}

// Grows `all` until it is closed under the binary images produced by
// `apply`; each unordered pair is visited exactly once.
template <class Apply>
void pair_fixpoint(std::vector<std::uint64_t>& all, Apply&& apply) {
    std::unordered_set<std::uint64_t> seen(all.begin(), all.end());
    auto add = [&](std::uint64_t v) {
        if (seen.insert(v).second) all.push_back(v);
    };
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j <= i; ++j)
            apply(all[i], all[j], add);
}

// Same idea for the ternary theta: every ordered triple whose newest element
// is all[i] is visited while i is the frontier.
template <class Rep>
void theta_fixpoint(const Rep& rep, std::vector<std::uint64_t>& all) {
    std::unordered_set<std::uint64_t> seen(all.begin(), all.end());
    auto add = [&](std::uint64_t v) {
        if (seen.insert(v).second) all.push_back(v);
    };
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            for (std::size_t l = 0; l <= i; ++l) {
                add(rep.theta(all[i], all[j], all[l]));
                add(rep.theta(all[j], all[i], all[l]));
                add(rep.theta(all[j], all[l], all[i]));
            }
        }
    }
}

void require_positive(const LabelingSet& a, const char* op) {
    const std::uint64_t radix = std::uint64_t(a.k()) + 1;
    for (std::uint64_t enc : a.encoded()) {
        std::uint64_t v = enc;
        for (std::uint32_t i = 0; i < a.n(); ++i) {
            if (v % radix == 0)
                throw std::invalid_argument(std::string(op) +
                                            " requires members without zero labels");
            v /= radix;
        }
    }
}

template <class Rep>
LabelingSet closure_meet_impl(const Rep& rep, const LabelingSet& b, bool with_join) {
    auto all = initial_members(rep, b);
    pair_fixpoint(all, [&](std::uint64_t x, std::uint64_t y, auto& add) {
        add(rep.meet(x, y));
        if (with_join) add(rep.join(x, y));
    });
    return to_set(rep, b, all);
}

template <class Rep>
LabelingSet closure_theta_impl(const Rep& rep, const LabelingSet& a) {
    auto all = initial_members(rep, a);
    theta_fixpoint(rep, all);
    return to_set(rep, a, all);
}

template <class Rep>
std::optional<ThetaTriple> theta_witness_impl(const Rep& rep, const LabelingSet& a) {
    std::vector<std::uint64_t> members = initial_members(rep, a);
    std::sort(members.begin(), members.end());  // digit order matches encoded order
    std::unordered_set<std::uint64_t> seen(members.begin(), members.end());
    for (std::uint64_t x : members)
        for (std::uint64_t y : members)
            for (std::uint64_t z : members) {
                const std::uint64_t img = rep.theta(x, y, z);
                if (!seen.count(img)) {
                    const std::size_t n = a.n();
                    const Label k = a.k();
                    return ThetaTriple{decode(rep.to_enc(x), n, k), decode(rep.to_enc(y), n, k),
                                       decode(rep.to_enc(z), n, k),
                                       decode(rep.to_enc(img), n, k)};
                }
            }
    return std::nullopt;
}

}  // namespace

LabelingSet closure_theta(const LabelingSet& a) {
    require_positive(a, "closure_theta");
    if (PackedKernel::usable(a.n(), a.k()))
        return closure_theta_impl(PackedRep{a.n(), a.k()}, a);
    return closure_theta_impl(GenericRep{a.n(), a.k()}, a);
}

LabelingSet closure_meet(const LabelingSet& b) {
    if (PackedKernel::usable(b.n(), b.k()))
        return closure_meet_impl(PackedRep{b.n(), b.k()}, b, false);
    return closure_meet_impl(GenericRep{b.n(), b.k()}, b, false);
}

LabelingSet closure_meet_join(const LabelingSet& b) {
    if (PackedKernel::usable(b.n(), b.k()))
        return closure_meet_impl(PackedRep{b.n(), b.k()}, b, true);
    return closure_meet_impl(GenericRep{b.n(), b.k()}, b, true);
}

std::optional<ThetaTriple> theta_witness(const LabelingSet& a) {
    require_positive(a, "theta_witness");
    if (PackedKernel::usable(a.n(), a.k()))
        return theta_witness_impl(PackedRep{a.n(), a.k()}, a);
    return theta_witness_impl(GenericRep{a.n(), a.k()}, a);
}

}  // namespace ksub
