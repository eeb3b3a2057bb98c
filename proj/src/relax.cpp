#include "ksub/relax.hpp"

#include <algorithm>
#include <cassert>
#include <climits>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "ksub/kernels.hpp"

namespace ksub {

namespace {

using detail::PackedKernel;

constexpr long kInf64 = LONG_MAX;
constexpr std::uint64_t kDenseBlockCellLimit = std::uint64_t(1) << 18;

struct Int64Overflow {};

// ---------------------------------------------------------------------------
// Value policies. The scaled-int64 policy works on values multiplied by
// lcm(denominators) * 2^n, which keeps every level's arithmetic integral
// (averages at level i are divisible by 2^(n-i)); overflow bails out to the
// exact policy.
// ---------------------------------------------------------------------------

struct Int64Values {
    using V = long;
    static V avg(V a, V b) {
        V s;
        if (__builtin_add_overflow(a, b, &s)) throw Int64Overflow{};
        assert(s % 2 == 0);
        return s / 2;
    }
    static V combine(V a, V b, V c) {
        V s, t;
        if (__builtin_add_overflow(a, b, &s) || __builtin_sub_overflow(s, c, &t))
            throw Int64Overflow{};
        return t;
    }
    static bool less(V a, V b) { return a < b; }
};

struct ExactValues {
    using V = Rational;
    static V avg(const V& a, const V& b) { return Rational((a + b) / 2); }
    static V combine(const V& a, const V& b, const V& c) { return Rational(a + b - c); }
    static bool less(const V& a, const V& b) { return a < b; }
};

// ---------------------------------------------------------------------------
// Key policies: packed nibble keys when they fit, encoded indices otherwise.
// Both order keys exactly like encoded indices (digit by digit), so sorted
// member scans visit pairs in ascending (enc x, enc y) order either way.
// ---------------------------------------------------------------------------

struct PackedKeys {
    std::size_t n;
    Label k;
    std::uint64_t active;

    PackedKeys(std::size_t n_, Label k_)
        : n(n_), k(k_), active(PackedKernel::active_mask(n_)) {}

    std::uint64_t from_enc(std::uint64_t enc) const {
        return PackedKernel::pack(decode(enc, n, k));
    }
    std::uint64_t to_enc(std::uint64_t key) const { return PackedKernel::encode(key, n, k); }
    std::uint64_t meet(std::uint64_t a, std::uint64_t b) const { return PackedKernel::meet(a, b); }
    std::uint64_t join(std::uint64_t a, std::uint64_t b) const { return PackedKernel::join(a, b); }
    int zcount(std::uint64_t key) const { return PackedKernel::zero_count(key, active); }
};

struct GenericKeys {
    std::size_t n;
    Label k;

    GenericKeys(std::size_t n_, Label k_) : n(n_), k(k_) {}

    std::uint64_t from_enc(std::uint64_t enc) const { return enc; }
    std::uint64_t to_enc(std::uint64_t key) const { return key; }
    std::uint64_t meet(std::uint64_t a, std::uint64_t b) const {
        return encode(ksub::meet(decode(a, n, k), decode(b, n, k)), k);
    }
    std::uint64_t join(std::uint64_t a, std::uint64_t b) const {
        return encode(ksub::join(decode(a, n, k), decode(b, n, k)), k);
    }
    int zcount(std::uint64_t key) const {
        const std::uint64_t radix = std::uint64_t(k) + 1;
        int z = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (key % radix == 0) ++z;
            key /= radix;
        }
        return z;
    }
};

struct MissingJoinEnc {
    std::uint64_t x, y, join;  // encoded indices, enc x < enc y
};

// ---------------------------------------------------------------------------
// Pair-scan engine. Members are kept sorted by key; at level i every pair of
// current members is scanned and fires when its meet has exactly i zeros.
// Points inserted at level i join the scan from level i+1 on, which matches
// the snapshot semantics: a pair whose members both live at level i can only
// meet at level i when the members coincide.
// ---------------------------------------------------------------------------

template <class Keys, class Vals>
std::variant<std::vector<std::pair<std::uint64_t, typename Vals::V>>, MissingJoinEnc>
run_pair_scan(const Keys& keys, std::size_t n,
              const std::vector<std::pair<std::uint64_t, typename Vals::V>>& init) {
    using V = typename Vals::V;
    struct Member {
        std::uint64_t key;
        V value;
    };

    std::vector<Member> members;
    members.reserve(init.size());
    std::unordered_map<std::uint64_t, V> store;
    store.reserve(init.size() * 2);
    for (const auto& [enc, v] : init) {
        const std::uint64_t key = keys.from_enc(enc);
        members.push_back({key, v});
        store.emplace(key, v);
    }
    std::sort(members.begin(), members.end(),
              [](const Member& a, const Member& b) { return a.key < b.key; });

    std::vector<std::uint64_t> fresh;
    for (int level = 1; level <= int(n); ++level) {
        fresh.clear();
        const std::size_t m = members.size();
        for (std::size_t a = 0; a < m; ++a) {
            for (std::size_t b = a + 1; b < m; ++b) {
                const std::uint64_t mk = keys.meet(members[a].key, members[b].key);
                if (keys.zcount(mk) != level) continue;
                const std::uint64_t jk = keys.join(members[a].key, members[b].key);
                V cand;
                if (mk == jk) {
                    cand = Vals::avg(members[a].value, members[b].value);
                } else {
                    auto it = store.find(jk);
                    if (it == store.end())
                        return MissingJoinEnc{keys.to_enc(members[a].key),
                                              keys.to_enc(members[b].key), keys.to_enc(jk)};
                    cand = Vals::combine(members[a].value, members[b].value, it->second);
                }
                auto [slot, inserted] = store.try_emplace(mk, cand);
                if (inserted)
                    fresh.push_back(mk);
                else if (Vals::less(cand, slot->second))
                    slot->second = cand;
            }
        }
        if (!fresh.empty()) {
            std::sort(fresh.begin(), fresh.end());
            const std::size_t old = members.size();
            for (std::uint64_t key : fresh)
                members.push_back({key, store.find(key)->second});
            std::inplace_merge(members.begin(), members.begin() + old, members.end(),
                               [](const Member& a, const Member& b) { return a.key < b.key; });
        }
    }

    std::vector<std::pair<std::uint64_t, V>> out;
    out.reserve(store.size());
    for (const auto& member : members)
        out.emplace_back(keys.to_enc(member.key), member.value);
    return out;
}

// ---------------------------------------------------------------------------
// Dense block engine (scaled int64, packed keys, cube materialized). The
// coordinates are split into a low and a high half; half-pattern pairs are
// bucketed by how many coordinates agree on a nonzero label. A pair fires at
// level i exactly when its total agreement is n - i, so combining one low
// bucket with one high bucket enumerates precisely the firing pairs of a
// level -- no scan is wasted, and all value accesses stay within four
// low-half-sized rows of the cube.
// ---------------------------------------------------------------------------

struct HalfPatterns {
    std::uint32_t count = 0;
    std::vector<int> nonzeros;
    struct Pair {
        std::uint32_t a, b, meet, join;
    };
    // pairs[t]: pattern pairs whose nonzero agreement is exactly t
    std::vector<std::vector<Pair>> ordered;   // a != b, both orders, plus the diagonal a == b
    std::vector<std::vector<Pair>> less;      // a < b only
    std::vector<std::vector<Pair>> distinct;  // a < b plus diagonal (used for the high half)
};

HalfPatterns build_half(std::size_t coords, Label k, bool low_half) {
    HalfPatterns h;
    h.count = std::uint32_t(checked_cube_size(coords, k, kDenseBlockCellLimit));
    const std::uint64_t active = PackedKernel::active_mask(coords);
    std::vector<std::uint64_t> packed(h.count);
    h.nonzeros.resize(h.count);
    for (std::uint32_t p = 0; p < h.count; ++p) {
        packed[p] = PackedKernel::pack(decode(p, coords, k));
        h.nonzeros[p] = int(coords) - PackedKernel::zero_count(packed[p], active);
    }
    h.ordered.assign(coords + 1, {});
    h.less.assign(coords + 1, {});
    h.distinct.assign(coords + 1, {});
    for (std::uint32_t a = 0; a < h.count; ++a) {
        for (std::uint32_t b = 0; b < h.count; ++b) {
            const int agree = PackedKernel::agree_count(packed[a], packed[b], active);
            const std::uint32_t meet =
                std::uint32_t(PackedKernel::encode(PackedKernel::meet(packed[a], packed[b]),
                                                   coords, k));
            const std::uint32_t join =
                std::uint32_t(PackedKernel::encode(PackedKernel::join(packed[a], packed[b]),
                                                   coords, k));
            HalfPatterns::Pair entry{a, b, meet, join};
            if (low_half) {
                h.ordered[agree].push_back(entry);
                if (a < b) h.less[agree].push_back(entry);
            } else if (a <= b) {
                h.distinct[agree].push_back(entry);
            }
        }
    }
    return h;
}

struct DenseFail {
    bool failed = false;
    std::uint64_t x = 0, y = 0, join = 0;

    void record(std::uint64_t ex, std::uint64_t ey, std::uint64_t ej) {
        if (ex > ey) std::swap(ex, ey);
        if (!failed || ex < x || (ex == x && ey < y)) {
            failed = true;
            x = ex;
            y = ey;
            join = ej;
        }
    }
};

std::variant<std::vector<long>, MissingJoinEnc> run_dense_block(
    std::size_t n, Label k, std::uint64_t cells,
    const std::vector<std::pair<std::uint64_t, long>>& init) {
    const std::size_t n_lo = (n + 1) / 2;
    const std::size_t n_hi = n - n_lo;
    HalfPatterns lo = build_half(n_lo, k, true);
    HalfPatterns hi = build_half(n_hi, k, false);
    const std::uint64_t stride = lo.count;

    std::vector<long> val(cells, kInf64);
    for (const auto& [enc, v] : init) val[enc] = v;
    std::vector<long> cand(cells, kInf64);

    for (int level = 1; level <= int(n); ++level) {
        std::fill(cand.begin(), cand.end(), kInf64);
        DenseFail fail;
        const int want = int(n) - level;  // total nonzero agreement of firing pairs

        auto process = [&](std::uint64_t x, std::uint64_t y, std::uint64_t meet,
                           std::uint64_t join) {
            const long a = val[x];
            if (a == kInf64) return;
            const long b = val[y];
            if (b == kInf64) return;
            long c;
            if (meet == join) {
                c = Int64Values::avg(a, b);
            } else {
                const long j = val[join];
                if (j == kInf64) {
                    fail.record(x, y, join);
                    return;
                }
                c = Int64Values::combine(a, b, j);
            }
            if (c < cand[meet]) cand[meet] = c;
        };

        for (std::size_t hi_agree = 0; hi_agree <= n_hi; ++hi_agree) {
            const int lo_agree = want - int(hi_agree);
            if (lo_agree < 0 || lo_agree > int(n_lo)) continue;
            for (const auto& hp : hi.distinct[hi_agree]) {
                const std::uint64_t base_a = std::uint64_t(hp.a) * stride;
                const std::uint64_t base_b = std::uint64_t(hp.b) * stride;
                const std::uint64_t base_m = std::uint64_t(hp.meet) * stride;
                const std::uint64_t base_j = std::uint64_t(hp.join) * stride;
                // hp.a == hp.b contributes pairs within one row: restrict to
                // lp.a < lp.b so each unordered pair appears exactly once.
                const auto& bucket =
                    (hp.a == hp.b) ? lo.less[lo_agree] : lo.ordered[lo_agree];
                for (const auto& lp : bucket)
                    process(base_a + lp.a, base_b + lp.b, base_m + lp.meet, base_j + lp.join);
            }
        }

        if (fail.failed) return MissingJoinEnc{fail.x, fail.y, fail.join};
        for (std::uint64_t cell = 0; cell < cells; ++cell) {
            if (cand[cell] != kInf64) {
                assert(val[cell] == kInf64);
                val[cell] = cand[cell];
            }
        }
    }
    return val;
}

// ---------------------------------------------------------------------------
// Scaling of input values into int64.
// ---------------------------------------------------------------------------

struct ScaledInput {
    bool fits = false;
    mpz_class scale;  // lcm(denominators) * 2^n
    std::vector<std::pair<std::uint64_t, long>> entries;
};

ScaledInput scale_input(const CostTable& f) {
    ScaledInput s;
    mpz_class lcm = 1;
    for (const auto& [enc, v] : f.entries())
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    s.scale = lcm << f.n();
    s.entries.reserve(f.dom_size());
    for (const auto& [enc, v] : f.entries()) {
        mpz_class scaled = v.get_num() * (s.scale / v.get_den());
        if (!scaled.fits_slong_p()) return s;
        // leave headroom so level arithmetic rarely needs the exact fallback
        if (scaled > LONG_MAX / 8 || scaled < LONG_MIN / 8) return s;
        s.entries.emplace_back(enc, scaled.get_si());
    }
    s.fits = true;
    return s;
}

std::vector<std::pair<std::uint64_t, Rational>> exact_input(const CostTable& f) {
    std::vector<std::pair<std::uint64_t, Rational>> out;
    out.reserve(f.dom_size());
    for (const auto& [enc, v] : f.entries()) out.emplace_back(enc, v);
    return out;
}

MissingJoinWitness decode_missing_join(const MissingJoinEnc& w, std::size_t n, Label k) {
    return MissingJoinWitness{decode(w.x, n, k), decode(w.y, n, k), decode(w.join, n, k)};
}

Relaxed finish(const CostTable& f, std::vector<std::pair<std::uint64_t, Rational>> values) {
    CostTable g(f.n(), f.k(), TableKind::Full, f.max_cells());
    bool half_integral = true;
    bool nonnegative = true;
    mpz_class scaling = 1;
    for (auto& [enc, v] : values) {
        if (v.get_den() > 2) half_integral = false;
        if (v < 0) nonnegative = false;
        mpz_lcm(scaling.get_mpz_t(), scaling.get_mpz_t(), v.get_den().get_mpz_t());
        g.set_encoded(enc, v);
    }
    return Relaxed{std::move(g), half_integral, nonnegative, scaling};
}

RelaxationOutcome run_exact(const CostTable& f) {
    auto init = exact_input(f);
    std::variant<std::vector<std::pair<std::uint64_t, Rational>>, MissingJoinEnc> result =
        PackedKernel::usable(f.n(), f.k())
            ? run_pair_scan<PackedKeys, ExactValues>(PackedKeys(f.n(), f.k()), f.n(), init)
            : run_pair_scan<GenericKeys, ExactValues>(GenericKeys(f.n(), f.k()), f.n(), init);
    if (auto* fail = std::get_if<MissingJoinEnc>(&result))
        return NotExtendable{decode_missing_join(*fail, f.n(), f.k())};
    return finish(f, std::move(std::get<0>(result)));
}

std::uint64_t positive_cells(const CostTable& f) {
    std::uint64_t cells = 1;
    for (std::uint32_t i = 0; i < f.n(); ++i) {
        if (cells > f.cells()) break;
        cells *= f.k();
    }
    return cells;
}

}  // namespace

RelaxationOutcome relax(const CostTable& f, const RelaxOptions& options) {
    if (f.kind() != TableKind::PositiveOnly)
        throw std::invalid_argument("relax expects a positive-only table");

    if (options.preflight_theta) {
        LabelingSet dom(f.n(), f.k());
        for (const auto& [enc, v] : f.entries()) dom.insert_encoded(enc);
        if (auto escape = theta_witness(dom))
            return NotExtendable{ThetaEscapeWitness{escape->x, escape->y, escape->z,
                                                    escape->image}};
    }

    if (f.empty())
        return finish(f, {});

    const bool packed = PackedKernel::usable(f.n(), f.k());
    ScaledInput scaled;
    bool want_int64 = options.values != ValueMode::Exact;
    if (want_int64) {
        scaled = scale_input(f);
        if (!scaled.fits) {
            if (options.values == ValueMode::ScaledInt64)
                throw std::invalid_argument("values do not fit the scaled int64 path");
            want_int64 = false;
        }
    }

    bool dense = false;
    if (options.engine == RelaxEngine::DenseBlock) {
        if (!packed || !want_int64 || f.n() < 2 || f.cells() > kDenseBlockCellLimit)
            throw std::invalid_argument("dense block engine unavailable for this table");
        dense = true;
    } else if (options.engine == RelaxEngine::Auto) {
        dense = packed && want_int64 && f.n() >= 2 && f.cells() <= kDenseBlockCellLimit &&
                f.dom_size() * 4 >= positive_cells(f);
    }

    if (want_int64) {
        try {
            if (dense) {
                auto result = run_dense_block(f.n(), f.k(), f.cells(), scaled.entries);
                if (auto* fail = std::get_if<MissingJoinEnc>(&result))
                    return NotExtendable{decode_missing_join(*fail, f.n(), f.k())};
                const auto& val = std::get<0>(result);
                std::vector<std::pair<std::uint64_t, Rational>> values;
                for (std::uint64_t cell = 0; cell < f.cells(); ++cell) {
                    if (val[cell] == kInf64) continue;
                    Rational q(val[cell]);
                    q /= Rational(scaled.scale);
                    values.emplace_back(cell, q);
                }
                return finish(f, std::move(values));
            }
            std::variant<std::vector<std::pair<std::uint64_t, long>>, MissingJoinEnc>
                result = packed ? run_pair_scan<PackedKeys, Int64Values>(
                                      PackedKeys(f.n(), f.k()), f.n(), scaled.entries)
                                : run_pair_scan<GenericKeys, Int64Values>(
                                      GenericKeys(f.n(), f.k()), f.n(), scaled.entries);
            if (auto* fail = std::get_if<MissingJoinEnc>(&result))
                return NotExtendable{decode_missing_join(*fail, f.n(), f.k())};
            std::vector<std::pair<std::uint64_t, Rational>> values;
            values.reserve(std::get<0>(result).size());
            for (const auto& [enc, v] : std::get<0>(result)) {
                Rational q(v);
                q /= Rational(scaled.scale);
                values.emplace_back(enc, q);
            }
            return finish(f, std::move(values));
        } catch (const Int64Overflow&) {
            if (options.values == ValueMode::ScaledInt64)
                throw std::overflow_error("scaled int64 relaxation overflowed");
            // fall through to the exact path
        }
    }

    return run_exact(f);
}

// ---------------------------------------------------------------------------
// Verification and certificates.
// ---------------------------------------------------------------------------

namespace {

struct VerifyEntry {
    std::uint64_t key;  // packed or encoded, consistently
    std::uint64_t enc;
    const Rational* value;
    long scaled;
};

template <class Keys>
std::optional<Violation> verify_with(const CostTable& g, const Keys& keys, bool use_int64) {
    std::vector<VerifyEntry> entries;
    entries.reserve(g.dom_size());
    mpz_class lcm = 1;
    if (use_int64)
        for (const auto& [enc, v] : g.entries())
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
    for (const auto& [enc, v] : g.entries()) {
        long scaled = 0;
        if (use_int64) {
            mpz_class s = v.get_num() * (lcm / v.get_den());
            if (!s.fits_slong_p() || s > LONG_MAX / 4 || s < LONG_MIN / 4)
                throw Int64Overflow{};
            scaled = s.get_si();
        }
        entries.push_back({keys.from_enc(enc), enc, &v, scaled});
    }
    std::sort(entries.begin(), entries.end(),
              [](const VerifyEntry& a, const VerifyEntry& b) { return a.key < b.key; });
    std::unordered_map<std::uint64_t, std::size_t> index;
    index.reserve(entries.size() * 2);
    for (std::size_t i = 0; i < entries.size(); ++i) index.emplace(entries[i].key, i);

    auto report = [&](const VerifyEntry& a, const VerifyEntry& b) {
        const Labeling x = decode(a.enc, g.n(), g.k());
        const Labeling y = decode(b.enc, g.n(), g.k());
        const CostValue lhs = CostValue(*a.value) + CostValue(*b.value);
        const CostValue rhs = g.value(meet(x, y)) + g.value(join(x, y));
        return Violation{x, y, lhs, rhs};
    };

    for (std::size_t a = 0; a < entries.size(); ++a) {
        for (std::size_t b = a + 1; b < entries.size(); ++b) {
            const std::uint64_t mk = keys.meet(entries[a].key, entries[b].key);
            const std::uint64_t jk = keys.join(entries[a].key, entries[b].key);
            auto mi = index.find(mk);
            auto ji = index.find(jk);
            if (mi == index.end() || ji == index.end())
                return report(entries[a], entries[b]);  // finite side vs +inf
            if (use_int64) {
                long lhs, rhs;
                if (__builtin_add_overflow(entries[a].scaled, entries[b].scaled, &lhs) ||
                    __builtin_add_overflow(entries[mi->second].scaled,
                                           entries[ji->second].scaled, &rhs))
                    throw Int64Overflow{};
                if (lhs < rhs) return report(entries[a], entries[b]);
            } else {
                if (*entries[a].value + *entries[b].value <
                    *entries[mi->second].value + *entries[ji->second].value)
                    return report(entries[a], entries[b]);
            }
        }
    }
    return std::nullopt;
}

template <class Keys>
std::optional<Violation> verify_dispatch(const CostTable& g, const Keys& keys) {
    try {
        return verify_with(g, keys, true);
    } catch (const Int64Overflow&) {
        return verify_with(g, keys, false);
    }
}

}  // namespace

std::optional<Violation> verify_ksubmodular(const CostTable& g) {
    if (g.kind() != TableKind::Full)
        throw std::invalid_argument("verify_ksubmodular expects a full-kind table");
    if (PackedKernel::usable(g.n(), g.k()))
        return verify_dispatch(g, PackedKeys(g.n(), g.k()));
    return verify_dispatch(g, GenericKeys(g.n(), g.k()));
}

mpz_class scaling_factor(const CostTable& g) {
    mpz_class out = 1;
    for (const auto& [enc, v] : g.entries())
        mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), v.get_den().get_mpz_t());
    return out;
}

std::map<std::uint64_t, TightPair> tightness_witnesses(const CostTable& g, const CostTable& f) {
    if (g.kind() != TableKind::Full)
        throw std::invalid_argument("tightness_witnesses expects a full-kind relaxation");
    std::map<std::uint64_t, TightPair> out;
    std::size_t wanted = 0;
    for (const auto& [enc, v] : g.entries())
        if (!f.contains_encoded(enc)) ++wanted;
    if (wanted == 0) return out;

    struct Entry {
        std::uint64_t enc;
        Labeling point;
        int zeros;
        const Rational* value;
    };
    std::vector<Entry> entries;
    entries.reserve(g.dom_size());
    for (const auto& [enc, v] : g.entries()) {
        Labeling point = decode(enc, g.n(), g.k());
        entries.push_back({enc, point, zero_count(point), &v});
    }

    for (std::size_t a = 0; a < entries.size() && out.size() < wanted; ++a) {
        for (std::size_t b = a + 1; b < entries.size() && out.size() < wanted; ++b) {
            const Labeling m = meet(entries[a].point, entries[b].point);
            const std::uint64_t me = encode(m, g.k());
            if (f.contains_encoded(me) || !g.contains_encoded(me) || out.count(me)) continue;
            const int mz = zero_count(m);
            if (mz <= std::max(entries[a].zeros, entries[b].zeros)) continue;
            const Rational& gz = g.entries().at(me);
            if (entries[a].zeros == 0 && entries[b].zeros == 0 &&
                gz == (*entries[a].value + *entries[b].value) / 2) {
                out.emplace(me, TightPair{entries[a].point, entries[b].point, true});
                continue;
            }
            const Labeling j = join(entries[a].point, entries[b].point);
            if (j == m) continue;
            const std::uint64_t je = encode(j, g.k());
            auto jit = g.entries().find(je);
            if (jit == g.entries().end()) continue;
            if (gz == *entries[a].value + *entries[b].value - jit->second)
                out.emplace(me, TightPair{entries[a].point, entries[b].point, false});
        }
    }

    if (out.size() < wanted) {
        for (const auto& [enc, v] : g.entries())
            if (!f.contains_encoded(enc) && !out.count(enc))
                throw NoTightPair(format_labeling(decode(enc, g.n(), g.k())));
    }
    return out;
}

Rational default_maximality_epsilon(const CostTable& g) {
    std::vector<Rational> values;
    values.reserve(g.dom_size());
    for (const auto& [enc, v] : g.entries()) values.push_back(v);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    Rational smallest_gap = 0;
    for (std::size_t i = 1; i < values.size(); ++i) {
        Rational gap = values[i] - values[i - 1];
        if (smallest_gap == 0 || gap < smallest_gap) smallest_gap = gap;
    }
    if (smallest_gap > 0) {
        Rational quarter_gap = smallest_gap / 4;
        Rational floor = make_rational(1, 4);
        return quarter_gap > floor ? Rational(quarter_gap) : floor;
    }
    return make_rational(1, 4);
}

bool assert_maximal_binary(const CostTable& g, const CostTable& f,
                           std::optional<Rational> epsilon) {
    if (g.n() != 2)
        throw std::invalid_argument(
            "maximality certification is restricted to n = 2; maximal relaxations can fail "
            "to exist for larger parameters");
    const Rational eps = epsilon ? *epsilon : default_maximality_epsilon(g);
    if (eps <= 0) throw std::invalid_argument("epsilon must be positive");
    for (const auto& [enc, v] : g.entries()) {
        if (f.contains_encoded(enc)) continue;
        CostTable bumped = g;
        bumped.set_encoded(enc, Rational(v + eps));
        if (!verify_ksubmodular(bumped)) return false;  // slack: some relaxation beats g here
    }
    return true;
}

}  // namespace ksub
