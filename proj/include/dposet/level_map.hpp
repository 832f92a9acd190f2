// Candidate poset automorphisms as per-level bijections.
//
// A LevelMap stores, for levels 1..k, a permutation of the dense member
// indices of each level.  Automorphisms of the graded order never move an
// element off its level, so this representation is lossless, and composing
// or hashing maps is plain index arithmetic.

#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "dposet/poset.hpp"
#include "dposet/rules.hpp"

namespace dposet {

struct LevelMap {
    // perm[k][i] = image index on level k+1 (levels are 1-based outside).
    std::vector<std::vector<int32_t>> perm;

    int max_level() const { return static_cast<int>(perm.size()); }

    int32_t image(int level, int32_t idx) const { return perm[level - 1][idx]; }

    friend bool operator==(const LevelMap&, const LevelMap&) = default;
};

inline LevelMap identity_map(const PosetStore& store, int max_level) {
    LevelMap m;
    m.perm.resize(max_level);
    for (int n = 1; n <= max_level; n++) {
        m.perm[n - 1].resize(store.level(n).size());
        for (int32_t i = 0; i < store.level(n).size(); i++) m.perm[n - 1][i] = i;
    }
    return m;
}

inline bool is_level_bijection(const LevelMap& m) {
    for (const auto& p : m.perm) {
        std::vector<bool> hit(p.size(), false);
        for (int32_t v : p) {
            if (v < 0 || v >= static_cast<int32_t>(p.size()) || hit[v]) return false;
            hit[v] = true;
        }
    }
    return true;
}

// a after b: (a*b)(x) = a(b(x)).
inline LevelMap compose(const LevelMap& a, const LevelMap& b) {
    if (a.max_level() != b.max_level())
        throw std::invalid_argument("compose: level maps cover different level ranges");
    LevelMap r;
    r.perm.resize(a.perm.size());
    for (size_t k = 0; k < a.perm.size(); k++) {
        if (a.perm[k].size() != b.perm[k].size())
            throw std::invalid_argument("compose: level size mismatch");
        r.perm[k].resize(b.perm[k].size());
        for (size_t i = 0; i < b.perm[k].size(); i++) r.perm[k][i] = a.perm[k][b.perm[k][i]];
    }
    return r;
}

inline LevelMap inverse(const LevelMap& m) {
    LevelMap r;
    r.perm.resize(m.perm.size());
    for (size_t k = 0; k < m.perm.size(); k++) {
        r.perm[k].resize(m.perm[k].size());
        for (size_t i = 0; i < m.perm[k].size(); i++) r.perm[k][m.perm[k][i]] = static_cast<int32_t>(i);
    }
    return r;
}

inline LevelMap restrict_to(const LevelMap& m, int max_level) {
    if (max_level > m.max_level())
        throw std::invalid_argument("restrict_to: map does not reach level " +
                                    std::to_string(max_level));
    LevelMap r;
    r.perm.assign(m.perm.begin(), m.perm.begin() + max_level);
    return r;
}

struct LevelMapHash {
    size_t operator()(const LevelMap& m) const {
        uint64_t h = 0xcbf29ce484222325ull;
        for (const auto& p : m.perm)
            for (int32_t v : p) {
                h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull;
                h *= 0x100000001b3ull;
            }
        return static_cast<size_t>(h);
    }
};

// Image of a canonical code under a LevelMap.
inline CanonicalCode image_code(const PosetStore& store, const LevelMap& m,
                                const CanonicalCode& g) {
    const Level& lv = store.level(g.n);
    int idx = lv.index_of(g.code);
    if (idx < 0) throw std::invalid_argument("image_code: " + to_token(g) + " not in store");
    return lv.codes[m.image(g.n, idx)];
}

// The level map induced by a local rule: each canonical code goes to the
// canonical form of the rewritten digraph.  Throws if the induced map fails
// to be a bijection on some level, which would mean the rule tables are
// wrong (rewriting is supposed to permute isomorphism types).
inline LevelMap rule_to_levelmap(const LocalRule& rule, const PosetStore& store, int max_level) {
    LevelMap m;
    m.perm.resize(max_level);
    for (int n = 1; n <= max_level; n++) {
        const Level& lv = store.level(n);
        m.perm[n - 1].assign(lv.size(), -1);
        for (int32_t i = 0; i < lv.size(); i++) {
            CanonicalCode img = canonical_form(apply_rule(rule, lv.codes[i].digraph()));
            int32_t j = lv.index_of(img.code);
            if (j < 0)
                throw std::runtime_error("rule " + rule.name() + " maps " + to_token(lv.codes[i]) +
                                         " off level " + std::to_string(n));
            m.perm[n - 1][i] = j;
        }
    }
    if (!is_level_bijection(m))
        throw std::runtime_error("rule " + rule.name() +
                                 " does not induce a bijection; rule table is defective");
    return m;
}

// True iff m is bijective per level and maps the stored cover relation onto
// itself: G -< H iff m(G) -< m(H) for every pair of consecutive levels.
inline bool verify_automorphism(const LevelMap& m, const PosetStore& store) {
    if (m.max_level() > store.max_level()) return false;
    if (!is_level_bijection(m)) return false;
    LevelMap inv = inverse(m);
    for (int n = 2; n <= m.max_level(); n++) {
        const Level& lv = store.level(n);
        for (int32_t h = 0; h < lv.size(); h++) {
            for (int32_t g : lv.lower[h]) {
                if (!store.is_cover(n - 1, m.perm[n - 2][g], m.perm[n - 1][h])) return false;
                if (!store.is_cover(n - 1, inv.perm[n - 2][g], inv.perm[n - 1][h])) return false;
            }
        }
    }
    return true;
}

}  // namespace dposet
