// The group generated by the local rules, its normal forms and structure.
//
// Closure runs breadth-first from the identity, keyed on the restriction of
// each product to the first three levels; that key is only trusted after
// the closure has been cross-checked for full-map distinctness (restricting
// to three levels is known not to collapse the group, and generate_group
// re-asserts it rather than assuming it).

#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "dposet/level_map.hpp"

namespace dposet {

inline std::vector<LevelMap> generator_maps(const PosetStore& store, int max_level) {
    std::vector<LevelMap> maps;
    for (const LocalRule& r : generator_rules()) maps.push_back(rule_to_levelmap(r, store, max_level));
    return maps;
}

inline std::vector<LevelMap> generate_group(const std::vector<LevelMap>& generators,
                                            const PosetStore& store) {
    if (generators.empty()) throw std::invalid_argument("generate_group: no generators");
    int max_level = generators.front().max_level();
    int key_level = std::min(3, max_level);

    std::unordered_map<LevelMap, size_t, LevelMapHash> seen;
    std::vector<LevelMap> elements;
    std::deque<size_t> frontier;

    auto add = [&](LevelMap m) {
        LevelMap key = restrict_to(m, key_level);
        if (seen.emplace(std::move(key), elements.size()).second) {
            elements.push_back(std::move(m));
            frontier.push_back(elements.size() - 1);
        }
    };

    add(identity_map(store, max_level));
    while (!frontier.empty()) {
        size_t at = frontier.front();
        frontier.pop_front();
        for (const LevelMap& g : generators) add(compose(elements[at], g));
    }

    // The key is a restriction; make sure it did not merge distinct maps.
    std::unordered_set<LevelMap, LevelMapHash> full(elements.begin(), elements.end());
    if (full.size() != elements.size())
        throw std::runtime_error("generate_group: distinct elements collide on the first " +
                                 std::to_string(key_level) + " levels");
    return elements;
}

inline size_t distinct_restrictions(const std::vector<LevelMap>& group, int level) {
    std::unordered_set<LevelMap, LevelMapHash> seen;
    for (const LevelMap& m : group) seen.insert(restrict_to(m, level));
    return seen.size();
}

// Normal form swap_e^p swap_l^q rev_p^r rev_q^s letters(pi) flip^t,
// the rightmost factor applied first.
struct NormalForm {
    bool swap_e = false, swap_l = false, rev_p = false, rev_q = false;
    Perm4 letters;
    bool flip = false;

    auto operator<=>(const NormalForm&) const = default;
};

inline std::vector<NormalForm> all_normal_forms() {
    std::vector<NormalForm> out;
    const auto perms = all_letter_permutations();
    for (int bits = 0; bits < 16; bits++)
        for (const Perm4& pi : perms)
            for (int t = 0; t < 2; t++)
                out.push_back(NormalForm{bool(bits & 1), bool(bits & 2), bool(bits & 4),
                                         bool(bits & 8), pi, bool(t)});
    return out;
}

// Product of normal forms under the conjugation twist: moving flip across
// the left factor swaps swap_e<->swap_l and rev_p<->rev_q and conjugates
// the letter permutation by the B<->C transposition.
inline NormalForm multiply(const NormalForm& a, const NormalForm& b) {
    NormalForm bb = b;
    if (a.flip) {
        std::swap(bb.swap_e, bb.swap_l);
        std::swap(bb.rev_p, bb.rev_q);
        Perm4 bc = Perm4::transposition(1, 2);
        bb.letters = bc.after(bb.letters).after(bc);
    }
    return NormalForm{a.swap_e != bb.swap_e, a.swap_l != bb.swap_l, a.rev_p != bb.rev_p,
                      a.rev_q != bb.rev_q,   a.letters.after(bb.letters), a.flip != bb.flip};
}

struct RuleBasis {
    LevelMap flip, swap_e, swap_l, rev_p, rev_q;
    std::map<Perm4, LevelMap> letters;

    static RuleBasis make(const PosetStore& store, int max_level) {
        RuleBasis b{
            rule_to_levelmap(LocalRule::flip_loops(), store, max_level),
            rule_to_levelmap(LocalRule::swap_e_eprime(), store, max_level),
            rule_to_levelmap(LocalRule::swap_l_lprime(), store, max_level),
            rule_to_levelmap(LocalRule::reverse_p(), store, max_level),
            rule_to_levelmap(LocalRule::reverse_q(), store, max_level),
            {}};
        for (const Perm4& pi : all_letter_permutations())
            b.letters.emplace(pi, rule_to_levelmap(LocalRule::letter_perm(pi), store, max_level));
        return b;
    }

    LevelMap realize(const NormalForm& nf, const PosetStore& store) const {
        LevelMap m = identity_map(store, flip.max_level());
        if (nf.flip) m = compose(flip, m);
        m = compose(letters.at(nf.letters), m);
        if (nf.rev_q) m = compose(rev_q, m);
        if (nf.rev_p) m = compose(rev_p, m);
        if (nf.swap_l) m = compose(swap_l, m);
        if (nf.swap_e) m = compose(swap_e, m);
        return m;
    }
};

struct RelationCheck {
    std::string name;
    bool holds = false;
};

struct StructureReport {
    size_t order = 0;
    bool normal_forms_distinct = false;
    bool twist_law_holds = false;
    std::vector<RelationCheck> relations;
    std::map<int, size_t> restriction_counts;

    bool all_ok() const {
        if (!normal_forms_distinct || !twist_law_holds) return false;
        for (const auto& r : relations)
            if (!r.holds) return false;
        return true;
    }
};

// Checks the defining relations of the generated group as identities of
// level maps, the distinctness of the 768 normal forms, and the twist law
// for the normal-form product.
inline StructureReport verify_structure(const PosetStore& store,
                                        const std::vector<LevelMap>& group, int max_level) {
    StructureReport rep;
    rep.order = group.size();

    RuleBasis basis = RuleBasis::make(store, max_level);
    const Perm4 bc = Perm4::transposition(1, 2);

    auto check = [&](std::string name, const LevelMap& lhs, const LevelMap& rhs) {
        rep.relations.push_back(RelationCheck{std::move(name), lhs == rhs});
    };

    // Conjugation by flip_loops exchanges the loopless rules with their
    // doubly-looped twins.
    auto conj = [&](const LevelMap& m) { return compose(basis.flip, compose(m, basis.flip)); };
    check("flip*swap_e*flip == swap_l", conj(basis.swap_e), basis.swap_l);
    check("flip*swap_l*flip == swap_e", conj(basis.swap_l), basis.swap_e);
    check("flip*rev_p*flip == rev_q", conj(basis.rev_p), basis.rev_q);
    check("flip*rev_q*flip == rev_p", conj(basis.rev_q), basis.rev_p);

    bool letters_conj = true;
    for (const auto& [pi, m] : basis.letters)
        letters_conj &= conj(m) == basis.letters.at(bc.after(pi).after(bc));
    rep.relations.push_back({"flip*letters(pi)*flip == letters((BC) pi (BC))", letters_conj});

    const LevelMap* pair_rules[] = {&basis.swap_e, &basis.swap_l, &basis.rev_p, &basis.rev_q};
    const char* pair_names[] = {"swap_e", "swap_l", "rev_p", "rev_q"};
    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++)
            check(std::string(pair_names[i]) + " commutes with " + pair_names[j],
                  compose(*pair_rules[i], *pair_rules[j]), compose(*pair_rules[j], *pair_rules[i]));
    bool letters_commute = true;
    for (const auto& [pi, m] : basis.letters)
        for (int i = 0; i < 4; i++)
            letters_commute &= compose(*pair_rules[i], m) == compose(m, *pair_rules[i]);
    rep.relations.push_back({"letters(pi) commutes with swap_e/swap_l/rev_p/rev_q", letters_commute});

    // Normal forms: all 768 must realize pairwise distinct maps that
    // exactly exhaust the generated group.
    std::vector<NormalForm> nfs = all_normal_forms();
    std::unordered_map<LevelMap, size_t, LevelMapHash> realized;
    for (size_t i = 0; i < nfs.size(); i++) realized.emplace(basis.realize(nfs[i], store), i);
    std::unordered_set<LevelMap, LevelMapHash> group_set(group.begin(), group.end());
    rep.normal_forms_distinct = realized.size() == nfs.size() &&
                                group_set.size() == group.size() &&
                                realized.size() == group_set.size() &&
                                [&] {
                                    for (const auto& [m, i] : realized)
                                        if (!group_set.count(m)) return false;
                                    return true;
                                }();

    // Twist law on every pair of normal forms, checked on the restriction
    // to the first three levels (distinctness there is established above:
    // the realized maps are distinct and generate_group asserted that the
    // three-level keys separate them).
    int key_level = std::min(3, max_level);
    std::map<NormalForm, LevelMap> restricted;
    for (const NormalForm& nf : nfs) {
        auto it = realized.begin();
        restricted.emplace(nf, LevelMap{});
    }
    for (auto& [m, i] : realized) restricted[nfs[i]] = restrict_to(m, key_level);
    bool twist = true;
    for (const NormalForm& a : nfs) {
        const LevelMap& ma = restricted.at(a);
        for (const NormalForm& b : nfs) {
            if (compose(ma, restricted.at(b)) != restricted.at(multiply(a, b))) {
                twist = false;
                break;
            }
        }
        if (!twist) break;
    }
    rep.twist_law_holds = twist;

    for (int n = 1; n <= max_level; n++)
        rep.restriction_counts[n] = distinct_restrictions(group, n);
    return rep;
}

}  // namespace dposet
