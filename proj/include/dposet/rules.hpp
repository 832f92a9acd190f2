// Local rewrite rules on digraphs.
//
// Each rule modifies a digraph by rewriting its one- or two-vertex
// substructures in place: flip_loops complements the diagonal, the other
// rules rewrite the edge bits of every unordered vertex pair through a
// fixed 16-entry lookup table on pair configurations (see PairType).  All
// pairs are rewritten from the original digraph simultaneously, and no rule
// other than flip_loops moves a loop.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "dposet/digraph.hpp"

namespace dposet {

// Permutation of the four one-loop pair types {A,B,C,D}, stored as images.
struct Perm4 {
    std::array<uint8_t, 4> img{0, 1, 2, 3};

    static Perm4 identity() { return {}; }
    static Perm4 transposition(int x, int y) {
        Perm4 p;
        std::swap(p.img[x], p.img[y]);
        return p;
    }

    // (a.after(b))(x) = a(b(x))
    Perm4 after(const Perm4& b) const {
        Perm4 r;
        for (int x = 0; x < 4; x++) r.img[x] = img[b.img[x]];
        return r;
    }

    Perm4 inverse() const {
        Perm4 r;
        for (int x = 0; x < 4; x++) r.img[img[x]] = static_cast<uint8_t>(x);
        return r;
    }

    // Image word over the letters A..D, e.g. "ACBD" for the B<->C swap.
    std::string word() const {
        std::string s;
        for (int x = 0; x < 4; x++) s += static_cast<char>('A' + img[x]);
        return s;
    }

    auto operator<=>(const Perm4&) const = default;
};

inline std::vector<Perm4> all_letter_permutations() {
    std::array<uint8_t, 4> v{0, 1, 2, 3};
    std::vector<Perm4> out;
    do {
        out.push_back(Perm4{v});
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

struct LocalRule {
    enum class Kind : uint8_t {
        FlipLoops,    // complement every loop
        SwapEEPrime,  // loopless pairs: no edges <-> both edges
        SwapLLPrime,  // doubly looped pairs: no edges <-> both edges
        ReverseP,     // loopless pairs with one edge: reverse it
        ReverseQ,     // doubly looped pairs with one edge: reverse it
        LetterPerm,   // one-loop pairs: A,B,C,D -> pi(A),pi(B),pi(C),pi(D)
    };

    Kind kind = Kind::FlipLoops;
    Perm4 pi;  // used by LetterPerm only

    static LocalRule flip_loops() { return {Kind::FlipLoops, {}}; }
    static LocalRule swap_e_eprime() { return {Kind::SwapEEPrime, {}}; }
    static LocalRule swap_l_lprime() { return {Kind::SwapLLPrime, {}}; }
    static LocalRule reverse_p() { return {Kind::ReverseP, {}}; }
    static LocalRule reverse_q() { return {Kind::ReverseQ, {}}; }
    static LocalRule letter_perm(const Perm4& pi) { return {Kind::LetterPerm, pi}; }

    std::string name() const {
        switch (kind) {
            case Kind::FlipLoops: return "flip_loops";
            case Kind::SwapEEPrime: return "swap_e_eprime";
            case Kind::SwapLLPrime: return "swap_l_lprime";
            case Kind::ReverseP: return "reverse_p";
            case Kind::ReverseQ: return "reverse_q";
            case Kind::LetterPerm: return "letters_" + pi.word();
        }
        return "?";
    }

    auto operator<=>(const LocalRule&) const = default;
};

namespace detail {

// One-loop pair configurations indexed by (looped side, letter).
// Side 0: loop at u; side 1: loop at v.  B points out of the looped vertex,
// C into it, relative to whichever side holds the loop.
inline constexpr int letter_config(int side, int letter) {
    constexpr int cfg[2][4] = {
        {pair_config(1, 0, 0, 0), pair_config(1, 0, 1, 0), pair_config(1, 0, 0, 1),
         pair_config(1, 0, 1, 1)},
        {pair_config(0, 1, 0, 0), pair_config(0, 1, 0, 1), pair_config(0, 1, 1, 0),
         pair_config(0, 1, 1, 1)},
    };
    return cfg[side][letter];
}

}  // namespace detail

// 16-entry rewrite table on pair configurations.  Every table fixes the two
// loop bits; flip_loops is handled on the diagonal instead.
inline std::array<uint8_t, 16> lookup_table(const LocalRule& rule) {
    std::array<uint8_t, 16> t;
    for (int c = 0; c < 16; c++) t[c] = static_cast<uint8_t>(c);
    using detail::pair_config;
    switch (rule.kind) {
        case LocalRule::Kind::FlipLoops:
            for (int c = 0; c < 16; c++) t[c] = static_cast<uint8_t>(c ^ 3);
            break;
        case LocalRule::Kind::SwapEEPrime:
            std::swap(t[pair_config(0, 0, 0, 0)], t[pair_config(0, 0, 1, 1)]);
            break;
        case LocalRule::Kind::SwapLLPrime:
            std::swap(t[pair_config(1, 1, 0, 0)], t[pair_config(1, 1, 1, 1)]);
            break;
        case LocalRule::Kind::ReverseP:
            std::swap(t[pair_config(0, 0, 1, 0)], t[pair_config(0, 0, 0, 1)]);
            break;
        case LocalRule::Kind::ReverseQ:
            std::swap(t[pair_config(1, 1, 1, 0)], t[pair_config(1, 1, 0, 1)]);
            break;
        case LocalRule::Kind::LetterPerm:
            for (int side = 0; side < 2; side++)
                for (int letter = 0; letter < 4; letter++)
                    t[detail::letter_config(side, letter)] = static_cast<uint8_t>(
                        detail::letter_config(side, rule.pi.img[letter]));
            break;
    }
    return t;
}

inline Digraph apply_rule(const LocalRule& rule, const Digraph& g) {
    if (rule.kind == LocalRule::Kind::FlipLoops)
        return Digraph(g.n, g.code ^ diagonal_mask(g.n));

    const auto t = lookup_table(rule);
    uint32_t out = g.code & diagonal_mask(g.n);
    for (int u = 0; u < g.n; u++) {
        for (int v = u + 1; v < g.n; v++) {
            int mapped = t[detail::pair_config_of(g, u, v)];
            if (mapped & 4) out |= uint32_t{1} << (u * g.n + v);
            if (mapped & 8) out |= uint32_t{1} << (v * g.n + u);
        }
    }
    return Digraph(g.n, out);
}

// The full generating set: the five pair rules plus one rule per letter
// permutation (24, identity included).
inline std::vector<LocalRule> generator_rules() {
    std::vector<LocalRule> rules = {
        LocalRule::flip_loops(),  LocalRule::swap_e_eprime(), LocalRule::swap_l_lprime(),
        LocalRule::reverse_p(),   LocalRule::reverse_q(),
    };
    for (const Perm4& pi : all_letter_permutations()) rules.push_back(LocalRule::letter_perm(pi));
    return rules;
}

}  // namespace dposet
