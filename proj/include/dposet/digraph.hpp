// Finite digraphs on up to 5 vertices, bit-encoded.
//
// A digraph on n vertices is stored as the integer whose bit i*n+j is set
// iff there is a directed edge i->j (diagonal bits are loops).  Isomorphism
// is handled by exhaustive relabeling: with n <= 5 there are at most 120
// permutations, so the canonical form is simply the minimum code over all
// of them.

#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dposet {

inline constexpr int kMaxVertices = 5;

inline constexpr uint32_t code_space(int n) {
    return uint32_t{1} << (n * n);
}

inline constexpr uint32_t diagonal_mask(int n) {
    uint32_t m = 0;
    for (int i = 0; i < n; i++) m |= uint32_t{1} << (i * n + i);
    return m;
}

struct Digraph {
    int n = 1;
    uint32_t code = 0;

    Digraph() = default;
    Digraph(int n_, uint32_t code_) : n(n_), code(code_) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("Digraph: vertex count must be in 1.." +
                                        std::to_string(kMaxVertices) + ", got " + std::to_string(n));
        if (code >= code_space(n))
            throw std::invalid_argument("Digraph: code " + std::to_string(code) +
                                        " out of range for n=" + std::to_string(n));
    }

    bool edge(int i, int j) const { return (code >> (i * n + j)) & 1u; }
    bool loop(int i) const { return edge(i, i); }
    int edge_count() const { return std::popcount(code); }

    friend bool operator==(const Digraph&, const Digraph&) = default;
};

// Convenience constructor from an edge list; a loop is the pair (i,i).
inline Digraph make_digraph(int n, std::initializer_list<std::pair<int, int>> edges) {
    uint32_t code = 0;
    for (auto [i, j] : edges) {
        if (i < 0 || i >= n || j < 0 || j >= n)
            throw std::invalid_argument("make_digraph: edge endpoint out of range");
        code |= uint32_t{1} << (i * n + j);
    }
    return Digraph(n, code);
}

// The minimum code over all n! relabelings of a digraph.  Two digraphs are
// isomorphic iff their canonical codes (and vertex counts) are equal.
struct CanonicalCode {
    int n = 1;
    uint32_t code = 0;

    auto operator<=>(const CanonicalCode&) const = default;
    Digraph digraph() const { return Digraph(n, code); }
};

namespace detail {

using Perm = std::array<uint8_t, kMaxVertices>;

// All permutations of {0..n-1}, lexicographic; unused slots hold the identity.
inline const std::vector<Perm>& permutations(int n) {
    static const std::array<std::vector<Perm>, kMaxVertices + 1> tables = [] {
        std::array<std::vector<Perm>, kMaxVertices + 1> t;
        for (int n = 1; n <= kMaxVertices; n++) {
            std::vector<int> p(n);
            std::iota(p.begin(), p.end(), 0);
            do {
                Perm perm{0, 1, 2, 3, 4};
                for (int i = 0; i < n; i++) perm[i] = static_cast<uint8_t>(p[i]);
                t[n].push_back(perm);
            } while (std::next_permutation(p.begin(), p.end()));
        }
        return t;
    }();
    return tables[n];
}

// Per permutation, where each of the n*n bits lands after relabeling:
// bit i*n+j of the input becomes bit pi(i)*n+pi(j) of the output.
using BitMap = std::array<uint8_t, kMaxVertices * kMaxVertices>;

inline const std::vector<BitMap>& bit_maps(int n) {
    static const std::array<std::vector<BitMap>, kMaxVertices + 1> tables = [] {
        std::array<std::vector<BitMap>, kMaxVertices + 1> t;
        for (int n = 1; n <= kMaxVertices; n++) {
            for (const Perm& pi : permutations(n)) {
                BitMap bm{};
                for (int i = 0; i < n; i++)
                    for (int j = 0; j < n; j++)
                        bm[i * n + j] = static_cast<uint8_t>(pi[i] * n + pi[j]);
                t[n].push_back(bm);
            }
        }
        return t;
    }();
    return tables[n];
}

inline uint32_t map_code(uint32_t code, const BitMap& bm) {
    uint32_t out = 0;
    while (code) {
        out |= uint32_t{1} << bm[std::countr_zero(code)];
        code &= code - 1;
    }
    return out;
}

}  // namespace detail

inline Digraph relabel(const Digraph& g, const detail::Perm& pi) {
    uint32_t out = 0;
    uint32_t c = g.code;
    while (c) {
        int b = std::countr_zero(c);
        out |= uint32_t{1} << (pi[b / g.n] * g.n + pi[b % g.n]);
        c &= c - 1;
    }
    return Digraph(g.n, out);
}

inline CanonicalCode canonical_form(const Digraph& g) {
    uint32_t best = g.code;
    for (const auto& bm : detail::bit_maps(g.n)) {
        uint32_t c = detail::map_code(g.code, bm);
        if (c < best) best = c;
    }
    return CanonicalCode{g.n, best};
}

inline bool isomorphic(const Digraph& a, const Digraph& b) {
    return a.n == b.n && canonical_form(a).code == canonical_form(b).code;
}

// The digraph induced on an ordered vertex subset: entry (a,b) of the result
// equals entry (vs[a],vs[b]) of g.
inline Digraph induced_substructure(const Digraph& g, const std::vector<int>& vs) {
    if (vs.empty()) throw std::invalid_argument("induced_substructure: empty vertex subset");
    for (size_t a = 0; a < vs.size(); a++) {
        if (vs[a] < 0 || vs[a] >= g.n)
            throw std::invalid_argument("induced_substructure: vertex out of range");
        for (size_t b = a + 1; b < vs.size(); b++)
            if (vs[a] == vs[b]) throw std::invalid_argument("induced_substructure: repeated vertex");
    }
    int k = static_cast<int>(vs.size());
    uint32_t code = 0;
    for (int a = 0; a < k; a++)
        for (int b = 0; b < k; b++)
            if (g.edge(vs[a], vs[b])) code |= uint32_t{1} << (a * k + b);
    return Digraph(k, code);
}

inline Digraph delete_vertex(const Digraph& g, int v) {
    std::vector<int> vs;
    vs.reserve(g.n - 1);
    for (int i = 0; i < g.n; i++)
        if (i != v) vs.push_back(i);
    return induced_substructure(g, vs);
}

// True iff some vertex subset of h induces a digraph isomorphic to g.
inline bool is_substructure(const Digraph& g, const Digraph& h) {
    if (g.n > h.n) return false;
    uint32_t want = canonical_form(g).code;
    std::vector<int> vs(g.n);
    std::iota(vs.begin(), vs.end(), 0);
    // enumerate ascending size-g.n subsets of {0..h.n-1}
    while (true) {
        if (canonical_form(induced_substructure(h, vs)).code == want) return true;
        int i = g.n - 1;
        while (i >= 0 && vs[i] == h.n - g.n + i) i--;
        if (i < 0) return false;
        vs[i]++;
        for (int j = i + 1; j < g.n; j++) vs[j] = vs[j - 1] + 1;
    }
}

// Configuration of an ordered vertex pair, refining the ten 2-vertex
// isomorphism types with edge direction where it matters.  Relative to the
// ordered pair (u,v):
//   E       no loops, no edges          P       no loops, edge u->v
//   PRev    no loops, edge v->u         EPrime  no loops, both edges
//   A       one loop, no edges          B       one loop, edge out of it
//   C       one loop, edge into it      D       one loop, both edges
//   L       two loops, no edges         Q       two loops, edge u->v
//   QRev    two loops, edge v->u        LPrime  two loops, both edges
enum class PairType : uint8_t { E, P, PRev, EPrime, A, B, C, D, L, Q, QRev, LPrime };

inline std::string_view to_string(PairType t) {
    switch (t) {
        case PairType::E: return "E";
        case PairType::P: return "P";
        case PairType::PRev: return "P_rev";
        case PairType::EPrime: return "E'";
        case PairType::A: return "A";
        case PairType::B: return "B";
        case PairType::C: return "C";
        case PairType::D: return "D";
        case PairType::L: return "L";
        case PairType::Q: return "Q";
        case PairType::QRev: return "Q_rev";
        case PairType::LPrime: return "L'";
    }
    return "?";
}

namespace detail {

// Pair configurations are 4-bit words: bit0 loop at u, bit1 loop at v,
// bit2 edge u->v, bit3 edge v->u.
inline constexpr int pair_config(bool loop_u, bool loop_v, bool uv, bool vu) {
    return int(loop_u) | int(loop_v) << 1 | int(uv) << 2 | int(vu) << 3;
}

inline constexpr std::array<PairType, 16> kPairTypeOf = [] {
    std::array<PairType, 16> t{};
    t[pair_config(0, 0, 0, 0)] = PairType::E;
    t[pair_config(0, 0, 1, 0)] = PairType::P;
    t[pair_config(0, 0, 0, 1)] = PairType::PRev;
    t[pair_config(0, 0, 1, 1)] = PairType::EPrime;
    t[pair_config(1, 0, 0, 0)] = PairType::A;
    t[pair_config(0, 1, 0, 0)] = PairType::A;
    t[pair_config(1, 0, 1, 0)] = PairType::B;  // edge leaves the looped vertex
    t[pair_config(0, 1, 0, 1)] = PairType::B;
    t[pair_config(1, 0, 0, 1)] = PairType::C;  // edge enters the looped vertex
    t[pair_config(0, 1, 1, 0)] = PairType::C;
    t[pair_config(1, 0, 1, 1)] = PairType::D;
    t[pair_config(0, 1, 1, 1)] = PairType::D;
    t[pair_config(1, 1, 0, 0)] = PairType::L;
    t[pair_config(1, 1, 1, 0)] = PairType::Q;
    t[pair_config(1, 1, 0, 1)] = PairType::QRev;
    t[pair_config(1, 1, 1, 1)] = PairType::LPrime;
    return t;
}();

inline int pair_config_of(const Digraph& g, int u, int v) {
    return pair_config(g.loop(u), g.loop(v), g.edge(u, v), g.edge(v, u));
}

}  // namespace detail

inline PairType two_element_type(const Digraph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("two_element_type: vertices must differ");
    if (u < 0 || u >= g.n || v < 0 || v >= g.n)
        throw std::invalid_argument("two_element_type: vertex out of range");
    return detail::kPairTypeOf[detail::pair_config_of(g, u, v)];
}

// --- token format -------------------------------------------------------
// Digraphs travel through CLI arguments and JSON as "n:code", e.g. "2:2".

inline std::string to_token(int n, uint32_t code) {
    return std::to_string(n) + ":" + std::to_string(code);
}

inline std::string to_token(const CanonicalCode& c) { return to_token(c.n, c.code); }
inline std::string to_token(const Digraph& g) { return to_token(g.n, g.code); }

inline Digraph parse_token(std::string_view token) {
    auto colon = token.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("digraph token must look like \"n:code\", got \"" +
                                    std::string(token) + "\"");
    int n;
    unsigned long code;
    try {
        size_t used;
        n = std::stoi(std::string(token.substr(0, colon)), &used);
        if (used != colon) throw std::invalid_argument("");
        std::string rest(token.substr(colon + 1));
        code = std::stoul(rest, &used);
        if (used != rest.size() || rest.empty()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed digraph token \"" + std::string(token) + "\"");
    }
    return Digraph(n, static_cast<uint32_t>(code));
}

}  // namespace dposet
