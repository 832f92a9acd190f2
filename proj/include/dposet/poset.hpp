// Levels of the substructure order and their cover relation.
//
// Level n holds one canonical code per isomorphism type on n vertices,
// grouped by shared lower-cover sets.  The grouped layout is what the
// downstream machinery consumes: the signature set of level n is exactly
// one (lower-cover set, group size) pair per group.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "dposet/digraph.hpp"

namespace dposet {

// Members on level n sharing one lower-cover set on level n-1.
struct Group {
    std::vector<CanonicalCode> below;    // sorted; empty only on level 1
    std::vector<CanonicalCode> members;  // sorted
};

struct Level {
    int n = 0;
    std::vector<Group> groups;            // sorted by below set
    std::vector<CanonicalCode> codes;     // sorted union of all members
    std::vector<int> group_of;            // per member index
    std::vector<std::vector<int>> lower;  // member index -> sorted indices one level down
    std::vector<std::vector<int>> upper;  // member index -> sorted indices one level up

    int size() const { return static_cast<int>(codes.size()); }

    int index_of(uint32_t code) const {
        auto it = std::lower_bound(codes.begin(), codes.end(), CanonicalCode{n, code});
        if (it == codes.end() || it->code != code) return -1;
        return static_cast<int>(it - codes.begin());
    }
};

// Element of H_n: a lower-cover set together with the number of level-n
// digraphs sharing it.
struct CoverSignature {
    std::vector<CanonicalCode> lower;
    int count = 0;

    auto operator<=>(const CoverSignature&) const = default;
};

namespace detail {

// Lower covers by deleting each vertex in turn and canonicalizing.
inline std::vector<CanonicalCode> lower_covers_of(const Digraph& g) {
    std::vector<CanonicalCode> below;
    below.reserve(g.n);
    for (int v = 0; v < g.n; v++) below.push_back(canonical_form(delete_vertex(g, v)));
    std::sort(below.begin(), below.end());
    below.erase(std::unique(below.begin(), below.end()), below.end());
    return below;
}

}  // namespace detail

class PosetStore {
  public:
    PosetStore() = default;

    int max_level() const { return static_cast<int>(levels_.size()); }

    const Level& level(int n) const {
        if (n < 1 || n > max_level())
            throw std::out_of_range("PosetStore: level " + std::to_string(n) + " not built");
        return levels_[n - 1];
    }

    // Builds levels 1..max_level.  Construction scans the code space of each
    // level in ascending order; the first unvisited code of an orbit is its
    // canonical code, and the whole orbit is marked visited at once, so each
    // isomorphism type is processed exactly once.
    static PosetStore build(int max_level, int threads = 1) {
        PosetStore store;
        store.extend_to(max_level, threads);
        return store;
    }

    void extend_to(int target_level, int threads = 1) {
        if (target_level < 1 || target_level > kMaxVertices)
            throw std::out_of_range("PosetStore: levels must be in 1.." +
                                    std::to_string(kMaxVertices));
        while (max_level() < target_level) append_level(build_next_level(threads));
    }

    // Attach a level built elsewhere (e.g. loaded from disk); wires the
    // cover indices against the previous level.
    void append_level(Level level) {
        if (level.n != max_level() + 1)
            throw std::invalid_argument("PosetStore: levels must be appended in order");
        index_level(level);
        levels_.push_back(std::move(level));
    }

    const std::vector<CanonicalCode>& lower_covers(const CanonicalCode& g) const {
        const Level& lv = level(g.n);
        int idx = lv.index_of(g.code);
        if (idx < 0) throw std::invalid_argument("lower_covers: " + to_token(g) + " not in store");
        return lv.groups[lv.group_of[idx]].below;
    }

    std::vector<CanonicalCode> upper_covers(const CanonicalCode& g) const {
        const Level& lv = level(g.n);
        int idx = lv.index_of(g.code);
        if (idx < 0) throw std::invalid_argument("upper_covers: " + to_token(g) + " not in store");
        const Level& up = level(g.n + 1);  // throws if absent
        std::vector<CanonicalCode> out;
        out.reserve(lv.upper[idx].size());
        for (int j : lv.upper[idx]) out.push_back(up.codes[j]);
        return out;
    }

    bool is_cover(int low_level, int low_idx, int high_idx) const {
        const auto& l = level(low_level + 1).lower[high_idx];
        return std::binary_search(l.begin(), l.end(), low_idx);
    }

    std::vector<int> level_sizes() const {
        std::vector<int> s;
        for (const Level& lv : levels_) s.push_back(lv.size());
        return s;
    }

  private:
    std::vector<Level> levels_;

    Level build_next_level(int threads) const {
        int n = max_level() + 1;
        Level lv;
        lv.n = n;

        if (n == 1) {
            lv.groups.push_back(Group{{}, {CanonicalCode{1, 0}, CanonicalCode{1, 1}}});
            return lv;
        }

        // Phase 1: canonical representatives, ascending.
        std::vector<uint32_t> reps = canonical_reps(n);

        // Phase 2: lower-cover set per representative (independent per rep).
        std::vector<std::vector<CanonicalCode>> below(reps.size());
        auto chunk = [&](size_t lo, size_t hi) {
            for (size_t i = lo; i < hi; i++)
                below[i] = detail::lower_covers_of(Digraph(n, reps[i]));
        };
        if (threads > 1 && reps.size() > 1024) {
            size_t workers = std::min<size_t>(threads, std::thread::hardware_concurrency());
            std::vector<std::thread> pool;
            size_t per = (reps.size() + workers - 1) / workers;
            for (size_t w = 0; w < workers; w++)
                pool.emplace_back(chunk, std::min(w * per, reps.size()),
                                  std::min((w + 1) * per, reps.size()));
            for (auto& t : pool) t.join();
        } else {
            chunk(0, reps.size());
        }

        std::map<std::vector<CanonicalCode>, std::vector<CanonicalCode>> grouped;
        for (size_t i = 0; i < reps.size(); i++)
            grouped[below[i]].push_back(CanonicalCode{n, reps[i]});
        for (auto& [key, members] : grouped) lv.groups.push_back(Group{key, std::move(members)});
        return lv;
    }

    std::vector<uint32_t> canonical_reps(int n) const {
        const auto& maps = detail::bit_maps(n);
        std::vector<bool> visited(code_space(n), false);
        std::vector<uint32_t> reps;
        for (uint32_t c = 0; c < code_space(n); c++) {
            if (visited[c]) continue;
            reps.push_back(c);
            for (const auto& bm : maps) visited[detail::map_code(c, bm)] = true;
        }
        return reps;
    }

    void index_level(Level& lv) {
        lv.codes.clear();
        for (const Group& g : lv.groups)
            lv.codes.insert(lv.codes.end(), g.members.begin(), g.members.end());
        std::sort(lv.codes.begin(), lv.codes.end());
        if (std::adjacent_find(lv.codes.begin(), lv.codes.end()) != lv.codes.end())
            throw std::runtime_error("level " + std::to_string(lv.n) +
                                     ": duplicate canonical code across groups");

        lv.group_of.assign(lv.codes.size(), -1);
        lv.lower.assign(lv.codes.size(), {});
        lv.upper.assign(lv.codes.size(), {});

        Level* prev = lv.n >= 2 ? &levels_[lv.n - 2] : nullptr;
        for (size_t gi = 0; gi < lv.groups.size(); gi++) {
            std::vector<int> below_idx;
            for (const CanonicalCode& b : lv.groups[gi].below) {
                if (!prev)
                    throw std::runtime_error("level 1 group has nonempty lower-cover set");
                int bi = b.n == lv.n - 1 ? prev->index_of(b.code) : -1;
                if (bi < 0)
                    throw std::runtime_error("level " + std::to_string(lv.n) +
                                             ": lower cover " + to_token(b) + " missing below");
                below_idx.push_back(bi);
            }
            std::sort(below_idx.begin(), below_idx.end());
            for (const CanonicalCode& m : lv.groups[gi].members) {
                int idx = lv.index_of(m.code);
                lv.group_of[idx] = static_cast<int>(gi);
                lv.lower[idx] = below_idx;
                for (int bi : below_idx) prev->upper[bi].push_back(idx);
            }
        }
        if (prev)
            for (auto& ups : prev->upper) std::sort(ups.begin(), ups.end());
    }
};

// H_n: one (lower-cover set, member count) signature per group of level n.
inline std::vector<CoverSignature> signature_set(const PosetStore& store, int n) {
    const Level& lv = store.level(n);
    std::vector<CoverSignature> sigs;
    sigs.reserve(lv.groups.size());
    for (const Group& g : lv.groups)
        sigs.push_back(CoverSignature{g.below, static_cast<int>(g.members.size())});
    return sigs;
}

}  // namespace dposet
