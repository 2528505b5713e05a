#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <coinv/skew.hpp>
#include <coinv/tableaux.hpp>

namespace coinv {

namespace detail {

// Growing component during placement. Coordinates are frame-local but the
// diagonal is pinned: cell offset (col - row) is its content offset.
struct WorkComp {
    std::vector<Cell> cells;
    std::vector<int> ranks;  // parallel; 1-based position in the class word
};

inline bool workcomp_valid(const WorkComp& wc) {
    std::vector<Cell> sorted = wc.cells;
    std::sort(sorted.begin(), sorted.end());
    if (!cells_valid_skew(sorted)) return false;
    for (std::size_t i = 0; i < wc.cells.size(); ++i)
        for (std::size_t j = 0; j < wc.cells.size(); ++j) {
            const Cell& a = wc.cells[i];
            const Cell& b = wc.cells[j];
            bool right = b.row == a.row && b.col == a.col + 1;
            bool below = b.col == a.col && b.row == a.row + 1;
            if ((right || below) && wc.ranks[j] <= wc.ranks[i]) return false;
        }
    return true;
}

inline std::vector<long long> workcomp_key(const WorkComp& wc) {
    int minrow = wc.cells.front().row;
    for (const Cell& c : wc.cells) minrow = std::min(minrow, c.row);
    std::vector<std::pair<Cell, int>> z;
    for (std::size_t i = 0; i < wc.cells.size(); ++i)
        z.emplace_back(Cell{wc.cells[i].row - minrow, wc.cells[i].col - minrow},
                       wc.ranks[i]);
    std::sort(z.begin(), z.end());
    std::vector<long long> key;
    for (const auto& [c, r] : z) {
        key.push_back(c.row);
        key.push_back(c.col);
        key.push_back(r);
    }
    return key;
}

inline std::vector<long long> state_key(const std::vector<WorkComp>& state) {
    std::vector<std::vector<long long>> ks;
    ks.reserve(state.size());
    for (const auto& wc : state) ks.push_back(workcomp_key(wc));
    std::sort(ks.begin(), ks.end());
    std::vector<long long> key;
    for (const auto& k : ks) {
        key.push_back(-9);
        key.insert(key.end(), k.begin(), k.end());
    }
    return key;
}

// Positions adjacent to the component carrying the wanted content offset and
// not occupied.
inline std::vector<Cell> attach_positions(const WorkComp& wc, int offset) {
    std::set<Cell> occupied(wc.cells.begin(), wc.cells.end());
    std::set<Cell> out;
    for (const Cell& c : wc.cells)
        for (Cell nb : {Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1},
                        Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}})
            if (nb.col - nb.row == offset && !occupied.count(nb)) out.insert(nb);
    return {out.begin(), out.end()};
}

inline std::vector<PlacedComponent> finalize_state(
    const std::vector<WorkComp>& state, const ParamScalar& base) {
    std::vector<PlacedComponent> placed;
    placed.reserve(state.size());
    for (const auto& wc : state) {
        PlacedComponent pc;
        pc.comp.cells = wc.cells;
        pc.comp.base_content = base;
        pc.entries = wc.ranks;
        pc.canonicalize();
        placed.push_back(std::move(pc));
    }
    std::sort(placed.begin(), placed.end(),
              [](const PlacedComponent& x, const PlacedComponent& y) {
                  return compare_placed(x, y) < 0;
              });
    return placed;
}

// ref is the class base, so every base content differs from it by an integer
inline std::vector<long long> placed_list_key(
    const std::vector<PlacedComponent>& placed, const ParamScalar& ref) {
    std::vector<long long> key;
    for (const auto& p : placed) {
        key.push_back(-9);
        key.push_back(to_int((p.comp.base_content - ref).as_integer()));
        for (std::size_t i = 0; i < p.comp.cells.size(); ++i) {
            key.push_back(p.comp.cells[i].row);
            key.push_back(p.comp.cells[i].col);
            key.push_back(p.entries[i]);
        }
    }
    return key;
}

}  // namespace detail

// Places the cells of one content-coset class in word order. Each step starts
// a new component, attaches to one, or bridges two whose relative position
// the new cell pins down. Returns all deliberately-separate final placements,
// entries being 1-based word positions. deepest (optional) reports the
// furthest word position any branch placed.
inline std::vector<std::vector<PlacedComponent>> solve_class(
    const ParamScalar& base, const std::vector<int>& word,
    std::size_t* deepest = nullptr) {
    using detail::WorkComp;
    std::vector<std::vector<PlacedComponent>> solutions;
    std::set<std::vector<long long>> seen_states, seen_solutions;
    std::vector<WorkComp> state;
    std::size_t best = 0;

    auto step = [&](auto&& self, std::size_t j) -> void {
        best = std::max(best, j);
        if (j == word.size()) {
            for (const auto& wc : state)
                if (!detail::workcomp_valid(wc)) return;
            std::vector<SkewComponent> comps;
            for (const auto& wc : state) {
                SkewComponent sc;
                sc.cells = wc.cells;
                std::sort(sc.cells.begin(), sc.cells.end());
                sc.base_content = base;
                sc.canonicalize();
                comps.push_back(std::move(sc));
            }
            if (!components_separated(comps)) return;
            auto placed = detail::finalize_state(state, base);
            if (seen_solutions.insert(detail::placed_list_key(placed, base)).second)
                solutions.push_back(std::move(placed));
            return;
        }
        // a state at word position j holds exactly j cells, so the key
        // already separates depths
        if (!seen_states.insert(detail::state_key(state)).second) return;
        const int off = word[j];
        const int rank = static_cast<int>(j) + 1;

        // new singleton
        state.push_back({{Cell{0, off}}, {rank}});
        self(self, j + 1);
        state.pop_back();

        // attach to one component
        for (std::size_t k = 0; k < state.size(); ++k)
            for (const Cell& pos : detail::attach_positions(state[k], off)) {
                WorkComp saved = state[k];
                state[k].cells.push_back(pos);
                state[k].ranks.push_back(rank);
                if (detail::workcomp_valid(state[k])) self(self, j + 1);
                state[k] = std::move(saved);
            }

        // bridge two components: the new cell touches both, pinning the
        // diagonal translation of the second
        for (std::size_t k1 = 0; k1 < state.size(); ++k1)
            for (std::size_t k2 = 0; k2 < state.size(); ++k2) {
                if (k1 == k2) continue;
                for (const Cell& pos : detail::attach_positions(state[k1], off))
                    for (const Cell& x2 : state[k2].cells) {
                        int xoff = x2.col - x2.row;
                        std::vector<int> shifts;
                        if (xoff == off + 1) {
                            shifts.push_back(pos.row - x2.row);      // right of pos
                            shifts.push_back(pos.row - 1 - x2.row);  // above pos
                        } else if (xoff == off - 1) {
                            shifts.push_back(pos.row - x2.row);      // left of pos
                            shifts.push_back(pos.row + 1 - x2.row);  // below pos
                        } else {
                            continue;
                        }
                        for (int t : shifts) {
                            WorkComp merged = state[k1];
                            merged.cells.push_back(pos);
                            merged.ranks.push_back(rank);
                            bool overlap = false;
                            for (std::size_t ci = 0; ci < state[k2].cells.size();
                                 ++ci) {
                                Cell moved{state[k2].cells[ci].row + t,
                                           state[k2].cells[ci].col + t};
                                if (std::find(merged.cells.begin(),
                                              merged.cells.end(),
                                              moved) != merged.cells.end()) {
                                    overlap = true;
                                    break;
                                }
                                merged.cells.push_back(moved);
                                merged.ranks.push_back(state[k2].ranks[ci]);
                            }
                            if (overlap || !detail::workcomp_valid(merged))
                                continue;
                            std::vector<WorkComp> saved_state = state;
                            std::vector<WorkComp> next;
                            for (std::size_t i = 0; i < state.size(); ++i)
                                if (i != k1 && i != k2) next.push_back(state[i]);
                            next.push_back(std::move(merged));
                            state = std::move(next);
                            self(self, j + 1);
                            state = std::move(saved_state);
                        }
                    }
            }
    };
    step(step, 0);
    if (deepest) *deepest = best;
    return solutions;
}

// Exhaustive cross-check for solve_class: enumerate every deliberately
// separate configuration of the word's offset multiset, then every standard
// filling matching the word. Caps at 8 cells.
inline std::vector<std::vector<PlacedComponent>> brute_class(
    const ParamScalar& base, const std::vector<int>& word) {
    auto configs = class_configurations(base, word);
    std::vector<std::vector<PlacedComponent>> out;
    std::set<std::vector<long long>> seen;
    for (const auto& comps : configs) {
        if (!components_separated(comps)) continue;
        std::vector<std::vector<int>> entries;
        std::vector<long long> shift;
        for (const auto& c : comps) {
            entries.emplace_back(c.cells.size(), 0);
            shift.push_back(to_int((c.base_content - base).as_integer()));
        }
        auto rec = [&](auto&& self, std::size_t j) -> void {
            if (j == word.size()) {
                std::vector<PlacedComponent> placed;
                for (std::size_t ci = 0; ci < comps.size(); ++ci) {
                    PlacedComponent pc{comps[ci], entries[ci]};
                    pc.canonicalize();
                    placed.push_back(std::move(pc));
                }
                std::sort(placed.begin(), placed.end(),
                          [](const PlacedComponent& x, const PlacedComponent& y) {
                              return compare_placed(x, y) < 0;
                          });
                if (seen.insert(detail::placed_list_key(placed, base)).second)
                    out.push_back(std::move(placed));
                return;
            }
            for (std::size_t ci = 0; ci < comps.size(); ++ci)
                for (std::size_t i = 0; i < comps[ci].cells.size(); ++i) {
                    if (entries[ci][i] != 0) continue;
                    const Cell& c = comps[ci].cells[i];
                    if (shift[ci] + c.col - c.row != word[j]) continue;
                    bool ready = true;
                    for (std::size_t m = 0; m < comps[ci].cells.size(); ++m) {
                        const Cell& o = comps[ci].cells[m];
                        bool left = o.row == c.row && o.col == c.col - 1;
                        bool above = o.col == c.col && o.row == c.row - 1;
                        if ((left || above) && entries[ci][m] == 0) ready = false;
                    }
                    if (!ready) continue;
                    entries[ci][i] = static_cast<int>(j) + 1;
                    self(self, j + 1);
                    entries[ci][i] = 0;
                }
        };
        rec(rec, 0);
    }
    return out;
}

// Rebuild the filled diagram pair from eigenvalue cell contents and target
// lists, entries being 1-based input positions. Exactly one deliberately
// separate placement must exist per content class.
inline SkewTableau reconstruct_diagram(const std::vector<ParamScalar>& contents,
                                       const std::vector<int>& lists) {
    if (contents.size() != lists.size())
        throw domain_error("contents and lists must have equal length");
    SkewTableau st;
    for (int which = 0; which < 2; ++which) {
        std::vector<ParamScalar> sub;
        std::vector<std::size_t> sub_pos;
        for (std::size_t i = 0; i < contents.size(); ++i)
            if (lists[i] == which) {
                sub.push_back(contents[i]);
                sub_pos.push_back(i);
            }
        for (const auto& cc : group_by_coset(sub)) {
            std::size_t deepest = 0;
            auto sols = solve_class(cc.base, cc.offsets, &deepest);
            if (sols.empty()) {
                std::size_t at = std::min(deepest, cc.positions.size() - 1);
                std::size_t entry = sub_pos[cc.positions[at]] + 1;
                throw reconstruction_error(
                    "no placement for weight entry " + std::to_string(entry) +
                    " (content " + cc.base.to_string() + " class)");
            }
            if (sols.size() > 1) {
                std::size_t entry = sub_pos[cc.positions.back()] + 1;
                throw reconstruction_error(
                    "ambiguous placement through weight entry " +
                    std::to_string(entry) + ": " + std::to_string(sols.size()) +
                    " distinct diagrams");
            }
            for (auto& pc : sols.front()) {
                for (int& e : pc.entries)
                    e = static_cast<int>(
                            sub_pos[cc.positions[static_cast<std::size_t>(e) - 1]]) +
                        1;
                st.list(which).push_back(std::move(pc));
            }
        }
    }
    st.canonical_form();
    return st;
}

inline SkewTableau reconstruct_from_weights(const Params& par,
                                            const std::vector<WeightEntry>& ws) {
    std::vector<int> lists;
    lists.reserve(ws.size());
    for (const auto& w : ws) lists.push_back(w.list);
    return reconstruct_diagram(diagram_contents(par, ws), lists);
}

// Diagram of a filling. With check_all_p, every admissible entry order must
// yield the same underlying shape; otherwise only the canonical order runs.
inline SkewTableau diagram_of_q(const Bipartition& shape, const Params& par,
                                const QFilling& q, bool check_all_p = false) {
    ConstraintSet cs = resolve_constraints(shape, par);
    auto edges = p_forced_edges(cs, q);
    auto P = canonical_p(cs.box_list.size(), edges);
    SkewTableau st = reconstruct_from_weights(par, weight_sequence(shape, par, q, P));
    if (check_all_p) {
        SkewPair want = st.shape();
        want.canonical_form();
        for (const auto& alt : all_linear_extensions(cs.box_list.size(), edges)) {
            SkewTableau other =
                reconstruct_from_weights(par, weight_sequence(shape, par, q, alt));
            SkewPair got = other.shape();
            got.canonical_form();
            if (!(got == want))
                throw reconstruction_error(
                    "entry order changes the reconstructed shape");
        }
    }
    return st;
}

}  // namespace coinv
