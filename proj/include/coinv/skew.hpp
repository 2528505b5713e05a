#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <coinv/errors.hpp>
#include <coinv/param_scalar.hpp>

namespace coinv {

struct Cell {
    int row = 0;
    int col = 0;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string to_string(const Cell& c) {
    return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")";
}

// Skew validity: cells distinct, every axis-aligned rectangle spanned by two
// comparable cells is filled, and the whole set is edge-connected.
inline bool cells_valid_skew(const std::vector<Cell>& cells) {
    if (cells.empty()) return false;
    std::set<Cell> present(cells.begin(), cells.end());
    if (present.size() != cells.size()) return false;
    for (const Cell& a : cells)
        for (const Cell& b : cells) {
            if (a.row > b.row || a.col > b.col) continue;
            for (int r = a.row; r <= b.row; ++r)
                for (int c = a.col; c <= b.col; ++c)
                    if (!present.count({r, c})) return false;
        }
    std::vector<Cell> queue{cells.front()};
    std::set<Cell> seen{cells.front()};
    while (!queue.empty()) {
        Cell c = queue.back();
        queue.pop_back();
        for (Cell nb : {Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1},
                        Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}})
            if (present.count(nb) && seen.insert(nb).second) queue.push_back(nb);
    }
    return seen.size() == cells.size();
}

// Connected skew shape with a content anchor: the cell diagonal col - row == 0
// carries content base_content, so content(cell) = base_content + col - row.
// Canonical form: min row 0, min (col - row) 0, cells sorted.
struct SkewComponent {
    std::vector<Cell> cells;
    ParamScalar base_content;

    SkewComponent() = default;
    SkewComponent(std::vector<Cell> cs, ParamScalar base)
        : cells(std::move(cs)), base_content(std::move(base)) {
        std::sort(cells.begin(), cells.end());
    }

    ParamScalar content_of(const Cell& c) const {
        return base_content + ParamScalar(Rational(c.col - c.row));
    }

    std::vector<int> offsets() const {
        std::vector<int> out;
        out.reserve(cells.size());
        for (const Cell& c : cells) out.push_back(c.col - c.row);
        return out;
    }

    bool is_valid() const { return cells_valid_skew(cells); }

    void canonicalize() {
        if (cells.empty()) return;
        std::sort(cells.begin(), cells.end());
        int minrow = cells.front().row;
        int minoff = cells.front().col - cells.front().row;
        for (const Cell& c : cells) {
            minrow = std::min(minrow, c.row);
            minoff = std::min(minoff, c.col - c.row);
        }
        for (Cell& c : cells) {
            c.row -= minrow;
            c.col -= minrow + minoff;
        }
        base_content += ParamScalar(Rational(minoff));
        std::sort(cells.begin(), cells.end());
    }

    friend bool operator==(const SkewComponent& a, const SkewComponent& b) {
        return a.base_content == b.base_content && a.cells == b.cells;
    }
};

inline int compare_components(const SkewComponent& a, const SkewComponent& b) {
    if (int c = ParamScalar::compare(a.base_content, b.base_content); c != 0)
        return c;
    if (a.cells.size() != b.cells.size())
        return a.cells.size() < b.cells.size() ? -1 : 1;
    if (a.cells != b.cells) return a.cells < b.cells ? -1 : 1;
    return 0;
}

inline std::string to_string(const SkewComponent& sc) {
    std::string s = "{base=" + sc.base_content.to_string() + ";";
    for (const Cell& c : sc.cells) s += " " + to_string(c);
    return s + "}";
}

// No two cells of one component in the same row.
inline bool component_is_vertical_strip(const SkewComponent& sc) {
    for (std::size_t i = 1; i < sc.cells.size(); ++i)
        if (sc.cells[i].row == sc.cells[i - 1].row) return false;
    return true;
}

// Whether two components of one list could form a single valid connected
// component under some diagonal translation (contents are diagonal-invariant,
// so diagonal shifts are the only content-preserving moves). Components in
// different content cosets can never merge.
inline bool mergeable(const SkewComponent& a, const SkewComponent& b) {
    ParamScalar diff = b.base_content - a.base_content;
    if (!diff.is_integer()) return false;
    int delta = to_int(diff.as_integer());
    int minr_a = a.cells.front().row, maxr_a = a.cells.front().row;
    for (const Cell& c : a.cells) {
        minr_a = std::min(minr_a, c.row);
        maxr_a = std::max(maxr_a, c.row);
    }
    int minr_b = b.cells.front().row, maxr_b = b.cells.front().row;
    for (const Cell& c : b.cells) {
        minr_b = std::min(minr_b, c.row);
        maxr_b = std::max(maxr_b, c.row);
    }
    for (int t = minr_a - 1 - maxr_b; t <= maxr_a + 1 - minr_b; ++t) {
        std::vector<Cell> u = a.cells;
        bool overlap = false;
        for (const Cell& c : b.cells) {
            Cell moved{c.row + t, c.col + t + delta};
            if (std::find(u.begin(), u.end(), moved) != u.end()) {
                overlap = true;
                break;
            }
            u.push_back(moved);
        }
        if (overlap) continue;
        std::sort(u.begin(), u.end());
        if (cells_valid_skew(u)) return true;
    }
    return false;
}

// A list of components is deliberately separate when no same-coset pair could
// have been drawn as one connected component instead.
inline bool components_separated(const std::vector<SkewComponent>& comps) {
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j)
            if (mergeable(comps[i], comps[j])) return false;
    return true;
}

// Pair of component lists (one per alternating-sign class).
struct SkewPair {
    std::vector<SkewComponent> d0;
    std::vector<SkewComponent> d1;

    std::vector<SkewComponent>& list(int which) { return which == 0 ? d0 : d1; }
    const std::vector<SkewComponent>& list(int which) const {
        return which == 0 ? d0 : d1;
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& c : d0) n += c.cells.size();
        for (const auto& c : d1) n += c.cells.size();
        return n;
    }

    void canonical_form() {
        for (auto* lst : {&d0, &d1}) {
            for (auto& c : *lst) c.canonicalize();
            std::sort(lst->begin(), lst->end(),
                      [](const SkewComponent& x, const SkewComponent& y) {
                          return compare_components(x, y) < 0;
                      });
        }
    }

    bool validate() const {
        for (const auto* lst : {&d0, &d1})
            for (const auto& c : *lst)
                if (!c.is_valid()) return false;
        return components_separated(d0) && components_separated(d1);
    }

    bool is_vertical_strip(int which) const {
        for (const auto& c : list(which))
            if (!component_is_vertical_strip(c)) return false;
        return true;
    }

    friend bool operator==(const SkewPair&, const SkewPair&) = default;
};

inline std::string to_string(const SkewPair& sp) {
    std::string s = "D0[";
    for (const auto& c : sp.d0) s += to_string(c);
    s += "] D1[";
    for (const auto& c : sp.d1) s += to_string(c);
    return s + "]";
}

// Component with one entry per cell (parallel to cells).
struct PlacedComponent {
    SkewComponent comp;
    std::vector<int> entries;

    void canonicalize() {
        std::vector<std::pair<Cell, int>> z;
        z.reserve(comp.cells.size());
        for (std::size_t i = 0; i < comp.cells.size(); ++i)
            z.emplace_back(comp.cells[i], entries[i]);
        std::sort(z.begin(), z.end());
        comp.cells.clear();
        entries.clear();
        for (auto& [c, e] : z) {
            comp.cells.push_back(c);
            entries.push_back(e);
        }
        // translation preserves lexicographic cell order, so the re-sort
        // inside canonicalize() leaves the entry pairing intact
        comp.canonicalize();
    }

    friend bool operator==(const PlacedComponent&, const PlacedComponent&) = default;
};

inline int compare_placed(const PlacedComponent& a, const PlacedComponent& b) {
    if (int c = compare_components(a.comp, b.comp); c != 0) return c;
    if (a.entries != b.entries) return a.entries < b.entries ? -1 : 1;
    return 0;
}

// Entry-filled pair of component lists.
struct SkewTableau {
    std::vector<PlacedComponent> d0;
    std::vector<PlacedComponent> d1;

    std::vector<PlacedComponent>& list(int which) { return which == 0 ? d0 : d1; }
    const std::vector<PlacedComponent>& list(int which) const {
        return which == 0 ? d0 : d1;
    }

    SkewPair shape() const {
        SkewPair sp;
        for (const auto& p : d0) sp.d0.push_back(p.comp);
        for (const auto& p : d1) sp.d1.push_back(p.comp);
        return sp;
    }

    std::size_t size() const {
        std::size_t n = 0;
        for (const auto& p : d0) n += p.entries.size();
        for (const auto& p : d1) n += p.entries.size();
        return n;
    }

    void canonical_form() {
        for (auto* lst : {&d0, &d1}) {
            for (auto& p : *lst) p.canonicalize();
            std::sort(lst->begin(), lst->end(),
                      [](const PlacedComponent& x, const PlacedComponent& y) {
                          return compare_placed(x, y) < 0;
                      });
        }
    }

    // Entries are a bijection to {1..n}, increasing along rows and columns
    // inside each component.
    bool is_standard() const {
        std::size_t n = size();
        std::vector<bool> used(n + 1, false);
        for (const auto* lst : {&d0, &d1})
            for (const auto& p : *lst) {
                std::set<Cell> pos(p.comp.cells.begin(), p.comp.cells.end());
                for (std::size_t i = 0; i < p.comp.cells.size(); ++i) {
                    int e = p.entries[i];
                    if (e < 1 || e > static_cast<int>(n) || used[e]) return false;
                    used[e] = true;
                    const Cell& c = p.comp.cells[i];
                    for (std::size_t j = 0; j < p.comp.cells.size(); ++j) {
                        const Cell& o = p.comp.cells[j];
                        bool left = o.row == c.row && o.col == c.col - 1;
                        bool above = o.col == c.col && o.row == c.row - 1;
                        if ((left || above) && p.entries[j] >= e) return false;
                    }
                }
            }
        return true;
    }

    friend bool operator==(const SkewTableau&, const SkewTableau&) = default;
};

inline std::string to_string(const SkewTableau& st) {
    std::string s;
    for (int which = 0; which < 2; ++which) {
        s += which == 0 ? "D0[" : " D1[";
        for (const auto& p : st.list(which)) {
            s += to_string(p.comp) + "<";
            for (std::size_t i = 0; i < p.entries.size(); ++i) {
                if (i) s += ',';
                s += std::to_string(p.entries[i]);
            }
            s += ">";
        }
        s += "]";
    }
    return s;
}

namespace detail {

// All connected skew shapes realizing the given content-offset multiset
// (offsets normalized so min == 0). Shapes come out canonical: row 0 on top,
// content coordinate g sits at cell (r, g + r).
inline std::vector<std::vector<Cell>> connected_shapes(std::vector<int> offsets) {
    std::vector<std::vector<Cell>> results;
    if (offsets.empty()) return results;
    std::sort(offsets.begin(), offsets.end());
    int M = offsets.back();
    std::vector<int> cnt(static_cast<std::size_t>(M) + 1, 0);
    for (int o : offsets) {
        if (o < 0) throw domain_error("content offsets must be normalized to min 0");
        ++cnt[static_cast<std::size_t>(o)];
    }
    int remaining = static_cast<int>(offsets.size());
    std::vector<Cell> acc;

    auto rec = [&](auto&& self, int r, int pa, int pb) -> void {
        if (remaining == 0) {
            std::vector<Cell> shape = acc;
            std::sort(shape.begin(), shape.end());
            results.push_back(std::move(shape));
            return;
        }
        int alo = 0, ahi = M, blo_base = 0;
        if (r > 0) {
            ahi = pa - 1;
            blo_base = pa - 1;
        }
        for (int a = alo; a <= ahi; ++a) {
            int bhi = r > 0 ? pb - 1 : M;
            for (int b = std::max(a, blo_base); b <= bhi; ++b) {
                bool ok = true;
                for (int g = a; g <= b && ok; ++g)
                    if (cnt[static_cast<std::size_t>(g)] == 0) ok = false;
                if (!ok) continue;
                for (int g = a; g <= b; ++g) {
                    --cnt[static_cast<std::size_t>(g)];
                    acc.push_back({r, g + r});
                }
                remaining -= b - a + 1;
                self(self, r + 1, a, b);
                remaining += b - a + 1;
                for (int g = a; g <= b; ++g) {
                    ++cnt[static_cast<std::size_t>(g)];
                    acc.pop_back();
                }
            }
        }
    };
    rec(rec, 0, 0, 0);
    return results;
}

struct OffsetPart {
    int base = 0;             // min offset the part consumes
    std::vector<Cell> cells;  // canonical shape of the part
};

inline std::vector<long long> part_key(const OffsetPart& p) {
    std::vector<long long> k{p.base, static_cast<long long>(p.cells.size())};
    for (const Cell& c : p.cells) {
        k.push_back(c.row);
        k.push_back(c.col);
    }
    return k;
}

// All ways to split an offset multiset into connected parts. Raw: no
// separateness filtering, so touching splits coexist with their merged shape.
inline std::vector<std::vector<OffsetPart>> offset_decompositions(
    std::vector<int> offsets) {
    std::sort(offsets.begin(), offsets.end());
    std::vector<std::vector<OffsetPart>> results;
    std::set<std::vector<long long>> seen;
    std::vector<OffsetPart> parts;

    auto emit = [&]() {
        std::vector<OffsetPart> cfg = parts;
        std::sort(cfg.begin(), cfg.end(),
                  [](const OffsetPart& x, const OffsetPart& y) {
                      return part_key(x) < part_key(y);
                  });
        std::vector<long long> key;
        for (const auto& p : cfg) {
            auto pk = part_key(p);
            key.push_back(-1);
            key.insert(key.end(), pk.begin(), pk.end());
        }
        if (seen.insert(std::move(key)).second) results.push_back(std::move(cfg));
    };

    auto split = [&](auto&& self, const std::vector<int>& rem) -> void {
        if (rem.empty()) {
            emit();
            return;
        }
        // distinct values with multiplicities; first value must be taken >= 1
        std::vector<std::pair<int, int>> vals;
        for (int o : rem) {
            if (!vals.empty() && vals.back().first == o)
                ++vals.back().second;
            else
                vals.emplace_back(o, 1);
        }
        std::vector<int> take(vals.size(), 0);
        auto choose = [&](auto&& inner, std::size_t idx) -> void {
            if (idx == vals.size()) {
                std::vector<int> sub, rest;
                for (std::size_t i = 0; i < vals.size(); ++i) {
                    for (int j = 0; j < take[i]; ++j) sub.push_back(vals[i].first);
                    for (int j = take[i]; j < vals[i].second; ++j)
                        rest.push_back(vals[i].first);
                }
                if (sub.empty()) return;
                int m = sub.front();
                std::vector<int> norm;
                for (int o : sub) norm.push_back(o - m);
                for (auto& shape : connected_shapes(norm)) {
                    parts.push_back({m, std::move(shape)});
                    self(self, rest);
                    parts.pop_back();
                }
                return;
            }
            int lo = idx == 0 ? 1 : 0;
            for (int t = lo; t <= vals[idx].second; ++t) {
                take[idx] = t;
                inner(inner, idx + 1);
            }
            take[idx] = 0;
        };
        choose(choose, 0);
    };
    split(split, offsets);
    return results;
}

}  // namespace detail

// Contents grouped by integer-difference class, in order of first appearance.
// base is the minimal content; offsets (parallel to positions) are relative
// to base with min 0; positions index the input sequence, ascending.
struct ContentClass {
    ParamScalar base;
    std::vector<std::size_t> positions;
    std::vector<int> offsets;
};

inline std::vector<ContentClass> group_by_coset(
    const std::vector<ParamScalar>& contents) {
    struct Raw {
        ParamScalar rep;
        std::vector<std::size_t> pos;
        std::vector<int> off;
    };
    std::vector<Raw> raws;
    for (std::size_t i = 0; i < contents.size(); ++i) {
        bool placed = false;
        for (Raw& r : raws) {
            ParamScalar diff = contents[i] - r.rep;
            if (diff.is_integer()) {
                r.pos.push_back(i);
                r.off.push_back(to_int(diff.as_integer()));
                placed = true;
                break;
            }
        }
        if (!placed) raws.push_back({contents[i], {i}, {0}});
    }
    std::vector<ContentClass> out;
    for (Raw& r : raws) {
        int m = *std::min_element(r.off.begin(), r.off.end());
        ContentClass cc;
        cc.base = r.rep + ParamScalar(Rational(m));
        cc.positions = std::move(r.pos);
        for (int o : r.off) cc.offsets.push_back(o - m);
        out.push_back(std::move(cc));
    }
    return out;
}

// All component configurations of one coset class realizing the given offset
// multiset. Raw decompositions: no separateness filtering here.
inline std::vector<std::vector<SkewComponent>> class_configurations(
    const ParamScalar& base, const std::vector<int>& offsets) {
    if (offsets.size() > 8)
        throw limit_error("coset class has " + std::to_string(offsets.size()) +
                          " cells; exhaustive shape enumeration caps at 8");
    std::vector<std::vector<SkewComponent>> out;
    for (auto& cfg : detail::offset_decompositions(offsets)) {
        std::vector<SkewComponent> comps;
        for (auto& part : cfg)
            comps.emplace_back(part.cells, base + ParamScalar(Rational(part.base)));
        out.push_back(std::move(comps));
    }
    return out;
}

// All component configurations realizing a content multiset, across all coset
// classes (cartesian product of per-class configurations). Components in each
// configuration are sorted canonically.
inline std::vector<std::vector<SkewComponent>> enumerate_skew_shapes(
    const std::vector<ParamScalar>& contents) {
    auto classes = group_by_coset(contents);
    std::vector<std::vector<SkewComponent>> acc{{}};
    for (const auto& cc : classes) {
        auto cfgs = class_configurations(cc.base, cc.offsets);
        std::vector<std::vector<SkewComponent>> next;
        for (const auto& partial : acc)
            for (const auto& cfg : cfgs) {
                std::vector<SkewComponent> merged = partial;
                merged.insert(merged.end(), cfg.begin(), cfg.end());
                next.push_back(std::move(merged));
            }
        acc = std::move(next);
    }
    for (auto& cfg : acc)
        std::sort(cfg.begin(), cfg.end(),
                  [](const SkewComponent& x, const SkewComponent& y) {
                      return compare_components(x, y) < 0;
                  });
    if (contents.empty()) acc.clear();
    return acc;
}

// All standard fillings of a configuration: entries 1..n with rows and
// columns increasing inside each component, any order across components.
// Configurations with repeated identical components are deduplicated up to
// swapping those components.
inline std::vector<std::vector<PlacedComponent>> enumerate_standard_tableaux(
    const std::vector<SkewComponent>& comps) {
    std::size_t total = 0;
    for (const auto& c : comps) total += c.cells.size();
    if (total > 10)
        throw limit_error("configuration has " + std::to_string(total) +
                          " cells; exhaustive filling enumeration caps at 10");
    std::vector<std::vector<PlacedComponent>> out;
    std::set<std::vector<long long>> seen;
    std::vector<std::vector<int>> entries;
    for (const auto& c : comps)
        entries.emplace_back(c.cells.size(), 0);

    auto addable = [&](std::size_t ci, std::size_t i) {
        if (entries[ci][i] != 0) return false;
        const auto& cells = comps[ci].cells;
        const Cell& c = cells[i];
        for (std::size_t j = 0; j < cells.size(); ++j) {
            const Cell& o = cells[j];
            bool left = o.row == c.row && o.col == c.col - 1;
            bool above = o.col == c.col && o.row == c.row - 1;
            if ((left || above) && entries[ci][j] == 0) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int next) -> void {
        if (next > static_cast<int>(total)) {
            std::vector<PlacedComponent> placed;
            for (std::size_t ci = 0; ci < comps.size(); ++ci)
                placed.push_back({comps[ci], entries[ci]});
            std::sort(placed.begin(), placed.end(),
                      [](const PlacedComponent& x, const PlacedComponent& y) {
                          return compare_placed(x, y) < 0;
                      });
            std::vector<long long> key;
            for (const auto& p : placed) {
                auto pk = detail::part_key({0, p.comp.cells});
                key.push_back(-1);
                key.insert(key.end(), pk.begin(), pk.end());
                key.push_back(-2);
                for (int e : p.entries) key.push_back(e);
            }
            if (seen.insert(std::move(key)).second) out.push_back(std::move(placed));
            return;
        }
        for (std::size_t ci = 0; ci < comps.size(); ++ci)
            for (std::size_t i = 0; i < comps[ci].cells.size(); ++i)
                if (addable(ci, i)) {
                    entries[ci][i] = next;
                    self(self, next + 1);
                    entries[ci][i] = 0;
                }
    };
    rec(rec, 1);
    return out;
}

}  // namespace coinv
