#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <coinv/errors.hpp>

namespace coinv {

// A box of a bipartition: 1-based (row, col) inside component `comp` (0 or 1).
struct BBox {
    int row = 0;
    int col = 0;
    int comp = 0;

    friend auto operator<=>(const BBox&, const BBox&) = default;
};

inline std::string to_string(const BBox& b) {
    return "(" + std::to_string(b.row) + "," + std::to_string(b.col) + ")@" +
           std::to_string(b.comp);
}

// content(b) = col - row
inline int content(const BBox& b) { return b.col - b.row; }

// Componentwise order: same component, row <= row', col <= col'.
inline bool box_leq(const BBox& a, const BBox& b) {
    return a.comp == b.comp && a.row <= b.row && a.col <= b.col;
}

// Weakly decreasing positive parts.
using Partition = std::vector<int>;

inline void validate_partition(const Partition& p) {
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0)
            throw domain_error("partition part must be positive, got " +
                               std::to_string(p[i]));
        if (i > 0 && p[i] > p[i - 1])
            throw domain_error("partition parts must be weakly decreasing");
    }
}

inline int partition_size(const Partition& p) {
    int n = 0;
    for (int x : p) n += x;
    return n;
}

inline bool is_rectangle(const Partition& p) {
    for (std::size_t i = 1; i < p.size(); ++i)
        if (p[i] != p[0]) return false;
    return true;
}

// Boxes (row, col) whose removal leaves a partition, in top-to-bottom order.
inline std::vector<std::pair<int, int>> removable_boxes(const Partition& p) {
    std::vector<std::pair<int, int>> out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        bool last_of_len = (i + 1 == p.size()) || (p[i + 1] < p[i]);
        if (last_of_len) out.emplace_back(static_cast<int>(i) + 1, p[i]);
    }
    return out;
}

struct Bipartition {
    Partition p0;
    Partition p1;

    Bipartition() = default;
    Bipartition(Partition a, Partition b) : p0(std::move(a)), p1(std::move(b)) {
        validate_partition(p0);
        validate_partition(p1);
    }

    int size() const { return partition_size(p0) + partition_size(p1); }

    const Partition& part(int comp) const { return comp == 0 ? p0 : p1; }

    friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

// All boxes, component 0 first, each component row-major.
inline std::vector<BBox> boxes(const Bipartition& lam) {
    std::vector<BBox> out;
    out.reserve(static_cast<std::size_t>(lam.size()));
    for (int comp = 0; comp < 2; ++comp) {
        const Partition& p = lam.part(comp);
        for (std::size_t r = 0; r < p.size(); ++r)
            for (int c = 1; c <= p[r]; ++c)
                out.push_back({static_cast<int>(r) + 1, c, comp});
    }
    return out;
}

// "3,1,1" -> {3,1,1}; "" or "-" -> {}
inline Partition parse_partition(const std::string& s) {
    Partition p;
    if (s.empty() || s == "-") return p;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        std::string tok = s.substr(pos, next == std::string::npos ? std::string::npos
                                                                  : next - pos);
        if (tok.empty()) throw parse_error("empty partition part in '" + s + "'");
        for (char ch : tok)
            if (ch < '0' || ch > '9')
                throw parse_error("bad partition part '" + tok + "'");
        p.push_back(std::stoi(tok));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    validate_partition(p);
    return p;
}

// "3,1/2" -> ({3,1},{2}); "3,1" or "3,1/" or "3,1/-" -> ({3,1},{})
inline Bipartition parse_bipartition(const std::string& s) {
    std::size_t slash = s.find('/');
    if (slash == std::string::npos) return Bipartition(parse_partition(s), {});
    return Bipartition(parse_partition(s.substr(0, slash)),
                       parse_partition(s.substr(slash + 1)));
}

inline std::string to_string(const Partition& p) {
    if (p.empty()) return "-";
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(p[i]);
    }
    return s;
}

inline std::string to_string(const Bipartition& lam) {
    return to_string(lam.p0) + "/" + to_string(lam.p1);
}

}  // namespace coinv
