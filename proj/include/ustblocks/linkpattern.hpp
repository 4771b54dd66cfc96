#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ustblocks {

/// Planar pair partition of {1..2N}, stored in left-to-right orientation:
/// pairs (a_k, b_k) with a_1 < ... < a_N and a_k < b_k.
struct LinkPattern {
    std::vector<std::pair<int, int>> links;

    LinkPattern() = default;
    explicit LinkPattern(std::vector<std::pair<int, int>> ls) : links(std::move(ls)) {
        normalize();
    }

    int n_links() const { return static_cast<int>(links.size()); }
    int n_points() const { return 2 * n_links(); }

    void normalize() {
        for (auto& [a, b] : links)
            if (a > b) std::swap(a, b);
        std::sort(links.begin(), links.end());
    }

    /// Partner of index i (1-based).
    int partner(int i) const {
        for (const auto& [a, b] : links) {
            if (a == i) return b;
            if (b == i) return a;
        }
        throw std::out_of_range("index not in pattern");
    }

    bool is_perfect_matching() const {
        std::vector<int> seen(n_points() + 1, 0);
        for (const auto& [a, b] : links) {
            if (a < 1 || b > n_points() || a == b) return false;
            ++seen[a], ++seen[b];
        }
        for (int i = 1; i <= n_points(); ++i)
            if (seen[i] != 1) return false;
        return true;
    }

    /// No two links interleave as a < c < b < d.
    bool is_planar() const {
        for (size_t i = 0; i < links.size(); ++i)
            for (size_t j = i + 1; j < links.size(); ++j) {
                auto [a, b] = links[i];
                auto [c, d] = links[j];
                if (a < c && c < b && b < d) return false;
                if (c < a && a < d && d < b) return false;
            }
        return true;
    }

    /// Walk with +1 at left endpoints, -1 at right endpoints; entry j is the
    /// height after j steps (size 2N+1, starts and ends at 0).
    std::vector<int> dyck_path() const {
        const int n2 = n_points();
        std::vector<int> left(n2 + 1, 0);
        for (const auto& [a, b] : links) {
            left[a] = 1;
            left[b] = -1;
        }
        std::vector<int> path(n2 + 1, 0);
        for (int j = 1; j <= n2; ++j) path[j] = path[j - 1] + left[j];
        return path;
    }

    friend bool operator==(const LinkPattern& x, const LinkPattern& y) { return x.links == y.links; }
    friend bool operator<(const LinkPattern& x, const LinkPattern& y) { return x.links < y.links; }

    std::string str() const {
        std::string s = "[";
        for (size_t k = 0; k < links.size(); ++k) {
            if (k) s += ",";
            s += "[" + std::to_string(links[k].first) + "," + std::to_string(links[k].second) + "]";
        }
        return s + "]";
    }
};

/// Planar pattern from a non-negative walk via parenthesis matching.
inline LinkPattern pattern_from_dyck_path(const std::vector<int>& path) {
    const int n2 = static_cast<int>(path.size()) - 1;
    std::vector<std::pair<int, int>> links;
    std::vector<int> stack;
    for (int j = 1; j <= n2; ++j) {
        const int step = path[j] - path[j - 1];
        if (step == 1) {
            stack.push_back(j);
        } else if (step == -1) {
            if (stack.empty()) throw std::invalid_argument("walk dips below zero");
            links.emplace_back(stack.back(), j);
            stack.pop_back();
        } else {
            throw std::invalid_argument("walk increments must be +-1");
        }
    }
    if (!stack.empty()) throw std::invalid_argument("walk does not end at zero");
    return LinkPattern(std::move(links));
}

/// All planar pair partitions of {1..2N} in lexicographic order on the sorted
/// link lists.  Count is the Catalan number.
inline std::vector<LinkPattern> enumerate_link_patterns(int n) {
    if (n < 1) throw std::invalid_argument("enumerate_link_patterns: N >= 1 required");
    std::vector<LinkPattern> out;
    std::vector<std::pair<int, int>> cur;
    std::vector<bool> used(2 * n + 1, false);
    auto rec = [&](auto&& self) -> void {
        int a = 0;
        for (int i = 1; i <= 2 * n; ++i)
            if (!used[i]) {
                a = i;
                break;
            }
        if (a == 0) {
            out.emplace_back(cur);
            return;
        }
        used[a] = true;
        // a matches past unused indices only; a used index inside (a,b) would
        // force a crossing with an earlier link
        for (int b = a + 1; b <= 2 * n && !used[b]; ++b) {
            if ((b - a) % 2 == 0) continue;  // interior must pair up internally
            used[b] = true;
            cur.emplace_back(a, b);
            self(self);
            cur.pop_back();
            used[b] = false;
        }
        used[a] = false;
    };
    rec(rec);
    std::sort(out.begin(), out.end());
    return out;
}

/// Pointwise Dyck-path dominance: beta >= alpha.
inline bool dp_geq(const LinkPattern& beta, const LinkPattern& alpha) {
    if (beta.n_links() != alpha.n_links()) throw std::invalid_argument("dp_geq: size mismatch");
    auto pb = beta.dyck_path(), pa = alpha.dyck_path();
    for (size_t j = 0; j < pb.size(); ++j)
        if (pb[j] < pa[j]) return false;
    return true;
}

/// Valences: positive integers summing to 2N with max s_j <= N.
struct Valences {
    std::vector<int> s;

    Valences() = default;
    explicit Valences(std::vector<int> v) : s(std::move(v)) {
        int tot = 0;
        for (int x : s) {
            if (x <= 0) throw std::invalid_argument("valences must be positive");
            tot += x;
        }
        if (tot % 2 != 0) throw std::invalid_argument("valences must sum to an even number");
        for (int x : s)
            if (x > tot / 2) throw std::invalid_argument("valence exceeds N");
    }

    int d() const { return static_cast<int>(s.size()); }
    int two_n() const {
        int t = 0;
        for (int x : s) t += x;
        return t;
    }
    int n() const { return two_n() / 2; }

    /// q_j = s_1 + ... + s_j, with q_0 = 0; size d+1.
    std::vector<int> cumulative() const {
        std::vector<int> q(s.size() + 1, 0);
        for (size_t j = 0; j < s.size(); ++j) q[j + 1] = q[j] + s[j];
        return q;
    }

    /// Fused group (1-based) containing unfused index a.
    int group_of(int a) const {
        int q = 0;
        for (size_t j = 0; j < s.size(); ++j) {
            q += s[j];
            if (a <= q) return static_cast<int>(j) + 1;
        }
        throw std::out_of_range("index beyond 2N");
    }

    bool all_ones() const {
        return std::all_of(s.begin(), s.end(), [](int x) { return x == 1; });
    }

    friend bool operator==(const Valences& a, const Valences& b) { return a.s == b.s; }
};

/// Fused partial order: dominance plus path equality at all block boundaries.
inline bool fused_geq(const LinkPattern& beta, const LinkPattern& alpha, const Valences& vs) {
    if (!dp_geq(beta, alpha)) return false;
    auto pb = beta.dyck_path(), pa = alpha.dyck_path();
    for (int q : vs.cumulative())
        if (pb[q] != pa[q]) return false;
    return true;
}

/// Valenced link pattern: a multiset of group pairs {i,j}, i != j, where
/// group i has total degree s_i, together with its planar unfusing.
struct ValencedLinkPattern {
    Valences valences;
    std::vector<std::pair<int, int>> multilinks;  // sorted group pairs, with multiplicity
    LinkPattern iota;                             // the unfused N-link pattern

    std::string str() const {
        std::string s = "[";
        for (size_t k = 0; k < multilinks.size(); ++k) {
            if (k) s += ",";
            s += "[" + std::to_string(multilinks[k].first) + "," +
                 std::to_string(multilinks[k].second) + "]";
        }
        return s + "]";
    }

    friend bool operator==(const ValencedLinkPattern& a, const ValencedLinkPattern& b) {
        return a.valences == b.valences && a.multilinks == b.multilinks;
    }
    friend bool operator<(const ValencedLinkPattern& a, const ValencedLinkPattern& b) {
        return a.multilinks < b.multilinks;
    }
};

/// Collapse an unfused pattern to group pairs; sorted with multiplicity.
inline std::vector<std::pair<int, int>> collapse_links(const LinkPattern& p, const Valences& vs) {
    std::vector<std::pair<int, int>> out;
    for (const auto& [a, b] : p.links) {
        int ga = vs.group_of(a), gb = vs.group_of(b);
        out.emplace_back(std::min(ga, gb), std::max(ga, gb));
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Planar unfusing of a multiset of group pairs.  Within each block the walk
/// first descends (links arriving from the left) and then ascends (links
/// leaving to the right); parenthesis matching then fixes the nesting.
/// Returns nullopt when no planar unfusing reproduces the multiset.
inline std::optional<LinkPattern> try_unfuse(const std::vector<std::pair<int, int>>& multilinks,
                                             const Valences& vs) {
    const int d = vs.d();
    std::vector<int> down(d + 1, 0), up(d + 1, 0);
    for (const auto& [i, j] : multilinks) {
        if (i == j || i < 1 || j > d) return std::nullopt;
        up[std::min(i, j)] += 1;
        down[std::max(i, j)] += 1;
    }
    for (int j = 1; j <= d; ++j)
        if (down[j] + up[j] != vs.s[static_cast<size_t>(j - 1)]) return std::nullopt;
    std::vector<int> path;
    path.push_back(0);
    for (int j = 1; j <= d; ++j) {
        for (int k = 0; k < down[j]; ++k) path.push_back(path.back() - 1);
        for (int k = 0; k < up[j]; ++k) path.push_back(path.back() + 1);
    }
    for (int h : path)
        if (h < 0) return std::nullopt;
    if (path.back() != 0) return std::nullopt;
    LinkPattern unfused = pattern_from_dyck_path(path);
    auto collapsed = collapse_links(unfused, vs);
    auto sorted = multilinks;
    std::sort(sorted.begin(), sorted.end());
    if (collapsed != sorted) return std::nullopt;  // multiset was not planar
    return unfused;
}

inline ValencedLinkPattern make_valenced(const Valences& vs,
                                         std::vector<std::pair<int, int>> multilinks) {
    for (auto& [a, b] : multilinks)
        if (a > b) std::swap(a, b);
    std::sort(multilinks.begin(), multilinks.end());
    auto unf = try_unfuse(multilinks, vs);
    if (!unf) throw std::invalid_argument("not a planar valenced link pattern");
    return ValencedLinkPattern{vs, std::move(multilinks), *unf};
}

/// The unfusing map: split group i into s_i indices, attaching the link with
/// the leftmost far endpoint to the leftmost new index.
inline LinkPattern unfuse(const ValencedLinkPattern& a) { return a.iota; }

/// Is beta the unfusing of some valenced pattern?  True iff no link lies
/// inside a block and each block descends before it ascends.
inline bool is_unfused_image(const LinkPattern& beta, const Valences& vs) {
    auto q = vs.cumulative();
    for (const auto& [a, b] : beta.links)
        if (vs.group_of(a) == vs.group_of(b)) return false;
    auto path = beta.dyck_path();
    for (int j = 1; j <= vs.d(); ++j) {
        bool ascended = false;
        for (int x = q[j - 1] + 1; x <= q[j]; ++x) {
            const bool upstep = path[x] > path[x - 1];
            if (upstep) ascended = true;
            if (!upstep && ascended) return false;
        }
    }
    return true;
}

/// All valenced link patterns with the given valences; count equals the
/// number of row-strict Young tableaux of the Nx2 rectangle with content s.
inline std::vector<ValencedLinkPattern> enumerate_valenced(const Valences& vs) {
    std::vector<ValencedLinkPattern> out;
    for (const auto& beta : enumerate_link_patterns(vs.n()))
        if (is_unfused_image(beta, vs))
            out.push_back(ValencedLinkPattern{vs, collapse_links(beta, vs), beta});
    std::sort(out.begin(), out.end());
    return out;
}

/// Row-strict Young tableaux of the Nx2 rectangle with content s: rows
/// strictly increasing, columns weakly increasing downward, entry i used
/// s_i times.
inline long rsyt_count(const Valences& vs) {
    const int n = vs.n();
    std::vector<int> remaining(vs.s);
    long count = 0;
    // fill rows top to bottom; (l, r) = previous row
    auto rec = [&](auto&& self, int row, int pl, int pr) -> void {
        if (row == n) {
            ++count;
            return;
        }
        for (int l = pl; l <= vs.d(); ++l) {
            if (remaining[static_cast<size_t>(l - 1)] == 0) continue;
            --remaining[static_cast<size_t>(l - 1)];
            const int rmin = std::max(l + 1, row == 0 ? 1 : pr);
            for (int r = rmin; r <= vs.d(); ++r) {
                if (remaining[static_cast<size_t>(r - 1)] == 0) continue;
                --remaining[static_cast<size_t>(r - 1)];
                self(self, row + 1, l, r);
                ++remaining[static_cast<size_t>(r - 1)];
            }
            ++remaining[static_cast<size_t>(l - 1)];
        }
    };
    rec(rec, 0, 1, 1);
    return count;
}

}  // namespace ustblocks
