#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "ustblocks/linkpattern.hpp"

namespace ustblocks {

/// Number of cover-inclusive Dyck tilings of the skew shape between the
/// Dyck paths of `lower` and `upper`; 0 when upper is not >= lower, 1 for
/// the empty shape.
///
/// The region between the two walks decomposes into diamond cells with
/// centers (x, y), x in {1..2N-1}, y in {lower(x)+1, lower(x)+3, ...,
/// upper(x)-1}.  A Dyck tile is a run of cells at consecutive x whose
/// heights form a walk with +-1 steps that starts and ends at the same
/// height and never dips below it.  A tiling is cover-inclusive when the
/// downward translate (x, y) -> (x, y-2) of any tile is, for every other
/// tile, either disjoint from it or entirely contained in it.
class DyckTilingCounter {
  public:
    long count(const LinkPattern& lower, const LinkPattern& upper) {
        if (lower == upper) return 1;
        if (!dp_geq(upper, lower)) return 0;
        auto key = std::make_pair(lower.links, upper.links);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;

        auto pa = lower.dyck_path(), pb = upper.dyck_path();
        std::vector<Cell> cells;
        for (int x = 1; x < static_cast<int>(pa.size()) - 1; ++x)
            for (int y = pa[x] + 1; y <= pb[x] - 1; y += 2) cells.push_back({x, y});
        std::sort(cells.begin(), cells.end());

        long n = 0;
        std::vector<int> assign(cells.size(), -1);  // tile id per cell
        std::vector<std::vector<Cell>> tiles;
        enumerate(cells, assign, tiles, n);
        cache_.emplace(std::move(key), n);
        return n;
    }

  private:
    using Cell = std::pair<int, int>;

    static bool contains(const std::vector<Cell>& tile, const Cell& c) {
        return std::binary_search(tile.begin(), tile.end(), c);
    }

    static bool cover_inclusive(const std::vector<std::vector<Cell>>& tiles) {
        for (const auto& t : tiles) {
            for (const auto& u : tiles) {
                if (&t == &u) continue;
                bool meets = false, inside = true;
                for (const auto& [x, y] : t) {
                    const Cell down{x, y - 2};
                    if (contains(u, down))
                        meets = true;
                    else
                        inside = false;
                }
                if (meets && !inside) return false;
            }
        }
        return true;
    }

    void enumerate(const std::vector<Cell>& cells, std::vector<int>& assign,
                   std::vector<std::vector<Cell>>& tiles, long& n) {
        size_t first = 0;
        while (first < cells.size() && assign[first] >= 0) ++first;
        if (first == cells.size()) {
            if (cover_inclusive(tiles)) ++n;
            return;
        }
        // every tile containing the minimal free cell starts at it
        std::map<Cell, size_t> index;
        for (size_t i = 0; i < cells.size(); ++i) index[cells[i]] = i;
        std::vector<Cell> tile{cells[first]};
        std::vector<size_t> taken{first};
        auto extend = [&](auto&& self, Cell cur) -> void {
            // close the tile here if the walk is back at its base height
            if (cur.second == cells[first].second) {
                const int id = static_cast<int>(tiles.size());
                for (size_t i : taken) assign[i] = id;
                tiles.push_back(tile);
                enumerate(cells, assign, tiles, n);
                tiles.pop_back();
                for (size_t i : taken) assign[i] = -1;
            }
            for (int dy : {+1, -1}) {
                Cell nxt{cur.first + 1, cur.second + dy};
                if (nxt.second < cells[first].second) continue;
                auto it = index.find(nxt);
                if (it == index.end() || assign[it->second] >= 0) continue;
                tile.push_back(nxt);
                taken.push_back(it->second);
                self(self, nxt);
                tile.pop_back();
                taken.pop_back();
            }
        };
        extend(extend, cells[first]);
    }

    std::map<std::pair<std::vector<std::pair<int, int>>, std::vector<std::pair<int, int>>>, long>
        cache_;
};

/// Convenience wrapper with a shared cache.
inline long count_tilings(const LinkPattern& lower, const LinkPattern& upper) {
    static thread_local DyckTilingCounter counter;
    return counter.count(lower, upper);
}

}  // namespace ustblocks
