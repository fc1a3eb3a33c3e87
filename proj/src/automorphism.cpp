// Automorphism group order of a small graph by individualization/refinement.
//
// Partitions are ordered: cells are contiguous ranges of `elems` identified
// by their start position. Refinement splits cells by neighbor counts into
// splitter cells (equitable partition). Every step depends only on positions
// and counts, so the whole search tree is equivariant under automorphisms:
// an automorphism fixing the first i base vertices maps the first path onto
// a path below the node that individualizes its image of base vertex i.
//
// The order is the product over base levels of |orbit of b_i in the
// pointwise stabilizer of b_0..b_{i-1}|, levels processed deepest first so
// that generators found deeper already act on shallower orbits.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "pgq/error.hpp"
#include "pgq/grassmann.hpp"

namespace pgq {

namespace {

struct Partition {
  std::vector<int> elems, pos, cell_of, cell_end;
  int cells = 0;
};

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h * 0x100000001B3ULL;
}

class Search {
 public:
  Search(const Graph& g, std::uint64_t budget)
      : g_(g), n_(g.order()), budget_(budget), count_(n_, 0), cell_touched_(n_, 0),
        in_queue_(n_, 0) {}

  AutomorphismReport run() {
    AutomorphismReport rep;
    rep.group_order = 1;
    if (n_ == 0) return rep;

    Partition root;
    root.elems.resize(n_);
    std::iota(root.elems.begin(), root.elems.end(), 0);
    root.pos = root.elems;
    root.cell_of.assign(n_, 0);
    root.cell_end.assign(n_, 0);
    root.cell_end[0] = n_;
    root.cells = 1;
    refine(root, {0}, 0);

    // First path, smallest vertex of each target cell.
    Partition p = root;
    while (p.cells < n_) {
      const int c = target_cell(p);
      const int b = *std::min_element(p.elems.begin() + c, p.elems.begin() + p.cell_end[c]);
      levels_.push_back(p);
      targets_.push_back(c);
      base_.push_back(b);
      traces_.push_back(individualize(p, b));
    }
    leaf_ = p.elems;

    const int depth = static_cast<int>(levels_.size());
    std::vector<int> orbit_lengths(depth, 1);
    for (int i = depth - 1; i >= 0; --i) {
      const Partition& node = levels_[i];
      std::vector<int> cell(node.elems.begin() + targets_[i],
                            node.elems.begin() + node.cell_end[targets_[i]]);
      std::sort(cell.begin(), cell.end());
      std::vector<int> failed;
      for (int w : cell) {
        rebuild_orbits();
        if (find(w) == find(base_[i])) continue;
        if (std::any_of(failed.begin(), failed.end(), [&](int f) { return find(f) == find(w); }))
          continue;
        if (auto gen = search_below(i, w))
          generators_.push_back(std::move(*gen));
        else
          failed.push_back(w);
      }
      rebuild_orbits();
      orbit_lengths[i] = static_cast<int>(
          std::count_if(cell.begin(), cell.end(), [&](int v) { return find(v) == find(base_[i]); }));
    }

    for (int len : orbit_lengths) rep.group_order *= len;
    rep.generators = generators_;
    rep.base = base_;
    rep.orbit_lengths = orbit_lengths;
    rep.nodes = nodes_;
    rep.leaves = leaves_;
    return rep;
  }

 private:
  int target_cell(const Partition& p) const {
    int best = -1, best_size = n_ + 1;
    for (int k = 0; k < n_; k = p.cell_end[k]) {
      const int size = p.cell_end[k] - k;
      if (size > 1 && size < best_size) {
        best = k;
        best_size = size;
      }
    }
    return best;
  }

  std::uint64_t individualize(Partition& p, int v) {
    if (++nodes_ > budget_) throw BudgetExceeded("automorphism search exceeded node budget");
    const int s = p.cell_of[v], e = p.cell_end[s];
    const int at = p.pos[v];
    std::swap(p.elems[at], p.elems[s]);
    p.pos[p.elems[at]] = at;
    p.pos[v] = s;
    p.cell_end[s] = s + 1;
    p.cell_end[s + 1] = e;
    for (int k = s + 1; k < e; ++k) p.cell_of[p.elems[k]] = s + 1;
    ++p.cells;
    return refine(p, {s}, mix(0, static_cast<std::uint64_t>(s)));
  }

  std::uint64_t refine(Partition& p, std::vector<int> queue, std::uint64_t h) {
    for (int s : queue) in_queue_[s] = 1;
    std::vector<int> touched_vertices, touched_cells, bounds;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int s = queue[head];
      in_queue_[s] = 0;
      const int e = p.cell_end[s];
      h = mix(h, static_cast<std::uint64_t>(s) << 32 | static_cast<std::uint32_t>(e));
      touched_cells.clear();
      for (int k = s; k < e; ++k)
        for (int u : g_.neighbors(p.elems[k])) {
          if (count_[u]++ == 0) touched_vertices.push_back(u);
          const int c = p.cell_of[u];
          if (!cell_touched_[c]) {
            cell_touched_[c] = 1;
            touched_cells.push_back(c);
          }
        }
      std::sort(touched_cells.begin(), touched_cells.end());
      for (int c : touched_cells) {
        cell_touched_[c] = 0;
        const int ce = p.cell_end[c];
        if (ce - c == 1) {
          h = mix(h, static_cast<std::uint64_t>(c) << 32 | count_[p.elems[c]]);
          continue;
        }
        std::sort(p.elems.begin() + c, p.elems.begin() + ce,
                  [&](int x, int y) { return count_[x] < count_[y]; });
        bounds.clear();
        bounds.push_back(c);
        for (int k = c + 1; k < ce; ++k)
          if (count_[p.elems[k]] != count_[p.elems[k - 1]]) bounds.push_back(k);
        bounds.push_back(ce);
        for (int k = c; k < ce; ++k) p.pos[p.elems[k]] = k;
        for (std::size_t f = 0; f + 1 < bounds.size(); ++f)
          h = mix(h, static_cast<std::uint64_t>(bounds[f]) << 32 | count_[p.elems[bounds[f]]]);
        if (bounds.size() == 2) continue;
        for (std::size_t f = 0; f + 1 < bounds.size(); ++f) {
          const int fs = bounds[f], fe = bounds[f + 1];
          p.cell_end[fs] = fe;
          for (int k = fs; k < fe; ++k) p.cell_of[p.elems[k]] = fs;
          if (!in_queue_[fs]) {
            in_queue_[fs] = 1;
            queue.push_back(fs);
          }
        }
        p.cells += static_cast<int>(bounds.size()) - 2;
      }
      for (int u : touched_vertices) count_[u] = 0;
      touched_vertices.clear();
    }
    return mix(h, static_cast<std::uint64_t>(p.cells));
  }

  std::optional<std::vector<int>> search_below(int level, int w) {
    Partition q = levels_[level];
    if (individualize(q, w) != traces_[level]) return std::nullopt;
    return dfs(q, level + 1);
  }

  std::optional<std::vector<int>> dfs(const Partition& q, int level) {
    if (q.cells == n_) {
      ++leaves_;
      std::vector<int> sigma(n_);
      for (int k = 0; k < n_; ++k) sigma[leaf_[k]] = q.elems[k];
      if (is_automorphism(sigma)) return sigma;
      return std::nullopt;
    }
    const int c = target_cell(q);
    std::vector<int> cell(q.elems.begin() + c, q.elems.begin() + q.cell_end[c]);
    std::sort(cell.begin(), cell.end());
    for (int v : cell) {
      Partition r = q;
      if (individualize(r, v) != traces_[level]) continue;
      if (auto found = dfs(r, level + 1)) return found;
    }
    return std::nullopt;
  }

  bool is_automorphism(const std::vector<int>& sigma) const {
    for (int u = 0; u < n_; ++u)
      for (int v : g_.neighbors(u))
        if (!g_.adjacent(sigma[u], sigma[v])) return false;
    return true;
  }

  void rebuild_orbits() {
    parent_.resize(n_);
    std::iota(parent_.begin(), parent_.end(), 0);
    for (const auto& gen : generators_)
      for (int v = 0; v < n_; ++v) {
        const int a = find(v), b = find(gen[v]);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
      }
  }

  int find(int v) {
    while (parent_[v] != v) v = parent_[v] = parent_[parent_[v]];
    return v;
  }

  const Graph& g_;
  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0, leaves_ = 0;
  std::vector<int> count_;
  std::vector<char> cell_touched_, in_queue_;
  std::vector<Partition> levels_;
  std::vector<int> targets_, base_;
  std::vector<std::uint64_t> traces_;
  std::vector<int> leaf_;
  std::vector<std::vector<int>> generators_;
  std::vector<int> parent_;
};

}  // namespace

AutomorphismReport automorphism_group(const Graph& g, std::uint64_t node_budget) {
  if (g.order() > kMaxAutomorphismVertices)
    throw TooLarge("automorphism search limited to " +
                   std::to_string(kMaxAutomorphismVertices) + " vertices");
  return Search(g, node_budget).run();
}

AutomorphismReport automorphism_group(const GrassmannSpace& g, std::uint64_t node_budget) {
  return automorphism_group(g.graph(), node_budget);
}

}  // namespace pgq
