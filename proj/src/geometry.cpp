#include "pgq/geometry.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "pgq/error.hpp"

namespace pgq {

namespace {

constexpr int kDensePairLimit = 1024;

}  // namespace

bool Geometry::incident(int point, int line) const {
  auto pts = line_points(line);
  return std::binary_search(pts.begin(), pts.end(), point);
}

std::optional<int> Geometry::common_point(int a, int b) const {
  auto pa = line_points(a), pb = line_points(b);
  auto i = pa.begin(), j = pb.begin();
  while (i != pa.end() && j != pb.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return *i;
  }
  return std::nullopt;
}

bool Geometry::collinear(int a, int b, int c) const {
  const int l = line_through(a, b);
  return l >= 0 && incident(c, l);
}

const char* to_string(Provenance p) {
  switch (p) {
    case Provenance::Native: return "native";
    case Provenance::Quotient: return "quotient";
    case Provenance::Dual: return "dual";
  }
  return "?";
}

IncidenceStructure::IncidenceStructure(std::vector<int> point_labels,
                                       std::vector<std::vector<int>> lines,
                                       Provenance provenance, int dimension)
    : labels_(std::move(point_labels)), provenance_(provenance), dimension_(dimension) {
  const int n = static_cast<int>(labels_.size());
  for (auto& l : lines) {
    std::sort(l.begin(), l.end());
    if (l.size() < 2) throw InvalidStructure("line with fewer than 2 points");
    if (std::adjacent_find(l.begin(), l.end()) != l.end())
      throw InvalidStructure("line repeats a point");
    if (l.front() < 0 || l.back() >= n) throw InvalidStructure("line references unknown point");
  }
  {
    std::vector<const std::vector<int>*> sorted;
    for (const auto& l : lines) sorted.push_back(&l);
    std::sort(sorted.begin(), sorted.end(), [](auto* x, auto* y) { return *x < *y; });
    for (std::size_t i = 1; i < sorted.size(); ++i)
      if (*sorted[i] == *sorted[i - 1]) throw InvalidStructure("repeated line point set");
  }

  line_offsets_.push_back(0);
  std::vector<int> degree(n, 0);
  for (const auto& l : lines) {
    line_data_.insert(line_data_.end(), l.begin(), l.end());
    line_offsets_.push_back(static_cast<int>(line_data_.size()));
    for (int p : l) ++degree[p];
  }
  through_offsets_.assign(n + 1, 0);
  for (int p = 0; p < n; ++p) through_offsets_[p + 1] = through_offsets_[p] + degree[p];
  through_data_.resize(through_offsets_[n]);
  std::vector<int> fill(through_offsets_.begin(), through_offsets_.end() - 1);
  for (int li = 0; li < static_cast<int>(lines.size()); ++li)
    for (int p : lines[li]) through_data_[fill[p]++] = li;

  if (n <= kDensePairLimit) {
    pair_line_.assign(static_cast<std::size_t>(n) * n, -1);
    for (int li = 0; li < static_cast<int>(lines.size()); ++li)
      for (int a : lines[li])
        for (int b : lines[li]) {
          auto& slot = pair_line_[static_cast<std::size_t>(a) * n + b];
          if (a != b && slot < 0) slot = li;
        }
  }
}

std::span<const int> IncidenceStructure::line_points(int line) const {
  return {line_data_.data() + line_offsets_[line],
          static_cast<std::size_t>(line_offsets_[line + 1] - line_offsets_[line])};
}

std::span<const int> IncidenceStructure::lines_through(int point) const {
  return {through_data_.data() + through_offsets_[point],
          static_cast<std::size_t>(through_offsets_[point + 1] - through_offsets_[point])};
}

int IncidenceStructure::line_through(int a, int b) const {
  if (!pair_line_.empty()) return pair_line_[static_cast<std::size_t>(a) * point_count() + b];
  auto la = lines_through(a), lb = lines_through(b);
  auto i = la.begin(), j = lb.begin();
  while (i != la.end() && j != lb.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return *i;
  }
  return -1;
}

std::vector<int> plane_pencil(const Geometry& g, int centre, int l1, int l2) {
  auto other_point = [&](int l) {
    for (int p : g.line_points(l))
      if (p != centre) return p;
    throw InvalidStructure("line has no point besides the centre");
  };
  const int a = other_point(l1), b = other_point(l2);
  const int m = g.line_through(a, b);
  if (m < 0) throw InvalidStructure("no line joins two points");
  std::vector<int> out;
  for (int c : g.line_points(m)) {
    if (c == centre) throw InvalidStructure("lines through the centre do not span a plane");
    const int l = g.line_through(centre, c);
    if (l < 0) throw InvalidStructure("no line joins two points");
    out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

IncidenceStructure quotient(const Geometry& g, int centre) {
  auto star_span = g.lines_through(centre);
  std::vector<int> star(star_span.begin(), star_span.end());
  const int s = static_cast<int>(star.size());
  auto index_of = [&](int line) {
    return static_cast<int>(std::lower_bound(star.begin(), star.end(), line) - star.begin());
  };

  std::vector<bool> covered(static_cast<std::size_t>(s) * s, false);
  std::vector<std::vector<int>> lines;
  for (int i = 0; i < s; ++i)
    for (int j = i + 1; j < s; ++j) {
      if (covered[static_cast<std::size_t>(i) * s + j]) continue;
      std::vector<int> members;
      for (int l : plane_pencil(g, centre, star[i], star[j])) members.push_back(index_of(l));
      for (int x : members)
        for (int y : members) covered[static_cast<std::size_t>(x) * s + y] = true;
      lines.push_back(std::move(members));
    }
  std::sort(lines.begin(), lines.end());
  return IncidenceStructure(std::move(star), std::move(lines), Provenance::Quotient,
                            g.dimension() - 1);
}

IncidenceStructure native_structure(const Geometry& g) {
  std::vector<int> labels(g.point_count());
  for (int i = 0; i < g.point_count(); ++i) labels[i] = i;
  std::vector<std::vector<int>> lines;
  lines.reserve(g.line_count());
  for (int l = 0; l < g.line_count(); ++l) {
    auto pts = g.line_points(l);
    lines.emplace_back(pts.begin(), pts.end());
  }
  return IncidenceStructure(std::move(labels), std::move(lines), Provenance::Native,
                            g.dimension());
}

IncidenceStructure dual_structure(const Geometry& g) {
  if (g.dimension() != 3) throw UnsupportedDimension("dual_structure needs a 3-dimensional space");
  std::set<std::vector<int>> planes;
  for (int x = 0; x < g.point_count(); ++x) {
    auto st = g.lines_through(x);
    for (std::size_t i = 0; i < st.size(); ++i)
      for (std::size_t j = i + 1; j < st.size(); ++j) {
        std::vector<int> pts;
        for (int l : plane_pencil(g, x, st[i], st[j])) {
          auto lp = g.line_points(l);
          pts.insert(pts.end(), lp.begin(), lp.end());
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        planes.insert(std::move(pts));
      }
  }
  std::vector<std::vector<int>> plane_list(planes.begin(), planes.end());
  std::vector<std::vector<int>> lines(g.line_count());
  for (int l = 0; l < g.line_count(); ++l) {
    auto lp = g.line_points(l);
    for (int pi = 0; pi < static_cast<int>(plane_list.size()); ++pi)
      if (std::includes(plane_list[pi].begin(), plane_list[pi].end(), lp.begin(), lp.end()))
        lines[l].push_back(pi);
  }
  std::vector<int> labels(plane_list.size());
  for (std::size_t i = 0; i < labels.size(); ++i) labels[i] = static_cast<int>(i);
  return IncidenceStructure(std::move(labels), std::move(lines), Provenance::Dual, 3);
}

AxiomReport verify_projective_axioms(const Geometry& g) {
  AxiomReport r;
  const int n = g.point_count();

  for (int l = 0; l < g.line_count() && r.thick_lines; ++l)
    if (g.line_points(l).size() < 3) {
      r.thick_lines = false;
      r.thick_lines_witness = "line " + std::to_string(l) + " has " +
                              std::to_string(g.line_points(l).size()) + " points";
    }

  for (int a = 0; a < n && r.unique_joins; ++a)
    for (int b = a + 1; b < n; ++b) {
      auto la = g.lines_through(a), lb = g.lines_through(b);
      int common = 0;
      auto i = la.begin(), j = lb.begin();
      while (i != la.end() && j != lb.end()) {
        if (*i < *j)
          ++i;
        else if (*j < *i)
          ++j;
        else {
          ++common;
          ++i;
          ++j;
        }
      }
      if (common != 1) {
        r.unique_joins = false;
        r.unique_joins_witness = "points " + std::to_string(a) + " " + std::to_string(b) +
                                 " lie on " + std::to_string(common) + " lines";
        break;
      }
    }

  // Triangle (B, A, C) with D on BA and E on BC: DE must meet AC.
  for (int b = 0; b < n && r.veblen_young; ++b) {
    auto through = g.lines_through(b);
    for (std::size_t i = 0; i < through.size() && r.veblen_young; ++i)
      for (std::size_t j = i + 1; j < through.size() && r.veblen_young; ++j) {
        std::vector<int> side1, side2;
        for (int p : g.line_points(through[i]))
          if (p != b) side1.push_back(p);
        for (int p : g.line_points(through[j]))
          if (p != b) side2.push_back(p);
        for (std::size_t d = 0; d < side1.size() && r.veblen_young; ++d)
          for (std::size_t a = d + 1; a < side1.size() && r.veblen_young; ++a)
            for (int e : side2)
              for (int c : side2) {
                if (e == c) continue;
                const int de = g.line_through(side1[d], e);
                const int ac = g.line_through(side1[a], c);
                if (de < 0 || ac < 0) continue;  // reported by unique_joins
                if (de == ac || g.common_point(de, ac)) continue;
                r.veblen_young = false;
                std::ostringstream w;
                w << "triangle " << b << " " << side1[a] << " " << c << ", line through "
                  << side1[d] << " " << e << " misses the third side";
                r.veblen_young_witness = w.str();
                break;
              }
      }
  }
  return r;
}

std::optional<std::vector<int>> find_isomorphism(const Geometry& a, const Geometry& b,
                                                 std::uint64_t node_budget) {
  const int n = a.point_count();
  if (n != b.point_count() || a.line_count() != b.line_count()) return std::nullopt;
  {
    std::vector<std::size_t> sa, sb;
    for (int l = 0; l < a.line_count(); ++l) sa.push_back(a.line_points(l).size());
    for (int l = 0; l < b.line_count(); ++l) sb.push_back(b.line_points(l).size());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }

  auto pair_table = [n](const Geometry& g) {
    std::vector<int> t(static_cast<std::size_t>(n) * n, -1);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (x != y) t[static_cast<std::size_t>(x) * n + y] = g.line_through(x, y);
    return t;
  };
  const auto ta = pair_table(a), tb = pair_table(b);
  auto col = [n](const Geometry& g, const std::vector<int>& t, int x, int y, int z) {
    const int l = t[static_cast<std::size_t>(x) * n + y];
    return l >= 0 && g.incident(z, l);
  };

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  std::uint64_t nodes = 0;

  std::function<bool(int)> extend = [&](int x) -> bool {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      if (++nodes > node_budget) throw BudgetExceeded("isomorphism search exceeded node budget");
      bool ok = true;
      for (int i = 0; i < x && ok; ++i)
        for (int j = 0; j < i && ok; ++j)
          ok = col(a, ta, i, j, x) == col(b, tb, image[i], image[j], y);
      if (!ok) continue;
      image[x] = y;
      used[y] = true;
      if (extend(x + 1)) return true;
      used[y] = false;
      image[x] = -1;
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;

  for (int l = 0; l < a.line_count(); ++l) {
    std::vector<int> img;
    for (int p : a.line_points(l)) img.push_back(image[p]);
    std::sort(img.begin(), img.end());
    const int m = b.line_through(img[0], img[1]);
    if (m < 0) return std::nullopt;
    auto mp = b.line_points(m);
    if (!std::equal(img.begin(), img.end(), mp.begin(), mp.end())) return std::nullopt;
  }
  return image;
}

}  // namespace pgq
