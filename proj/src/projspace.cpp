#include "pgq/projspace.hpp"

#include <algorithm>
#include <cstdint>
#include <string>

#include "pgq/error.hpp"

namespace pgq {

namespace {

constexpr std::int64_t kMaxCodes = std::int64_t{1} << 22;
constexpr std::int64_t kMaxPoints = 16384;
constexpr std::int64_t kMaxLineEntries = std::int64_t{1} << 26;

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= b;
    if (r > (std::int64_t{1} << 40)) return r;  // caller only compares against limits
  }
  return r;
}

}  // namespace

ProjSpace::ProjSpace(int n, int q) : n_(n), field_(FieldTable::make(q)) {
  if (n < 2) throw DimensionTooSmall("projective dimension must be at least 2, got " +
                                     std::to_string(n));
  const int w = n + 1;
  const std::int64_t codes = ipow(q, w);
  const std::int64_t points = (codes - 1) / (q - 1);
  const std::int64_t per_point = (ipow(q, n) - 1) / (q - 1);
  const std::int64_t lines = points * per_point / (q + 1);
  if (codes > kMaxCodes || points > kMaxPoints || lines * (q + 1) > kMaxLineEntries)
    throw TooLarge("PG(" + std::to_string(n) + "," + std::to_string(q) +
                   ") exceeds the in-memory limits");

  point_count_ = static_cast<int>(points);
  lines_per_point_ = static_cast<int>(per_point);
  code_to_point_.assign(static_cast<std::size_t>(codes), -1);
  coords_.reserve(static_cast<std::size_t>(points) * w);

  // Codes read v[0] as the most significant digit, so ascending codes are
  // lexicographic coordinate order.
  std::vector<Elem> v(w);
  int next_id = 0;
  for (std::int64_t code = 0; code < codes; ++code) {
    std::int64_t c = code;
    for (int i = w - 1; i >= 0; --i, c /= q) v[i] = static_cast<Elem>(c % q);
    auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
    if (lead == v.end() || *lead != 1) continue;
    code_to_point_[static_cast<std::size_t>(code)] = next_id++;
    coords_.insert(coords_.end(), v.begin(), v.end());
  }

  // A line is discovered from its two smallest points (a, b), so discovery
  // in ascending (a, b) order is already canonical line order.
  const int s = q + 1;
  const std::size_t words = (static_cast<std::size_t>(point_count_) + 63) / 64;
  std::vector<std::uint64_t> covered(words * point_count_, 0);
  auto is_covered = [&](int x, int y) {
    return (covered[static_cast<std::size_t>(x) * words + y / 64] >> (y % 64)) & 1U;
  };
  auto cover = [&](int x, int y) {
    covered[static_cast<std::size_t>(x) * words + y / 64] |= std::uint64_t{1} << (y % 64);
  };
  line_points_.reserve(static_cast<std::size_t>(lines) * s);
  std::vector<Elem> sum(w);
  std::vector<int> pts(s);
  for (int a = 0; a < point_count_; ++a) {
    const auto ca = coords(a);
    for (int b = a + 1; b < point_count_; ++b) {
      if (is_covered(a, b)) continue;
      const auto cb = coords(b);
      pts[0] = a;
      pts[1] = b;
      for (int t = 1; t < q; ++t) {
        for (int i = 0; i < w; ++i)
          sum[i] = field_.add(cb[i], field_.mul(static_cast<Elem>(t), ca[i]));
        pts[t + 1] = point_id(sum);
      }
      std::sort(pts.begin(), pts.end());
      for (int x : pts)
        for (int y : pts) cover(x, y);
      line_points_.insert(line_points_.end(), pts.begin(), pts.end());
    }
  }
  line_count_ = static_cast<int>(line_points_.size() / s);

  lines_through_.resize(static_cast<std::size_t>(point_count_) * lines_per_point_);
  std::vector<int> fill(point_count_, 0);
  for (int l = 0; l < line_count_; ++l)
    for (int p : line_points(l))
      lines_through_[static_cast<std::size_t>(p) * lines_per_point_ + fill[p]++] = l;
}

std::span<const int> ProjSpace::line_points(int line) const {
  const std::size_t s = static_cast<std::size_t>(q()) + 1;
  return {line_points_.data() + static_cast<std::size_t>(line) * s, s};
}

std::span<const int> ProjSpace::lines_through(int point) const {
  return {lines_through_.data() + static_cast<std::size_t>(point) * lines_per_point_,
          static_cast<std::size_t>(lines_per_point_)};
}

std::span<const Elem> ProjSpace::coords(int point) const {
  return {coords_.data() + static_cast<std::size_t>(point) * width(),
          static_cast<std::size_t>(width())};
}

void ProjSpace::normalize(std::span<Elem> v) const {
  auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
  if (lead == v.end()) throw Error("zero vector has no projective point");
  const Elem s = field_.inv(*lead);
  for (auto& e : v) e = field_.mul(e, s);
}

int ProjSpace::point_id(std::span<const Elem> v) const {
  auto lead = std::find_if(v.begin(), v.end(), [](Elem e) { return e != 0; });
  if (lead == v.end()) throw Error("zero vector has no projective point");
  const Elem s = field_.inv(*lead);
  std::int64_t code = 0;
  for (Elem e : v) code = code * q() + field_.mul(e, s);
  return code_to_point_[static_cast<std::size_t>(code)];
}

int ProjSpace::join(int a, int b) const {
  if (a == b) throw EqualPoints("join of a point with itself");
  // The line is identified by its two smallest points.
  const auto ca = coords(a), cb = coords(b);
  int first = std::min(a, b), second = std::max(a, b);
  std::vector<Elem> sum(width());
  for (int t = 1; t < q(); ++t) {
    for (int i = 0; i < width(); ++i)
      sum[i] = field_.add(cb[i], field_.mul(static_cast<Elem>(t), ca[i]));
    const int p = point_id(sum);
    if (p < first) {
      second = first;
      first = p;
    } else if (p < second) {
      second = p;
    }
  }
  const std::size_t s = static_cast<std::size_t>(q()) + 1;
  int lo = 0, hi = line_count_;
  while (lo < hi) {
    const int mid = lo + (hi - lo) / 2;
    const int m0 = line_points_[mid * s], m1 = line_points_[mid * s + 1];
    if (m0 < first || (m0 == first && m1 < second))
      lo = mid + 1;
    else
      hi = mid;
  }
  return lo;
}

std::optional<int> ProjSpace::meet(int a, int b) const {
  if (a == b) throw EqualLines("meet of a line with itself");
  return common_point(a, b);
}

Subspace ProjSpace::line_subspace(int line) const {
  auto pts = line_points(line);
  Matrix m(2, width());
  for (int i = 0; i < 2; ++i) std::copy_n(coords(pts[i]).begin(), width(), m.row(i).begin());
  rref(field_, m);
  return {std::move(m)};
}

ProjSpace build_space(int n, int q) { return ProjSpace(n, q); }

BigInt gaussian_binomial(int m, int k, int q) {
  if (k < 0 || k > m) return 0;
  BigInt num = 1, den = 1, qq = q;
  for (int i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(qq, m - i) - 1;
    den *= boost::multiprecision::pow(qq, i + 1) - 1;
  }
  return num / den;
}

int join(const ProjSpace& sp, int a, int b) { return sp.join(a, b); }

std::optional<int> meet(const ProjSpace& sp, int a, int b) { return sp.meet(a, b); }

bool collinear(const ProjSpace& sp, int a, int b, int c) {
  if (a == b || b == c || a == c) throw RepeatedPoints("collinear needs three distinct points");
  return sp.incident(c, sp.join(a, b));
}

std::vector<int> star(const ProjSpace& sp, int point) {
  auto s = sp.lines_through(point);
  return {s.begin(), s.end()};
}

Subspace span_points(const ProjSpace& sp, std::span<const int> points) {
  Matrix m(static_cast<int>(points.size()), sp.width());
  for (int i = 0; i < m.rows; ++i)
    std::copy_n(sp.coords(points[i]).begin(), sp.width(), m.row(i).begin());
  rref(sp.field(), m);
  return {std::move(m)};
}

bool contains(const ProjSpace& sp, const Subspace& s, int point) {
  Matrix m(s.basis.rows + 1, sp.width());
  std::copy(s.basis.data.begin(), s.basis.data.end(), m.data.begin());
  std::copy_n(sp.coords(point).begin(), sp.width(), m.row(s.basis.rows).begin());
  return rank(sp.field(), std::move(m)) == s.basis.rows;
}

std::vector<int> pencil(const ProjSpace& sp, int point, const Subspace& eps) {
  if (eps.basis.rows != 3 || eps.basis.cols != sp.width() || rank(sp.field(), eps.basis) != 3)
    throw NotAPlane("pencil needs a plane (3 independent rows of width n+1)");
  if (!contains(sp, eps, point)) throw PointNotInPlane("pencil centre is not in the plane");
  std::vector<int> out;
  for (int l : sp.lines_through(point)) {
    auto pts = sp.line_points(l);
    const int other = pts[0] == point ? pts[1] : pts[0];
    if (contains(sp, eps, other)) out.push_back(l);
  }
  return out;
}

IncidenceStructure quotient(const ProjSpace& sp, int point) {
  return quotient(static_cast<const Geometry&>(sp), point);
}

int plane_id(const ProjSpace& sp, const Subspace& plane) {
  if (sp.n() != 3) throw UnsupportedDimension("plane ids are defined for n = 3");
  if (plane.basis.rows != 3 || plane.basis.cols != 4) throw NotAPlane("not a plane");
  Matrix u = null_space(sp.field(), plane.basis);
  if (u.rows != 1) throw NotAPlane("plane basis is not independent");
  return sp.point_id(u.row(0));
}

Subspace plane_subspace(const ProjSpace& sp, int plane) {
  if (sp.n() != 3) throw UnsupportedDimension("plane ids are defined for n = 3");
  Matrix u(1, 4);
  std::copy_n(sp.coords(plane).begin(), 4, u.row(0).begin());
  return {null_space(sp.field(), u)};
}

int annihilator_line(const ProjSpace& sp, int line) {
  if (sp.n() != 3) throw UnsupportedDimension("annihilator lines are defined for n = 3");
  Matrix perp = null_space(sp.field(), sp.line_subspace(line).basis);
  return sp.join(sp.point_id(perp.row(0)), sp.point_id(perp.row(1)));
}

IncidenceStructure dual_space(const ProjSpace& sp) {
  if (sp.n() != 3) throw UnsupportedDimension("dual_space is implemented for n = 3 only");
  std::vector<int> labels(sp.point_count());
  for (int i = 0; i < sp.point_count(); ++i) labels[i] = i;
  std::vector<std::vector<int>> lines(sp.line_count());
  for (int l = 0; l < sp.line_count(); ++l) {
    auto pts = sp.line_points(annihilator_line(sp, l));
    lines[l].assign(pts.begin(), pts.end());
  }
  return IncidenceStructure(std::move(labels), std::move(lines), Provenance::Dual, 3);
}

}  // namespace pgq
