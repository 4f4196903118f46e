#include "nonconvex/box_union.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nonconvex {

Scalar Box::volume() const {
  Scalar v = 1;
  for (std::size_t i = 0; i < lo.dim(); ++i) v *= hi[i] - lo[i];
  return v;
}

bool Box::degenerate() const {
  for (std::size_t i = 0; i < lo.dim(); ++i)
    if (lo[i] == hi[i]) return true;
  return false;
}

bool Box::contains(const Point& p) const {
  for (std::size_t i = 0; i < lo.dim(); ++i)
    if (p[i] < lo[i] || p[i] > hi[i]) return false;
  return true;
}

bool Box::contains(const Box& b) const {
  for (std::size_t i = 0; i < lo.dim(); ++i)
    if (b.lo[i] < lo[i] || b.hi[i] > hi[i]) return false;
  return true;
}

Box make_box(const Point& lo, const Point& hi) {
  if (lo.dim() != hi.dim()) throw DimensionMismatch("box corners differ in dimension");
  for (std::size_t i = 0; i < lo.dim(); ++i)
    if (lo[i] > hi[i]) throw GeometryError("box with lo > hi on axis " + std::to_string(i));
  return Box{lo, hi};
}

BoxUnion::BoxUnion(std::size_t dim, std::vector<Box> boxes) : dim_(dim), boxes_(std::move(boxes)) {
  if (dim_ == 0) throw GeometryError("box union dimension must be positive");
  if (boxes_.empty()) throw GeometryError("box union must be nonempty");
  for (const auto& b : boxes_) {
    if (b.lo.dim() != dim_ || b.hi.dim() != dim_) throw DimensionMismatch("box dimension differs from union dimension");
    for (std::size_t i = 0; i < dim_; ++i)
      if (b.lo[i] > b.hi[i]) throw GeometryError("box with lo > hi");
  }
  std::sort(boxes_.begin(), boxes_.end());
  boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
}

bool BoxUnion::contains(const Point& p) const {
  for (const auto& b : boxes_)
    if (b.contains(p)) return true;
  return false;
}

BoxUnion BoxUnion::scaled(const Scalar& s) const {
  if (sgn(s) < 0) throw GeometryError("negative box scaling");
  std::vector<Box> r;
  for (const auto& b : boxes_) r.push_back(Box{b.lo * s, b.hi * s});
  return BoxUnion(dim_, std::move(r));
}

BoxUnion BoxUnion::translated(const Point& t) const {
  std::vector<Box> r;
  for (const auto& b : boxes_) r.push_back(Box{b.lo + t, b.hi + t});
  return BoxUnion(dim_, std::move(r));
}

BoxUnion BoxUnion::simplified() const {
  std::vector<Box> keep;
  for (std::size_t i = 0; i < boxes_.size(); ++i) {
    bool inside = false;
    for (std::size_t j = 0; j < boxes_.size() && !inside; ++j)
      if (j != i && boxes_[j].contains(boxes_[i])) inside = !(boxes_[j] == boxes_[i]) || j < i;
    if (!inside) keep.push_back(boxes_[i]);
  }
  return BoxUnion(dim_, std::move(keep));
}

bool BoxUnion::convex_box() const { return simplified().size() == 1; }

BoxUnion single_box(const Point& lo, const Point& hi) { return BoxUnion(lo.dim(), {make_box(lo, hi)}); }

BoxUnion points_as_boxes(const PointSet& a) {
  std::vector<Box> r;
  for (const auto& p : a) r.push_back(Box{p, p});
  return BoxUnion(a.dim(), std::move(r));
}

BoxUnion minkowski_sum(const BoxUnion& a, const BoxUnion& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("minkowski_sum: dimensions differ");
  std::vector<Box> r;
  r.reserve(a.size() * b.size());
  for (const auto& x : a.boxes())
    for (const auto& y : b.boxes()) r.push_back(Box{x.lo + y.lo, x.hi + y.hi});
  return BoxUnion(a.dim(), std::move(r));
}

BoxUnion average_set(const BoxUnion& a, unsigned k, std::size_t cap) {
  if (k == 0) throw GeometryError("average_set: k must be positive");
  BoxUnion s = a;
  for (unsigned j = 2; j <= k; ++j) {
    if (s.size() * a.size() > cap) {
      std::ostringstream os;
      os << "average_set: box cap " << cap << " exceeded at k=" << k << " (binomial-growth estimate "
         << multiset_count(a.size(), k) << ")";
      throw BudgetExceeded(os.str());
    }
    s = minkowski_sum(s, a);
  }
  return k == 1 ? s : s.scaled(frac(1, k));
}

namespace {

struct Sweep {
  std::vector<Box> boxes;
  std::size_t dim;
  std::vector<std::map<std::vector<std::size_t>, Scalar>> memo;

  Scalar run(const std::vector<std::size_t>& act, std::size_t axis) {
    if (act.empty()) return 0;
    if (act.size() == 1) {
      Scalar v = 1;
      const Box& b = boxes[act[0]];
      for (std::size_t i = axis; i < dim; ++i) v *= b.hi[i] - b.lo[i];
      return v;
    }
    auto it = memo[axis].find(act);
    if (it != memo[axis].end()) return it->second;
    std::vector<Scalar> xs;
    for (auto i : act) {
      xs.push_back(boxes[i].lo[axis]);
      xs.push_back(boxes[i].hi[axis]);
    }
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    Scalar total = 0;
    std::vector<std::size_t> prev;
    Scalar width = 0;
    auto flush = [&]() {
      if (!prev.empty() && sgn(width) > 0) {
        if (axis + 1 == dim)
          total += width;
        else
          total += width * run(prev, axis + 1);
      }
    };
    for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
      std::vector<std::size_t> cur;
      for (auto i : act)
        if (boxes[i].lo[axis] <= xs[s] && boxes[i].hi[axis] >= xs[s + 1]) cur.push_back(i);
      if (cur == prev) {
        width += xs[s + 1] - xs[s];
      } else {
        flush();
        prev = std::move(cur);
        width = xs[s + 1] - xs[s];
      }
    }
    flush();
    memo[axis][act] = total;
    return total;
  }
};

}  // namespace

Scalar volume(const BoxUnion& u) {
  Sweep sw;
  sw.dim = u.dim();
  for (const auto& b : u.boxes())
    if (!b.degenerate()) sw.boxes.push_back(b);
  sw.memo.resize(sw.dim);
  std::vector<std::size_t> all(sw.boxes.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return sw.run(all, 0);
}

PointSet corner_points(const BoxUnion& u) {
  std::size_t n = u.dim();
  std::vector<Point> pts;
  for (const auto& b : u.boxes()) {
    std::vector<std::size_t> free_axes;
    for (std::size_t i = 0; i < n; ++i)
      if (b.lo[i] != b.hi[i]) free_axes.push_back(i);
    std::size_t m = free_axes.size();
    if (m > 20) throw BudgetExceeded("corner_points: box dimension too large");
    for (std::size_t mask = 0; mask < (std::size_t(1) << m); ++mask) {
      Point p = b.lo;
      for (std::size_t j = 0; j < m; ++j)
        if (mask >> j & 1u) p[free_axes[j]] = b.hi[free_axes[j]];
      pts.push_back(std::move(p));
    }
  }
  return PointSet(n, std::move(pts));
}

BoxUnion drop_axis(const BoxUnion& u, std::size_t axis) {
  if (u.dim() < 2 || axis >= u.dim()) throw GeometryError("drop_axis: bad axis");
  std::vector<Box> r;
  for (const auto& b : u.boxes()) {
    Point lo(u.dim() - 1), hi(u.dim() - 1);
    for (std::size_t i = 0, j = 0; i < u.dim(); ++i) {
      if (i == axis) continue;
      lo[j] = b.lo[i];
      hi[j] = b.hi[i];
      ++j;
    }
    r.push_back(Box{lo, hi});
  }
  return BoxUnion(u.dim() - 1, std::move(r));
}

}  // namespace nonconvex
