#include "igafun/box_set.hpp"

#include <algorithm>
#include <ostream>

namespace igafun {

IndexBox IndexBox::make(int dim, const int* lo, const int* hi) {
  IndexBox b;
  b.dim = dim;
  for (int a = 0; a < dim; ++a) {
    b.lo[a] = lo[a];
    b.hi[a] = hi[a];
  }
  return b;
}

IndexBox IndexBox::make2(int lx, int ly, int hx, int hy) {
  const int lo[2] = {lx, ly}, hi[2] = {hx, hy};
  return make(2, lo, hi);
}

IndexBox IndexBox::make3(int lx, int ly, int lz, int hx, int hy, int hz) {
  const int lo[3] = {lx, ly, lz}, hi[3] = {hx, hy, hz};
  return make(3, lo, hi);
}

bool IndexBox::empty() const {
  for (int a = 0; a < dim; ++a)
    if (hi[a] <= lo[a]) return true;
  return false;
}

long IndexBox::volume() const {
  if (empty()) return 0;
  long v = 1;
  for (int a = 0; a < dim; ++a) v *= hi[a] - lo[a];
  return v;
}

bool IndexBox::contains(const IndexBox& other) const {
  if (other.empty()) return true;
  for (int a = 0; a < dim; ++a)
    if (other.lo[a] < lo[a] || other.hi[a] > hi[a]) return false;
  return true;
}

bool IndexBox::intersects(const IndexBox& other) const {
  return !intersection(other).empty();
}

IndexBox IndexBox::intersection(const IndexBox& other) const {
  IndexBox r;
  r.dim = dim;
  for (int a = 0; a < dim; ++a) {
    r.lo[a] = std::max(lo[a], other.lo[a]);
    r.hi[a] = std::min(hi[a], other.hi[a]);
  }
  return r;
}

IndexBox IndexBox::dilated(int cells) const {
  IndexBox r = *this;
  for (int a = 0; a < dim; ++a) {
    r.lo[a] -= cells;
    r.hi[a] += cells;
  }
  return r;
}

IndexBox IndexBox::clipped(const IndexBox& domain) const { return intersection(domain); }

IndexBox IndexBox::coarsened(int shift) const {
  IndexBox r = *this;
  for (int a = 0; a < dim; ++a) {
    r.lo[a] = lo[a] >> shift;
    r.hi[a] = (hi[a] + (1 << shift) - 1) >> shift;
  }
  return r;
}

IndexBox IndexBox::refined(int shift) const {
  IndexBox r = *this;
  for (int a = 0; a < dim; ++a) {
    r.lo[a] = lo[a] << shift;
    r.hi[a] = hi[a] << shift;
  }
  return r;
}

bool IndexBox::operator==(const IndexBox& other) const {
  if (dim != other.dim) return false;
  for (int a = 0; a < dim; ++a)
    if (lo[a] != other.lo[a] || hi[a] != other.hi[a]) return false;
  return true;
}

namespace {

// a \ b as disjoint slabs.
void subtract(const IndexBox& a, const IndexBox& b, std::vector<IndexBox>& out) {
  const IndexBox cut = a.intersection(b);
  if (cut.empty()) {
    out.push_back(a);
    return;
  }
  IndexBox rest = a;
  for (int axis = 0; axis < a.dim; ++axis) {
    if (rest.lo[axis] < cut.lo[axis]) {
      IndexBox piece = rest;
      piece.hi[axis] = cut.lo[axis];
      out.push_back(piece);
      rest.lo[axis] = cut.lo[axis];
    }
    if (cut.hi[axis] < rest.hi[axis]) {
      IndexBox piece = rest;
      piece.lo[axis] = cut.hi[axis];
      out.push_back(piece);
      rest.hi[axis] = cut.hi[axis];
    }
  }
}

}  // namespace

void BoxSet::add(const IndexBox& box) {
  if (box.empty()) return;
  std::vector<IndexBox> pieces = {box};
  std::vector<IndexBox> next;
  for (const auto& existing : boxes_) {
    next.clear();
    for (const auto& p : pieces) subtract(p, existing, next);
    pieces.swap(next);
    if (pieces.empty()) return;
  }
  for (const auto& p : pieces) {
    boxes_.push_back(p);
    volume_ += p.volume();
  }
  if (boxes_.size() > 64) coalesce();
}

bool BoxSet::covers(const IndexBox& box) const {
  const long need = box.volume();
  if (need == 0) return true;
  long got = 0;
  for (const auto& b : boxes_) {
    got += b.intersection(box).volume();
    if (got >= need) return true;
  }
  return got >= need;
}

bool BoxSet::intersects(const IndexBox& box) const {
  for (const auto& b : boxes_)
    if (b.intersects(box)) return true;
  return false;
}

bool BoxSet::contains_cell(const int* cell) const {
  IndexBox probe;
  probe.dim = dim_;
  for (int a = 0; a < dim_; ++a) {
    probe.lo[a] = cell[a];
    probe.hi[a] = cell[a] + 1;
  }
  return intersects(probe);
}

BoxSet BoxSet::coarsened(int shift) const {
  BoxSet r(dim_);
  for (const auto& b : boxes_) r.add(b.coarsened(shift));
  r.coalesce();
  return r;
}

BoxSet BoxSet::refined(int shift) const {
  BoxSet r(dim_);
  for (const auto& b : boxes_) r.add(b.refined(shift));
  return r;
}

void BoxSet::coalesce() {
  bool merged = true;
  while (merged) {
    merged = false;
    for (std::size_t i = 0; i < boxes_.size() && !merged; ++i) {
      for (std::size_t j = i + 1; j < boxes_.size() && !merged; ++j) {
        int diff_axis = -1;
        bool mergeable = true;
        for (int a = 0; a < dim_; ++a) {
          if (boxes_[i].lo[a] == boxes_[j].lo[a] && boxes_[i].hi[a] == boxes_[j].hi[a]) continue;
          const bool adjacent =
              boxes_[i].hi[a] == boxes_[j].lo[a] || boxes_[j].hi[a] == boxes_[i].lo[a];
          if (diff_axis < 0 && adjacent) {
            diff_axis = a;
          } else {
            mergeable = false;
            break;
          }
        }
        if (mergeable && diff_axis >= 0) {
          boxes_[i].lo[diff_axis] = std::min(boxes_[i].lo[diff_axis], boxes_[j].lo[diff_axis]);
          boxes_[i].hi[diff_axis] = std::max(boxes_[i].hi[diff_axis], boxes_[j].hi[diff_axis]);
          boxes_.erase(boxes_.begin() + static_cast<long>(j));
          merged = true;
        }
      }
    }
  }
}

std::ostream& operator<<(std::ostream& os, const IndexBox& box) {
  for (int a = 0; a < box.dim; ++a) os << (a ? " " : "") << box.lo[a];
  os << "; ";
  for (int a = 0; a < box.dim; ++a) os << (a ? " " : "") << box.hi[a];
  return os;
}

}  // namespace igafun
