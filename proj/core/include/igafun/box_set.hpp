#pragma once

#include <iosfwd>
#include <vector>

namespace igafun {

/// Half-open axis-aligned integer box [lo, hi).
struct IndexBox {
  int dim = 0;
  int lo[3] = {0, 0, 0};
  int hi[3] = {0, 0, 0};

  static IndexBox make(int dim, const int* lo, const int* hi);
  static IndexBox make2(int lx, int ly, int hx, int hy);
  static IndexBox make3(int lx, int ly, int lz, int hx, int hy, int hz);

  bool empty() const;
  long volume() const;
  bool contains(const IndexBox& other) const;
  bool intersects(const IndexBox& other) const;
  IndexBox intersection(const IndexBox& other) const;
  IndexBox dilated(int cells) const;           // grow in every direction
  IndexBox clipped(const IndexBox& domain) const;
  IndexBox coarsened(int shift) const;         // rounded outward
  IndexBox refined(int shift) const;
  bool operator==(const IndexBox& other) const;
};

/// Union of integer boxes kept as a disjoint decomposition, so coverage
/// queries reduce to volume counting.
class BoxSet {
 public:
  explicit BoxSet(int dim = 2) : dim_(dim) {}

  int dim() const { return dim_; }
  bool empty() const { return boxes_.empty(); }
  long volume() const { return volume_; }
  const std::vector<IndexBox>& boxes() const { return boxes_; }

  void add(const IndexBox& box);
  bool covers(const IndexBox& box) const;
  bool intersects(const IndexBox& box) const;
  bool contains_cell(const int* cell) const;

  BoxSet coarsened(int shift) const;
  BoxSet refined(int shift) const;

  /// Merge adjacent boxes with identical cross sections.
  void coalesce();

 private:
  int dim_;
  long volume_ = 0;
  std::vector<IndexBox> boxes_;
};

std::ostream& operator<<(std::ostream& os, const IndexBox& box);

}  // namespace igafun
