#pragma once

// Complementary regions (faces) of a diagram, checkerboard coloring,
// and per-crossing Goeritz indices.
//
// Corner k of a crossing is the sector between slots k and k+1; the four
// corners of a crossing alternate colors around it, so the shaded pair is
// always one of the opposite pairs {0,2} or {1,3}.

#include "knotmat/diagram.hpp"
#include "knotmat/error.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace knotmat {

struct Corner {
  int crossing = 0;
  int corner = 0;  // 0..3
  friend bool operator==(const Corner&, const Corner&) = default;
};

class RegionSet {
 public:
  // Face traversal of the combinatorial map; discovery order is fixed
  // (darts scanned crossing-major, slot-minor).
  static RegionSet compute(const Diagram& d);

  int region_count() const { return static_cast<int>(regions_.size()); }
  const std::vector<std::vector<Corner>>& regions() const { return regions_; }
  int region_of(Corner c) const { return corner_region_[4 * c.crossing + c.corner]; }

  // The two regions flanking each edge, one entry per edge.
  const std::vector<std::pair<int, int>>& edge_flanks() const { return edge_flanks_; }

 private:
  std::vector<std::vector<Corner>> regions_;
  std::vector<int> corner_region_;
  std::vector<std::pair<int, int>> edge_flanks_;
};

inline RegionSet faces(const Diagram& d) { return RegionSet::compute(d); }

inline RegionSet RegionSet::compute(const Diagram& d) {
  RegionSet rs;
  if (d.is_unknot()) {
    rs.regions_.resize(2);  // inside and outside of the plain circle
    return rs;
  }
  const int n = d.crossing_count();
  rs.corner_region_.assign(4 * n, -1);
  std::vector<bool> seen(4 * n, false);
  for (int c = 0; c < n; ++c) {
    for (int s = 0; s < 4; ++s) {
      if (seen[4 * c + s]) continue;
      std::vector<Corner> corners;
      Dart dart{c, s};
      while (!seen[4 * dart.crossing + dart.slot]) {
        seen[4 * dart.crossing + dart.slot] = true;
        // dart (c,s) sweeps the corner between slots s-1 and s
        corners.push_back({dart.crossing, (dart.slot + 3) % 4});
        Dart t = d.twin(dart);
        dart = {t.crossing, (t.slot + 1) % 4};
      }
      const int id = static_cast<int>(rs.regions_.size());
      for (const Corner& cor : corners)
        rs.corner_region_[4 * cor.crossing + cor.corner] = id;
      rs.regions_.push_back(std::move(corners));
    }
  }
  for (const auto& [label, darts] : d.edges()) {
    const Dart a = darts.first;
    rs.edge_flanks_.emplace_back(rs.region_of({a.crossing, (a.slot + 3) % 4}),
                                 rs.region_of({a.crossing, a.slot}));
  }
  return rs;
}

class Checkerboard {
 public:
  // Proper 2-coloring of the regions.  The class containing shade_selector
  // (default: the region at corner 0 of the first crossing) is shaded.
  // Ordering lists shaded regions first, in discovery order.
  static Checkerboard compute(const Diagram& d, const RegionSet& rs,
                              std::optional<int> shade_selector = {});

  // Same coloring but with an explicit region ordering: the shaded class is
  // the color class of region_order.front(), which must occupy exactly the
  // leading positions.
  static Checkerboard with_ordering(const Diagram& d, const RegionSet& rs,
                                    const std::vector<int>& region_order);

  bool is_shaded(int region) const { return shaded_[region]; }
  int shaded_count() const { return shaded_count_; }             // b
  int region_count() const { return static_cast<int>(shaded_.size()); }
  const std::vector<int>& ordering() const { return ordering_; }
  int column_of(int region) const { return column_of_[region]; }

 private:
  static std::vector<bool> two_color(const Diagram& d, const RegionSet& rs,
                                     int shaded_region);
  void finish();

  std::vector<bool> shaded_;
  std::vector<int> ordering_;
  std::vector<int> column_of_;
  int shaded_count_ = 0;
};

inline std::vector<bool> Checkerboard::two_color(const Diagram& d,
                                                 const RegionSet& rs,
                                                 int shaded_region) {
  const int m = rs.region_count();
  if (shaded_region < 0 || shaded_region >= m)
    throw Error(Errc::index_out_of_range,
                "shade selector " + std::to_string(shaded_region));
  if (d.is_unknot()) {
    std::vector<bool> shaded(m, false);
    shaded[shaded_region] = true;
    return shaded;
  }
  std::vector<std::vector<int>> adj(m);
  for (const auto& [f, g] : rs.edge_flanks()) {
    if (f == g)
      throw Error(Errc::no_proper_coloring, "region adjacent to itself across an edge");
    adj[f].push_back(g);
    adj[g].push_back(f);
  }
  std::vector<int> color(m, -1);
  color[0] = 0;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int r = stack.back();
    stack.pop_back();
    for (int nb : adj[r]) {
      if (color[nb] == -1) {
        color[nb] = 1 - color[r];
        stack.push_back(nb);
      } else if (color[nb] == color[r]) {
        throw Error(Errc::no_proper_coloring, "odd cycle in region adjacency");
      }
    }
  }
  if (std::count(color.begin(), color.end(), -1) != 0)
    throw Error(Errc::no_proper_coloring, "region adjacency graph disconnected");
  std::vector<bool> shaded(m);
  for (int r = 0; r < m; ++r) shaded[r] = (color[r] == color[shaded_region]);
  return shaded;
}

inline void Checkerboard::finish() {
  const int m = static_cast<int>(shaded_.size());
  column_of_.assign(m, -1);
  for (int j = 0; j < m; ++j) column_of_[ordering_[j]] = j;
  shaded_count_ = static_cast<int>(std::count(shaded_.begin(), shaded_.end(), true));
}

inline Checkerboard Checkerboard::compute(const Diagram& d, const RegionSet& rs,
                                          std::optional<int> shade_selector) {
  const int selector = shade_selector.value_or(
      d.is_unknot() ? 0 : rs.region_of({0, 0}));
  Checkerboard cb;
  cb.shaded_ = two_color(d, rs, selector);
  for (int r = 0; r < rs.region_count(); ++r)
    if (cb.shaded_[r]) cb.ordering_.push_back(r);
  for (int r = 0; r < rs.region_count(); ++r)
    if (!cb.shaded_[r]) cb.ordering_.push_back(r);
  cb.finish();
  return cb;
}

inline Checkerboard Checkerboard::with_ordering(const Diagram& d, const RegionSet& rs,
                                                const std::vector<int>& region_order) {
  const int m = rs.region_count();
  if (static_cast<int>(region_order.size()) != m)
    throw Error(Errc::inconsistent_inputs, "region ordering has wrong length");
  std::vector<bool> present(m, false);
  for (int r : region_order) {
    if (r < 0 || r >= m || present[r])
      throw Error(Errc::inconsistent_inputs, "region ordering is not a permutation");
    present[r] = true;
  }
  Checkerboard cb;
  cb.shaded_ = two_color(d, rs, region_order.front());
  const auto b = std::count(cb.shaded_.begin(), cb.shaded_.end(), true);
  for (int j = 0; j < m; ++j)
    if (cb.shaded_[region_order[j]] != (j < b))
      throw Error(Errc::inconsistent_inputs,
                  "region ordering does not list the shaded class first");
  cb.ordering_ = region_order;
  cb.finish();
  return cb;
}

// Goeritz index of a crossing: +1 when the shaded corners are the pair
// {0,2} flanking the under-strand entry, -1 when they are {1,3}.  The
// orientation of this convention is pinned by the worked 8_19 example;
// swapping the shaded class negates every index.
inline int goeritz_index(const Diagram& d, const RegionSet& rs,
                         const Checkerboard& cb, int crossing) {
  (void)d;
  return cb.is_shaded(rs.region_of({crossing, 0})) ? +1 : -1;
}

// index per crossing, in crossing order
using GoeritzIndexTable = std::vector<int>;

inline GoeritzIndexTable goeritz_indices(const Diagram& d, const RegionSet& rs,
                                         const Checkerboard& cb) {
  GoeritzIndexTable idx(d.crossing_count());
  for (int c = 0; c < d.crossing_count(); ++c)
    idx[c] = goeritz_index(d, rs, cb, c);
  return idx;
}

// Combinatorial primality test: connected, at least one crossing, no two
// regions share two or more edges, and no region meets the same crossing
// twice (which would be a nugatory configuration).
inline bool is_prime_diagram(const Diagram& d, const RegionSet& rs) {
  const int n = d.crossing_count();
  if (n < 1) return false;

  std::vector<std::vector<int>> adj(n);
  for (const auto& [label, darts] : d.edges()) {
    adj[darts.first.crossing].push_back(darts.second.crossing);
    adj[darts.second.crossing].push_back(darts.first.crossing);
  }
  std::vector<bool> seen(n, false);
  seen[0] = true;
  std::vector<int> stack{0};
  int reached = 1;
  while (!stack.empty()) {
    const int c = stack.back();
    stack.pop_back();
    for (int nb : adj[c])
      if (!seen[nb]) {
        seen[nb] = true;
        ++reached;
        stack.push_back(nb);
      }
  }
  if (reached != n) return false;

  for (const auto& corners : rs.regions()) {
    std::vector<int> cs;
    for (const Corner& c : corners) cs.push_back(c.crossing);
    std::sort(cs.begin(), cs.end());
    if (std::adjacent_find(cs.begin(), cs.end()) != cs.end()) return false;
  }

  std::vector<std::vector<int>> share(rs.region_count());
  for (const auto& [f, g] : rs.edge_flanks()) {
    auto& row = share[std::min(f, g)];
    if (std::find(row.begin(), row.end(), std::max(f, g)) != row.end())
      return false;
    row.push_back(std::max(f, g));
  }
  return true;
}

}  // namespace knotmat
