// Copyright 2026 The ecclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ecclab/range_max.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ecclab/error.hpp"

namespace ecclab {
namespace {

void keep_better(std::optional<RangeHit>& best, const std::optional<RangeHit>& cand) {
  if (cand && (!best || better_hit(*cand, *best))) best = cand;
}

bool inside(const RangePoint& p, std::span<const std::int64_t> lo,
            std::span<const std::int64_t> hi) {
  for (std::size_t i = 0; i < p.coords.size(); ++i) {
    if (p.coords[i] < lo[i] || p.coords[i] > hi[i]) return false;
  }
  return true;
}

constexpr double kRangeTreeBudget = 4e6;

}  // namespace

std::optional<RangeHit> linear_scan_max(std::span<const RangePoint> points,
                                        std::span<const std::int64_t> lo,
                                        std::span<const std::int64_t> hi) {
  std::optional<RangeHit> best;
  for (const RangePoint& p : points) {
    if (inside(p, lo, hi)) keep_better(best, RangeHit{p.value, p.payload});
  }
  return best;
}

// Layered range tree: a segment tree on coordinate `dim` whose nodes carry a
// structure on the remaining coordinates; the last coordinate uses a sparse
// table over its sorted order.
struct RangeMaxIndex::RangeTree {
  struct Level;
  struct Node {
    std::size_t l = 0, r = 0;
    std::unique_ptr<Node> left, right;
    std::unique_ptr<Level> sub;
  };
  struct Level {
    std::size_t dim = 0;
    std::vector<std::int64_t> keys;
    std::vector<std::vector<RangeHit>> sparse;
    std::unique_ptr<Node> root;
  };

  const std::vector<RangePoint>& pts;
  std::size_t d;
  std::unique_ptr<Level> top;

  RangeTree(const std::vector<RangePoint>& points, std::size_t dimension)
      : pts(points), d(dimension) {
    std::vector<std::size_t> ids(points.size());
    std::iota(ids.begin(), ids.end(), 0);
    top = build_level(0, ids);
  }

  std::unique_ptr<Level> build_level(std::size_t dim, std::vector<std::size_t> ids) {
    auto level = std::make_unique<Level>();
    level->dim = dim;
    std::sort(ids.begin(), ids.end(), [&](std::size_t a, std::size_t b) {
      return pts[a].coords[dim] != pts[b].coords[dim] ? pts[a].coords[dim] < pts[b].coords[dim]
                                                      : a < b;
    });
    for (std::size_t id : ids) level->keys.push_back(pts[id].coords[dim]);
    if (dim + 1 == d) {
      std::vector<RangeHit> base;
      for (std::size_t id : ids) base.push_back({pts[id].value, pts[id].payload});
      level->sparse.push_back(std::move(base));
      for (std::size_t span = 2; span <= ids.size(); span *= 2) {
        const auto& prev = level->sparse.back();
        std::vector<RangeHit> row(ids.size() - span + 1);
        for (std::size_t i = 0; i < row.size(); ++i) {
          const RangeHit& a = prev[i];
          const RangeHit& b = prev[i + span / 2];
          row[i] = better_hit(a, b) ? a : b;
        }
        level->sparse.push_back(std::move(row));
      }
    } else if (!ids.empty()) {
      level->root = build_node(dim, ids, 0, ids.size());
    }
    return level;
  }

  std::unique_ptr<Node> build_node(std::size_t dim, const std::vector<std::size_t>& ids,
                                   std::size_t l, std::size_t r) {
    auto node = std::make_unique<Node>();
    node->l = l;
    node->r = r;
    node->sub = build_level(dim + 1, std::vector<std::size_t>(ids.begin() + l, ids.begin() + r));
    if (r - l > 1) {
      std::size_t mid = l + (r - l) / 2;
      node->left = build_node(dim, ids, l, mid);
      node->right = build_node(dim, ids, mid, r);
    }
    return node;
  }

  std::optional<RangeHit> query(const Level& level, std::span<const std::int64_t> lo,
                                std::span<const std::int64_t> hi) const {
    auto i = static_cast<std::size_t>(
        std::lower_bound(level.keys.begin(), level.keys.end(), lo[level.dim]) -
        level.keys.begin());
    auto j = static_cast<std::size_t>(
        std::upper_bound(level.keys.begin(), level.keys.end(), hi[level.dim]) -
        level.keys.begin());
    if (i >= j) return std::nullopt;
    if (level.dim + 1 == d) {
      std::size_t k = 0;
      while ((std::size_t{2} << k) <= j - i) ++k;
      const RangeHit& a = level.sparse[k][i];
      const RangeHit& b = level.sparse[k][j - (std::size_t{1} << k)];
      return better_hit(a, b) ? a : b;
    }
    std::optional<RangeHit> best;
    query_node(*level.root, i, j, lo, hi, best);
    return best;
  }

  void query_node(const Node& node, std::size_t i, std::size_t j,
                  std::span<const std::int64_t> lo, std::span<const std::int64_t> hi,
                  std::optional<RangeHit>& best) const {
    if (node.r <= i || j <= node.l) return;
    if (i <= node.l && node.r <= j) {
      keep_better(best, query(*node.sub, lo, hi));
      return;
    }
    query_node(*node.left, i, j, lo, hi, best);
    query_node(*node.right, i, j, lo, hi, best);
  }
};

struct RangeMaxIndex::KdTree {
  struct Node {
    std::size_t l = 0, r = 0;
    std::vector<std::int64_t> min, max;
    RangeHit best;
    int left = -1, right = -1;
  };
  static constexpr std::size_t kLeaf = 8;

  const std::vector<RangePoint>& pts;
  std::size_t d;
  std::vector<std::size_t> order;
  std::vector<Node> nodes;

  KdTree(const std::vector<RangePoint>& points, std::size_t dimension)
      : pts(points), d(dimension), order(points.size()) {
    std::iota(order.begin(), order.end(), 0);
    if (!order.empty()) build(0, order.size(), 0);
  }

  int build(std::size_t l, std::size_t r, std::size_t depth) {
    Node node;
    node.l = l;
    node.r = r;
    node.min.assign(d, INT64_MAX);
    node.max.assign(d, INT64_MIN);
    node.best = {pts[order[l]].value, pts[order[l]].payload};
    for (std::size_t i = l; i < r; ++i) {
      const RangePoint& p = pts[order[i]];
      for (std::size_t k = 0; k < d; ++k) {
        node.min[k] = std::min(node.min[k], p.coords[k]);
        node.max[k] = std::max(node.max[k], p.coords[k]);
      }
      RangeHit h{p.value, p.payload};
      if (better_hit(h, node.best)) node.best = h;
    }
    int id = static_cast<int>(nodes.size());
    nodes.push_back(std::move(node));
    if (r - l > kLeaf) {
      std::size_t axis = depth % d, mid = l + (r - l) / 2;
      std::nth_element(order.begin() + l, order.begin() + mid, order.begin() + r,
                       [&](std::size_t a, std::size_t b) {
                         return pts[a].coords[axis] < pts[b].coords[axis];
                       });
      int left = build(l, mid, depth + 1);
      int right = build(mid, r, depth + 1);
      nodes[id].left = left;
      nodes[id].right = right;
    }
    return id;
  }

  void query(int id, std::span<const std::int64_t> lo, std::span<const std::int64_t> hi,
             std::optional<RangeHit>& best) const {
    const Node& node = nodes[id];
    if (best && !better_hit(node.best, *best)) return;
    bool contained = true;
    for (std::size_t k = 0; k < d; ++k) {
      if (node.max[k] < lo[k] || node.min[k] > hi[k]) return;
      if (node.min[k] < lo[k] || node.max[k] > hi[k]) contained = false;
    }
    if (contained) {
      keep_better(best, node.best);
      return;
    }
    if (node.left < 0) {
      for (std::size_t i = node.l; i < node.r; ++i) {
        const RangePoint& p = pts[order[i]];
        if (inside(p, lo, hi)) keep_better(best, RangeHit{p.value, p.payload});
      }
      return;
    }
    query(node.left, lo, hi, best);
    query(node.right, lo, hi, best);
  }
};

RangeMaxIndex::RangeMaxIndex(std::size_t dimension, std::vector<RangePoint> points,
                             Backend backend)
    : dim_(dimension), backend_(backend), points_(std::move(points)) {
  for (const RangePoint& p : points_) {
    if (p.coords.size() != dim_) throw InputError("range point has wrong dimension");
    keep_better(global_, RangeHit{p.value, p.payload});
  }
  if (dim_ == 0 || points_.empty()) return;
  if (backend_ == Backend::kAuto) {
    double m = static_cast<double>(points_.size());
    double depth = std::log2(m) + 1;
    double size = m * std::pow(depth, static_cast<double>(dim_));
    backend_ = size <= kRangeTreeBudget ? Backend::kRangeTree : Backend::kKdTree;
  }
  if (backend_ == Backend::kRangeTree) {
    range_tree_ = std::make_unique<RangeTree>(points_, dim_);
  } else {
    kd_tree_ = std::make_unique<KdTree>(points_, dim_);
  }
}

RangeMaxIndex::~RangeMaxIndex() = default;
RangeMaxIndex::RangeMaxIndex(RangeMaxIndex&&) noexcept = default;
RangeMaxIndex& RangeMaxIndex::operator=(RangeMaxIndex&&) noexcept = default;

std::optional<RangeHit> RangeMaxIndex::query(std::span<const std::int64_t> lo,
                                             std::span<const std::int64_t> hi) const {
  if (dim_ == 0 || points_.empty()) return global_;
  if (range_tree_) return range_tree_->query(*range_tree_->top, lo, hi);
  std::optional<RangeHit> best;
  kd_tree_->query(0, lo, hi, best);
  return best;
}

}  // namespace ecclab
