// Copyright 2026 The Deid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "deid/geo/kdtree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "deid/errors.hpp"

namespace deid::geo {

namespace {

double squared_distance(const Point3& a, const Point3& b) {
  const double dx = a[0] - b[0];
  const double dy = a[1] - b[1];
  const double dz = a[2] - b[2];
  return dx * dx + dy * dy + dz * dz;
}

}  // namespace

KdTree3::KdTree3(std::vector<Point3> points) : points_(std::move(points)) {
  if (points_.empty()) {
    throw ConfigError("kd-tree requires at least one point");
  }
  std::vector<std::size_t> order(points_.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  nodes_.reserve(points_.size());
  root_ = build(order, 0, points_.size(), 0);
}

std::size_t KdTree3::build(std::vector<std::size_t>& order, std::size_t lo,
                           std::size_t hi, int depth) {
  if (lo >= hi) return kNone;
  const int axis = depth % 3;
  const std::size_t mid = lo + (hi - lo) / 2;
  std::nth_element(order.begin() + lo, order.begin() + mid,
                   order.begin() + hi,
                   [&](std::size_t a, std::size_t b) {
                     if (points_[a][axis] != points_[b][axis]) {
                       return points_[a][axis] < points_[b][axis];
                     }
                     return a < b;
                   });
  const std::size_t node_index = nodes_.size();
  nodes_.push_back(Node{order[mid], axis, kNone, kNone});
  const std::size_t left = build(order, lo, mid, depth + 1);
  const std::size_t right = build(order, mid + 1, hi, depth + 1);
  nodes_[node_index].left = left;
  nodes_[node_index].right = right;
  return node_index;
}

void KdTree3::search(std::size_t node, const Point3& query, double& best_dist,
                     std::size_t& best_index) const {
  if (node == kNone) return;
  const Node& n = nodes_[node];
  const double d = squared_distance(points_[n.point], query);
  if (d < best_dist || (d == best_dist && n.point < best_index)) {
    best_dist = d;
    best_index = n.point;
  }
  const double diff = query[n.axis] - points_[n.point][n.axis];
  const std::size_t near = diff < 0.0 ? n.left : n.right;
  const std::size_t far = diff < 0.0 ? n.right : n.left;
  search(near, query, best_dist, best_index);
  // The far side can still hold an equal-distance point with a smaller
  // index, so prune only on strict excess.
  if (diff * diff <= best_dist) {
    search(far, query, best_dist, best_index);
  }
}

std::size_t KdTree3::nearest(const Point3& query) const {
  double best_dist = std::numeric_limits<double>::infinity();
  std::size_t best_index = points_.size();
  search(root_, query, best_dist, best_index);
  return best_index;
}

}  // namespace deid::geo
