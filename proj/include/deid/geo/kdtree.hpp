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

#ifndef DEID_GEO_KDTREE_HPP
#define DEID_GEO_KDTREE_HPP

#include <array>
#include <cstddef>
#include <vector>

namespace deid::geo {

using Point3 = std::array<double, 3>;

// Static 3-d tree over a fixed point set; nearest() returns the index (into
// the construction-time vector) of the point minimizing squared Euclidean
// distance, ties broken by the smaller index. Used with unit-sphere
// embeddings of coordinates, where chord distance is monotone in
// great-circle distance.
class KdTree3 {
 public:
  explicit KdTree3(std::vector<Point3> points);

  std::size_t size() const { return points_.size(); }
  std::size_t nearest(const Point3& query) const;

 private:
  struct Node {
    std::size_t point;  // index into points_
    int axis;
    std::size_t left;   // kNone when absent
    std::size_t right;
  };
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t build(std::vector<std::size_t>& order, std::size_t lo,
                    std::size_t hi, int depth);
  void search(std::size_t node, const Point3& query, double& best_dist,
              std::size_t& best_index) const;

  std::vector<Point3> points_;
  std::vector<Node> nodes_;
  std::size_t root_ = kNone;
};

}  // namespace deid::geo

#endif  // DEID_GEO_KDTREE_HPP
