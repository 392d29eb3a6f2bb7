// Copyright (C) 2026 The hgrid Authors. All rights reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not use this file except in compliance
// with the License. You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software distributed under the License
// is distributed on an "AS IS" BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express
// or implied. See the License for the specific language governing permissions and limitations under the License.

#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "hgrid/grid_index.hpp"

namespace hgrid {

struct HierConfig {
    /// Lists holding more records than this are subdivided.
    std::size_t max_bin_records = 1;
    /// Subdivision stops once either bin dimension is at or below this. Unset means 1e-6 of the top-level data
    /// extent diagonal.
    std::optional<double> smallest_bin_dimension;

    enum class NeighborSubgrids {
        recurse,  // subdivided neighbors answer through their own sub-index
        scan,     // subdivided neighbors are scanned linearly; only the query's own bin delegates
    };
    NeighborSubgrids neighbor_subgrids = NeighborSubgrids::recurse;

    /// Division counts for a sub-grid at the given depth (1 = first sub level). Unset: same as the parent.
    std::function<Divisions(int depth, Divisions parent)> sub_divisions;
};

/// Grid index whose overloaded bins are subdivided into nested indexes of the same kind.
///
/// Each sub-index reads its records through a SubGridSource proxying the parent's source, so ids inside a
/// sub-index are positions within that bin's list. Bins that alias one list after gap filling share one
/// sub-index.
class HierGridIndex : public GridIndex {
 public:
    HierGridIndex(IndexableSource& source, Divisions divisions, HierConfig config = {});
    ~HierGridIndex() override;

    const HierConfig& config() const { return config_; }
    /// The floor in effect for the last rebuild.
    double smallest_bin_dimension() const { return floor_; }
    int level() const { return level_; }

    std::size_t sub_index_count() const { return sub_indexes_.size(); }
    /// Sub-index serving bin c, or nullptr.
    const HierGridIndex* sub_index_at(BinCoord c) const;
    /// Deepest level below this index (0 when nothing is subdivided).
    int depth() const;
    /// Total number of indexes in the tree, this one included.
    std::size_t node_count() const;

    /// Record ids (in this index's id space) of every leaf bucket: each list that was not subdivided, at any
    /// level. Order follows a row-major walk of each grid.
    std::vector<std::vector<RecordId>> leaf_occupancies() const;

 protected:
    void on_before_rebuild() override;
    void on_after_rebuilt() override;
    SearchState search(Point2D q) const override;
    void scan_list(const BinList& list, Point2D q, SearchState& state) const override;

 private:
    HierGridIndex(std::unique_ptr<SubGridSource> source, Divisions divisions, HierConfig config, int level);

    SearchState delegate(const HierGridIndex& sub, Point2D q) const;

    HierConfig config_;
    double floor_ = 0.0;
    int level_ = 0;
    std::unique_ptr<SubGridSource> owned_source_;
    std::vector<std::unique_ptr<HierGridIndex>> sub_indexes_;
    std::vector<const HierGridIndex*> sub_table_;
    std::unordered_map<const BinList*, const HierGridIndex*> sub_by_list_;
};

}  // namespace hgrid
