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

#include <atomic>
#include <cstddef>
#include <limits>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "hgrid/core.hpp"
#include "hgrid/source.hpp"

namespace hgrid {

struct QueryResult {
    RecordId record;
    double distance = 0.0;
    std::size_t records_examined = 0;
    /// True when the search stopped after the query's own bin.
    bool short_circuited = false;
};

/// Grid of true occupancy. A bin is null until something renders into it; each list is registered under the
/// coordinate that owns it.
class RenderedGrid {
 public:
    explicit RenderedGrid(const GridShape& shape);

    const GridShape& shape() const { return shape_; }

    /// These throw OutsideExtentsError when the primitive is not inside the grid extents.
    void render_point(RecordId id, Point2D p);
    /// Adds id to every bin the closed segment touches.
    void render_line(RecordId id, Point2D a, Point2D b);
    /// Adds id to every bin whose closed rectangle intersects rect.
    void render_area(RecordId id, const Extents& rect);

    const std::shared_ptr<BinList>& at(BinCoord c) const { return bins_[shape_.linear(c)]; }
    const std::unordered_map<const BinList*, BinCoord>& registry() const { return registry_; }
    std::optional<BinCoord> home_of(const BinList* list) const;
    std::size_t present_count() const { return registry_.size(); }

 private:
    void add(BinCoord c, RecordId id);

    GridShape shape_;
    std::vector<std::shared_ptr<BinList>> bins_;
    std::unordered_map<const BinList*, BinCoord> registry_;
};

/// Every bin references a list: its own if it has one, otherwise the list holding the record nearest its center.
class FilledGrid {
 public:
    FilledGrid() = default;
    explicit FilledGrid(const RenderedGrid& rendered);

    const std::shared_ptr<const BinList>& at(BinCoord c) const {
        return bins_[c.j * static_cast<std::size_t>(width_) + c.i];
    }
    void set(BinCoord c, std::shared_ptr<const BinList> list) {
        bins_[c.j * static_cast<std::size_t>(width_) + c.i] = std::move(list);
    }

 private:
    int width_ = 0;
    std::vector<std::shared_ptr<const BinList>> bins_;
};

enum class GapFillStrategy {
    ring_search,  // expanding Chebyshev rings around the empty bin
    brute_force,  // every record against every empty bin; reference only
};

/// Single-layer grid spatial index over an IndexableSource.
///
/// rebuild() runs the fixed pipeline: read extents and count, reset the registry and bins, size the bins,
/// on_before_rebuild(), render_records(), copy rendered lists into the filled grid, fill gaps,
/// on_after_rebuilt(), then clear the source's changed flag. Queries rebuild first whenever the source reports a
/// change.
///
/// A built index answers any number of concurrent queries. Rebuilds take an exclusive lock.
class GridIndex {
 public:
    GridIndex(IndexableSource& source, Divisions divisions);
    virtual ~GridIndex() = default;
    GridIndex(const GridIndex&) = delete;
    GridIndex& operator=(const GridIndex&) = delete;

    /// Throws EmptySourceError (leaving the index unbuilt) when the source has no records.
    void rebuild();
    /// Rebuilds only if the source changed since the last build (or nothing was built yet).
    void refresh();

    /// Approximate nearest record: the query's bin, then its 1-neighborhood unless the short circuit applies.
    /// Queries outside the extents scan the border ring. Throws EmptyIndexError when nothing can be built.
    QueryResult nearest(Point2D q);

    /// Ids whose positions lie in the closed rectangle, ascending.
    std::vector<RecordId> range_query(const Extents& rect);

    bool built() const { return built_; }
    Divisions divisions() const { return divisions_; }
    const IndexableSource& source() const { return source_; }
    const GridShape& shape() const;
    const RenderedGrid& rendered() const;
    const FilledGrid& filled() const;

    void set_gap_fill_strategy(GapFillStrategy s) { gap_fill_ = s; }

 protected:
    /// Running best candidate of one search.
    struct SearchState {
        RecordId id;
        double d2 = std::numeric_limits<double>::infinity();
        std::size_t examined = 0;
        bool found = false;
        bool short_circuited = false;

        void offer(RecordId candidate, double candidate_d2) {
            if (!found || candidate_d2 < d2 || (candidate_d2 == d2 && candidate < id)) {
                id = candidate;
                d2 = candidate_d2;
                found = true;
            }
        }
    };

    virtual void on_before_rebuild() {}
    virtual void on_after_rebuilt() {}

    /// Renders every record of the source. The default treats each record as a point.
    virtual void render_records(RenderedGrid& grid);

    /// Query against the current build, without locking or lazy rebuild.
    virtual SearchState search(Point2D q) const;

    /// Folds one bin list into the search.
    virtual void scan_list(const BinList& list, Point2D q, SearchState& state) const;

 private:
    void rebuild_locked();
    void fill_gaps();
    const BinList* nearest_list_ring(BinCoord empty) const;
    const BinList* nearest_list_brute(BinCoord empty) const;
    void edge_scan(Point2D q, SearchState& state) const;

    IndexableSource& source_;
    Divisions divisions_;
    GapFillStrategy gap_fill_ = GapFillStrategy::ring_search;
    std::atomic<bool> built_{false};
    std::optional<RenderedGrid> rendered_;
    FilledGrid filled_;
    mutable std::shared_mutex mutex_;
};

}  // namespace hgrid
