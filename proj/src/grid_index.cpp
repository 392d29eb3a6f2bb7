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

#include "hgrid/grid_index.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <string>
#include <utility>

#include "hgrid/errors.hpp"

namespace hgrid {

namespace {

std::string describe(Point2D p) { return "(" + std::to_string(p.x) + ", " + std::to_string(p.y) + ")"; }

// Distance to the nearest bin edge, zero when rounding puts p a hair outside the bin it resolved to.
double clearance(Point2D p, BinCoord c, const GridShape& shape) {
    const Extents r = shape.bin_rect(c);
    const double d = std::min({p.x - r.min().x, r.max().x - p.x, p.y - r.min().y, r.max().y - p.y});
    return std::max(d, 0.0);
}

}  // namespace

// ---------------------------------------------------------------------------------------------------------------
// RenderedGrid

RenderedGrid::RenderedGrid(const GridShape& shape) : shape_(shape), bins_(shape.bin_count()) {}

std::optional<BinCoord> RenderedGrid::home_of(const BinList* list) const {
    const auto it = registry_.find(list);
    if (it == registry_.end()) {
        return std::nullopt;
    }
    return it->second;
}

void RenderedGrid::add(BinCoord c, RecordId id) {
    auto& slot = bins_[shape_.linear(c)];
    if (!slot) {
        slot = std::make_shared<BinList>();
        registry_.emplace(slot.get(), c);
    }
    slot->add(id);
}

void RenderedGrid::render_point(RecordId id, Point2D p) {
    const auto c = resolve_bin(p, shape_);
    if (!c) {
        throw OutsideExtentsError("point " + describe(p) + " is outside the grid extents");
    }
    add(*c, id);
}

void RenderedGrid::render_line(RecordId id, Point2D a, Point2D b) {
    const Extents& e = shape_.extents();
    if (!e.contains(a) || !e.contains(b)) {
        throw OutsideExtentsError("segment " + describe(a) + "-" + describe(b) + " leaves the grid extents");
    }
    if (a == b) {
        render_point(id, a);
        return;
    }
    const double x_lo = std::min(a.x, b.x), x_hi = std::max(a.x, b.x);
    const double y_lo = std::min(a.y, b.y), y_hi = std::max(a.y, b.y);
    const auto cols = shape_.bins_touching({{x_lo, y_lo}, {x_hi, y_hi}});
    if (!cols) {
        return;
    }
    auto y_at = [&](double x) {
        if (x == a.x) return a.y;
        if (x == b.x) return b.y;
        const double t = (x - a.x) / (b.x - a.x);
        return std::clamp(a.y + t * (b.y - a.y), y_lo, y_hi);
    };
    // Column by column: clip the segment to the column's slab and take every row its y-span touches.
    for (int i = cols->i0; i <= cols->i1; ++i) {
        const double sx0 = std::max(x_lo, shape_.column_edge(i));
        const double sx1 = std::min(x_hi, shape_.column_edge(i + 1));
        if (sx0 > sx1) {
            continue;
        }
        double sy0 = y_lo, sy1 = y_hi;
        if (a.x != b.x) {
            const double ya = y_at(sx0), yb = y_at(sx1);
            sy0 = std::min(ya, yb);
            sy1 = std::max(ya, yb);
        }
        const auto rows = shape_.bins_touching({{sx0, sy0}, {sx1, sy1}});
        if (!rows) {
            continue;
        }
        for (int j = rows->j0; j <= rows->j1; ++j) {
            add({i, j}, id);
        }
    }
}

void RenderedGrid::render_area(RecordId id, const Extents& rect) {
    if (!shape_.extents().contains(rect)) {
        throw OutsideExtentsError("area " + describe(rect.min()) + "-" + describe(rect.max()) +
                                  " leaves the grid extents");
    }
    if (rect.min() == rect.max()) {
        render_point(id, rect.min());
        return;
    }
    const auto r = shape_.bins_touching(rect);
    if (!r) {
        return;
    }
    for (int j = r->j0; j <= r->j1; ++j) {
        for (int i = r->i0; i <= r->i1; ++i) {
            add({i, j}, id);
        }
    }
}

// ---------------------------------------------------------------------------------------------------------------
// FilledGrid

FilledGrid::FilledGrid(const RenderedGrid& rendered)
    : width_(rendered.shape().divisions().x), bins_(rendered.shape().bin_count()) {
    for (std::size_t k = 0; k < bins_.size(); ++k) {
        bins_[k] = rendered.at(rendered.shape().coord(k));
    }
}

// ---------------------------------------------------------------------------------------------------------------
// GridIndex

GridIndex::GridIndex(IndexableSource& source, Divisions divisions) : source_(source), divisions_(divisions) {
    if (divisions.x < 1 || divisions.y < 1) {
        throw ConfigError("grid divisions must be at least 1x1");
    }
}

const GridShape& GridIndex::shape() const { return rendered().shape(); }

const RenderedGrid& GridIndex::rendered() const {
    if (!rendered_) {
        throw EmptyIndexError("index has not been built");
    }
    return *rendered_;
}

const FilledGrid& GridIndex::filled() const {
    if (!built_) {
        throw EmptyIndexError("index has not been built");
    }
    return filled_;
}

void GridIndex::rebuild() {
    std::unique_lock lock(mutex_);
    rebuild_locked();
}

void GridIndex::rebuild_locked() {
    built_ = false;
    rendered_.reset();

    const std::size_t count = source_.record_count();
    if (count == 0) {
        throw EmptySourceError("cannot build an index over an empty source");
    }
    const Extents extents = source_.data_extents();
    const GridShape shape(extents, divisions_);  // bin sizes follow from extents and divisions
    rendered_.emplace(shape);                    // fresh registry and null bins

    on_before_rebuild();
    render_records(*rendered_);
    if (rendered_->present_count() == 0) {
        rendered_.reset();
        throw EmptySourceError("no record rendered into the grid");
    }
    filled_ = FilledGrid(*rendered_);
    fill_gaps();
    built_ = true;
    on_after_rebuilt();
    source_.acknowledge_rebuild();
}

void GridIndex::render_records(RenderedGrid& grid) {
    Record scratch;
    const std::size_t n = source_.record_count();
    for (std::size_t k = 0; k < n; ++k) {
        grid.render_point(RecordId{k}, source_.fetch(RecordId{k}, scratch).position);
    }
}

void GridIndex::fill_gaps() {
    const GridShape& shape = rendered_->shape();
    for (std::size_t k = 0; k < shape.bin_count(); ++k) {
        const BinCoord c = shape.coord(k);
        if (rendered_->at(c)) {
            continue;
        }
        const BinList* list =
            gap_fill_ == GapFillStrategy::ring_search ? nearest_list_ring(c) : nearest_list_brute(c);
        filled_.set(c, rendered_->at(*rendered_->home_of(list)));
    }
}

const BinList* GridIndex::nearest_list_ring(BinCoord empty) const {
    const GridShape& shape = rendered_->shape();
    const Point2D center = bin_center(empty, shape);
    const double step = std::min(shape.bin_width(), shape.bin_height());
    const Divisions d = shape.divisions();
    const int max_ring = std::max({empty.i, d.x - 1 - empty.i, empty.j, d.y - 1 - empty.j});

    Record scratch;
    SearchState best;
    const BinList* best_list = nullptr;
    for (int ring = 1; ring <= max_ring; ++ring) {
        for (const BinCoord b : neighborhood(empty, ring, shape)) {
            const auto& list = rendered_->at(b);
            if (!list) {
                continue;
            }
            for (const RecordId id : *list) {
                const double d2 = dist_sq(center, source_.fetch(id, scratch).position);
                const RecordId before = best.id;
                const bool had = best.found;
                best.offer(id, d2);
                if (!had || best.id != before) {
                    best_list = list.get();
                }
            }
        }
        // Everything in ring r+1 is at least (r + 1/2) bin steps from the center.
        if (best.found) {
            const double bound = (ring + 0.5) * step;
            if (best.d2 < bound * bound * (1.0 - 1e-12)) {
                break;
            }
        }
    }
    return best_list;
}

const BinList* GridIndex::nearest_list_brute(BinCoord empty) const {
    const GridShape& shape = rendered_->shape();
    const Point2D center = bin_center(empty, shape);
    Record scratch;
    SearchState best;
    const BinList* best_list = nullptr;
    for (std::size_t k = 0; k < shape.bin_count(); ++k) {
        const auto& list = rendered_->at(shape.coord(k));
        if (!list) {
            continue;
        }
        for (const RecordId id : *list) {
            const double d2 = dist_sq(center, source_.fetch(id, scratch).position);
            const RecordId before = best.id;
            const bool had = best.found;
            best.offer(id, d2);
            if (!had || best.id != before) {
                best_list = list.get();
            }
        }
    }
    return best_list;
}

void GridIndex::refresh() {
    if (!source_.changed() && built_) {
        return;
    }
    std::unique_lock lock(mutex_);
    if (source_.changed() || !built_) {
        try {
            rebuild_locked();
        } catch (const EmptySourceError& e) {
            throw EmptyIndexError(std::string("index is empty: ") + e.what());
        }
    }
}

QueryResult GridIndex::nearest(Point2D q) {
    refresh();
    std::shared_lock lock(mutex_);
    const SearchState s = search(q);
    return {s.id, std::sqrt(s.d2), s.examined, s.short_circuited};
}

void GridIndex::scan_list(const BinList& list, Point2D q, SearchState& state) const {
    Record scratch;
    for (const RecordId id : list) {
        ++state.examined;
        state.offer(id, dist_sq(q, source_.fetch(id, scratch).position));
    }
}

GridIndex::SearchState GridIndex::search(Point2D q) const {
    if (!built_) {
        throw EmptyIndexError("index has not been built");
    }
    const GridShape& shape = rendered_->shape();
    SearchState state;
    const auto home = resolve_bin(q, shape);
    if (!home) {
        edge_scan(q, state);
        return state;
    }

    const BinList* home_list = filled_.at(*home).get();
    scan_list(*home_list, q, state);
    const double edge = clearance(q, *home, shape);
    if (state.found && state.d2 < edge * edge) {
        state.short_circuited = true;
        return state;
    }

    // Gap-filled neighbors frequently alias one list; each list is scanned once.
    const BinList* seen[9] = {home_list};
    std::size_t seen_count = 1;
    for (const BinCoord c : neighborhood(*home, 1, shape)) {
        const BinList* list = filled_.at(c).get();
        if (std::find(seen, seen + seen_count, list) != seen + seen_count) {
            continue;
        }
        seen[seen_count++] = list;
        scan_list(*list, q, state);
    }
    return state;
}

void GridIndex::edge_scan(Point2D q, SearchState& state) const {
    const GridShape& shape = rendered_->shape();
    struct Pending {
        double bound;
        std::size_t home;
        const BinList* list;
    };
    std::vector<Pending> lists;
    for (const BinCoord c : border_ring(shape)) {
        const BinList* list = filled_.at(c).get();
        if (std::any_of(lists.begin(), lists.end(), [&](const Pending& p) { return p.list == list; })) {
            continue;
        }
        const BinCoord home = *rendered_->home_of(list);
        lists.push_back({dist_sq_to_rect(q, shape.bin_rect(home)), shape.linear(home), list});
    }
    // Nearest home bins first; a list whose home bin is farther than the best record cannot improve on it.
    std::sort(lists.begin(), lists.end(), [](const Pending& a, const Pending& b) {
        return a.bound != b.bound ? a.bound < b.bound : a.home < b.home;
    });
    for (const Pending& p : lists) {
        if (state.found && p.bound > state.d2) {
            break;
        }
        scan_list(*p.list, q, state);
    }
}

std::vector<RecordId> GridIndex::range_query(const Extents& rect) {
    refresh();
    std::shared_lock lock(mutex_);
    const GridShape& shape = rendered_->shape();
    std::vector<RecordId> out;
    const auto range = shape.bins_touching(rect);
    if (!range) {
        return out;
    }
    // One extra bin of margin absorbs rounding between bin resolution and edge positions.
    const Divisions d = shape.divisions();
    const int i0 = std::max(range->i0 - 1, 0), i1 = std::min(range->i1 + 1, d.x - 1);
    const int j0 = std::max(range->j0 - 1, 0), j1 = std::min(range->j1 + 1, d.y - 1);
    Record scratch;
    for (int j = j0; j <= j1; ++j) {
        for (int i = i0; i <= i1; ++i) {
            const auto& list = rendered_->at({i, j});
            if (!list) {
                continue;
            }
            for (const RecordId id : *list) {
                if (rect.contains(source_.fetch(id, scratch).position)) {
                    out.push_back(id);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace hgrid
