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

#include "hgrid/source.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "hgrid/errors.hpp"

namespace hgrid {

BinList::BinList(std::vector<RecordId> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool BinList::add(RecordId id) {
    // Rebuilds render in ascending id order, so the append path is the common one.
    if (ids_.empty() || ids_.back() < id) {
        ids_.push_back(id);
        return true;
    }
    const auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
    if (*it == id) {
        return false;
    }
    ids_.insert(it, id);
    return true;
}

Extents compute_extents(const IndexableSource& source) {
    const std::size_t n = source.record_count();
    if (n == 0) {
        throw EmptySourceError("cannot compute extents of an empty source");
    }
    Record scratch;
    const Point2D first = source.fetch(RecordId{0}, scratch).position;
    double x0 = first.x, x1 = first.x, y0 = first.y, y1 = first.y;
    for (std::size_t k = 1; k < n; ++k) {
        const Point2D p = source.fetch(RecordId{k}, scratch).position;
        x0 = std::min(x0, p.x);
        x1 = std::max(x1, p.x);
        y0 = std::min(y0, p.y);
        y1 = std::max(y1, p.y);
    }
    return inflate_degenerate({{x0, y0}, {x1, y1}});
}

const Record& PointCollection::fetch(RecordId id, Record& scratch) const {
    if (id.value >= points_.size()) {
        throw std::out_of_range("record " + std::to_string(id.value) + " out of range for " +
                                std::to_string(points_.size()) + " points");
    }
    scratch.position = points_[id.value];
    return scratch;
}

RecordId PointCollection::add(Point2D p) {
    points_.push_back(p);
    mark_changed();
    return RecordId{points_.size() - 1};
}

void PointCollection::remove(RecordId id) {
    if (id.value >= points_.size()) {
        throw std::out_of_range("record " + std::to_string(id.value) + " out of range");
    }
    points_.erase(points_.begin() + static_cast<std::ptrdiff_t>(id.value));
    mark_changed();
}

void PointCollection::move(RecordId id, Point2D p) {
    if (id.value >= points_.size()) {
        throw std::out_of_range("record " + std::to_string(id.value) + " out of range");
    }
    points_[id.value] = p;
    mark_changed();
}

SubGridSource::SubGridSource(const IndexableSource& parent, std::shared_ptr<const BinList> ids)
    : SubGridSource(parent, std::move(ids), parent.data_extents()) {}

SubGridSource::SubGridSource(const IndexableSource& parent, std::shared_ptr<const BinList> ids,
                             const Extents& parent_extents)
    : parent_(parent), ids_(std::move(ids)), parent_extents_(parent_extents) {
    if (!ids_) {
        throw std::invalid_argument("SubGridSource requires a bin list");
    }
}

Extents SubGridSource::data_extents() const {
    const Extents tight = compute_extents(*this);
    const Extents& outer = parent_extents_;
    return {{std::max(tight.min().x, outer.min().x), std::max(tight.min().y, outer.min().y)},
            {std::min(tight.max().x, outer.max().x), std::min(tight.max().y, outer.max().y)}};
}

const Record& SubGridSource::fetch(RecordId id, Record& scratch) const {
    if (id.value >= ids_->size()) {
        throw std::out_of_range("record " + std::to_string(id.value) + " out of range for sub-grid of " +
                                std::to_string(ids_->size()));
    }
    return parent_.fetch((*ids_)[id.value], scratch);
}

}  // namespace hgrid
