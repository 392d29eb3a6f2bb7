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
#include <compare>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

#include "hgrid/core.hpp"

namespace hgrid {

/// Index of a record within the source it was fetched from.
struct RecordId {
    std::size_t value = 0;

    friend auto operator<=>(const RecordId&, const RecordId&) = default;
};

/// What the index sees of a record. Richer payloads stay behind IndexableSource::fetch.
struct Record {
    Point2D position;
};

/// Ascending, duplicate-free list of record ids held by one bin. Bins that share a list share the object, so a
/// list's address is its identity.
class BinList {
 public:
    BinList() = default;
    explicit BinList(std::vector<RecordId> ids);

    /// Inserts id keeping the list sorted; returns false if it was already present.
    bool add(RecordId id);

    const std::vector<RecordId>& ids() const { return ids_; }
    std::size_t size() const { return ids_.size(); }
    bool empty() const { return ids_.empty(); }
    RecordId operator[](std::size_t k) const { return ids_[k]; }
    auto begin() const { return ids_.begin(); }
    auto end() const { return ids_.end(); }

 private:
    std::vector<RecordId> ids_;
};

/// A collection that can be spatially indexed. The index only ever deals in record ids; fetch() maps an id to
/// its position, writing into a caller-owned scratch record so bulk passes allocate nothing per record.
///
/// Sources start out flagged as changed. Any mutation sets the flag again and only an index acknowledging a
/// rebuild clears it.
class IndexableSource {
 public:
    IndexableSource() = default;
    IndexableSource(const IndexableSource& other) : changed_(other.changed()) {}
    IndexableSource& operator=(const IndexableSource& other) {
        changed_.store(other.changed());
        return *this;
    }
    virtual ~IndexableSource() = default;

    virtual std::size_t record_count() const = 0;
    virtual Extents data_extents() const = 0;

    /// Overwrites scratch with record id and returns it. Throws std::out_of_range for id >= record_count().
    virtual const Record& fetch(RecordId id, Record& scratch) const = 0;

    bool changed() const { return changed_.load(std::memory_order_acquire); }
    void acknowledge_rebuild() { changed_.store(false, std::memory_order_release); }

 protected:
    void mark_changed() { changed_.store(true, std::memory_order_release); }

 private:
    std::atomic<bool> changed_{true};
};

/// Tight bounding box of every record position, padded on degenerate axes. Throws EmptySourceError when the
/// source has no records.
Extents compute_extents(const IndexableSource& source);

/// In-memory point set.
class PointCollection : public IndexableSource {
 public:
    PointCollection() = default;
    explicit PointCollection(std::vector<Point2D> points) : points_(std::move(points)) {}

    std::size_t record_count() const override { return points_.size(); }
    Extents data_extents() const override { return compute_extents(*this); }
    const Record& fetch(RecordId id, Record& scratch) const override;

    RecordId add(Point2D p);
    /// Removes a record; ids above it shift down by one.
    void remove(RecordId id);
    void move(RecordId id, Point2D p);

    const std::vector<Point2D>& points() const { return points_; }

 private:
    std::vector<Point2D> points_;
};

/// Presents one bin list of a parent source as a source of its own: local id k is parent id ids[k]. Nothing is
/// copied; the parent must outlive the proxy.
///
/// Extents are the tight box of the proxied records, clipped to the parent's extents so that degenerate padding
/// never reaches outside the parent.
class SubGridSource : public IndexableSource {
 public:
    SubGridSource(const IndexableSource& parent, std::shared_ptr<const BinList> ids);
    /// parent_extents must equal parent.data_extents(); passing it avoids recomputing it.
    SubGridSource(const IndexableSource& parent, std::shared_ptr<const BinList> ids, const Extents& parent_extents);

    std::size_t record_count() const override { return ids_->size(); }
    Extents data_extents() const override;
    const Record& fetch(RecordId id, Record& scratch) const override;

    RecordId parent_id(RecordId local) const { return (*ids_)[local.value]; }
    const IndexableSource& parent() const { return parent_; }
    const BinList& ids() const { return *ids_; }

 private:
    const IndexableSource& parent_;
    std::shared_ptr<const BinList> ids_;
    Extents parent_extents_;
};

}  // namespace hgrid
