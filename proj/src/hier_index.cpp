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

#include "hgrid/hier_index.hpp"

#include <algorithm>
#include <utility>

#include "hgrid/errors.hpp"

namespace hgrid {

HierGridIndex::HierGridIndex(IndexableSource& source, Divisions divisions, HierConfig config)
    : GridIndex(source, divisions), config_(std::move(config)) {
    if (config_.max_bin_records < 1) {
        throw ConfigError("max_bin_records must be at least 1");
    }
    if (config_.smallest_bin_dimension && !(*config_.smallest_bin_dimension > 0.0)) {
        throw ConfigError("smallest_bin_dimension must be positive");
    }
}

HierGridIndex::HierGridIndex(std::unique_ptr<SubGridSource> source, Divisions divisions, HierConfig config,
                             int level)
    : GridIndex(*source, divisions), config_(std::move(config)), level_(level), owned_source_(std::move(source)) {}

HierGridIndex::~HierGridIndex() = default;

const HierGridIndex* HierGridIndex::sub_index_at(BinCoord c) const {
    if (!built() || !shape().in_grid(c)) {
        return nullptr;
    }
    return sub_table_[shape().linear(c)];
}

int HierGridIndex::depth() const {
    int d = 0;
    for (const auto& sub : sub_indexes_) {
        d = std::max(d, 1 + sub->depth());
    }
    return d;
}

std::size_t HierGridIndex::node_count() const {
    std::size_t n = 1;
    for (const auto& sub : sub_indexes_) {
        n += sub->node_count();
    }
    return n;
}

std::vector<std::vector<RecordId>> HierGridIndex::leaf_occupancies() const {
    std::vector<std::vector<RecordId>> leaves;
    const GridShape& grid = shape();
    for (std::size_t k = 0; k < grid.bin_count(); ++k) {
        const auto& list = rendered().at(grid.coord(k));
        if (!list) {
            continue;
        }
        const auto it = sub_by_list_.find(list.get());
        if (it == sub_by_list_.end()) {
            leaves.push_back(list->ids());
            continue;
        }
        const HierGridIndex& sub = *it->second;
        for (auto leaf : sub.leaf_occupancies()) {
            for (RecordId& id : leaf) {
                id = sub.owned_source_->parent_id(id);
            }
            leaves.push_back(std::move(leaf));
        }
    }
    return leaves;
}

void HierGridIndex::on_before_rebuild() {
    sub_by_list_.clear();
    sub_indexes_.clear();
    sub_table_.assign(shape().bin_count(), nullptr);
    floor_ = config_.smallest_bin_dimension.value_or(shape().extents().diagonal() * 1e-6);
}

void HierGridIndex::on_after_rebuilt() {
    const GridShape& grid = shape();
    if (!(grid.bin_width() > floor_ && grid.bin_height() > floor_)) {
        return;
    }
    HierConfig child_config = config_;
    child_config.smallest_bin_dimension = floor_;
    const Divisions child_divisions =
        config_.sub_divisions ? config_.sub_divisions(level_ + 1, divisions()) : divisions();

    const std::size_t total = source().record_count();
    for (std::size_t k = 0; k < grid.bin_count(); ++k) {
        const auto& list = rendered().at(grid.coord(k));
        // A list holding every record cannot be partitioned further (coincident points).
        if (!list || list->size() <= config_.max_bin_records || list->size() == total) {
            continue;
        }
        auto proxy = std::make_unique<SubGridSource>(source(), list, grid.extents());
        std::unique_ptr<HierGridIndex> sub(
            new HierGridIndex(std::move(proxy), child_divisions, child_config, level_ + 1));
        sub->rebuild();
        sub_by_list_.emplace(list.get(), sub.get());
        sub_indexes_.push_back(std::move(sub));
    }
    if (sub_indexes_.empty()) {
        return;
    }
    for (std::size_t k = 0; k < grid.bin_count(); ++k) {
        const auto it = sub_by_list_.find(filled().at(grid.coord(k)).get());
        if (it != sub_by_list_.end()) {
            sub_table_[k] = it->second;
        }
    }
}

HierGridIndex::SearchState HierGridIndex::delegate(const HierGridIndex& sub, Point2D q) const {
    SearchState s = sub.search(q);
    if (s.found) {
        s.id = sub.owned_source_->parent_id(s.id);
    }
    return s;
}

HierGridIndex::SearchState HierGridIndex::search(Point2D q) const {
    if (!built()) {
        throw EmptyIndexError("index has not been built");
    }
    if (!sub_indexes_.empty()) {
        if (const auto home = resolve_bin(q, shape())) {
            if (const HierGridIndex* sub = sub_table_[shape().linear(*home)]) {
                return delegate(*sub, q);
            }
        }
    }
    return GridIndex::search(q);
}

void HierGridIndex::scan_list(const BinList& list, Point2D q, SearchState& state) const {
    if (config_.neighbor_subgrids == HierConfig::NeighborSubgrids::recurse && !sub_by_list_.empty()) {
        const auto it = sub_by_list_.find(&list);
        if (it != sub_by_list_.end()) {
            const SearchState s = delegate(*it->second, q);
            state.examined += s.examined;
            if (s.found) {
                state.offer(s.id, s.d2);
            }
            return;
        }
    }
    GridIndex::scan_list(list, q, state);
}

}  // namespace hgrid
