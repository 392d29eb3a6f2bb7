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

#include <stdexcept>
#include <string>

namespace hgrid {

/// A point or primitive fell strictly outside the extents it was resolved against.
class OutsideExtentsError : public std::out_of_range {
 public:
    explicit OutsideExtentsError(const std::string& what) : std::out_of_range(what) {}
};

/// Raised when an index is asked to build over a source with no records.
class EmptySourceError : public std::runtime_error {
 public:
    explicit EmptySourceError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a query runs against an index that has not been (or could not be) built.
class EmptyIndexError : public std::runtime_error {
 public:
    explicit EmptyIndexError(const std::string& what) : std::runtime_error(what) {}
};

class ConfigError : public std::invalid_argument {
 public:
    explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace hgrid
