// Copyright 2026 The scatmet Authors
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

#include "scatmet/occupation.h"

#include <algorithm>
#include <charconv>

#include "scatmet/error.h"

namespace scatmet {

namespace {

int parse_int(std::string_view text) {
    int value = 0;
    const auto *begin = text.data();
    const auto *end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end || text.empty()) {
        fail(ErrorKind::DomainError, "cannot parse integer '" + std::string(text) + "'");
    }
    return value;
}

}  // namespace

OccupationVector::OccupationVector(int modes) : modes_(modes) {
    if (modes < 0) {
        fail(ErrorKind::DomainError, "negative mode count");
    }
}

OccupationVector OccupationVector::from_dense(std::span<const int> counts) {
    OccupationVector v(static_cast<int>(counts.size()));
    for (size_t j = 0; j < counts.size(); ++j) {
        if (counts[j] < 0) {
            fail(ErrorKind::DomainError, "negative photon count");
        }
        if (counts[j] > 0) {
            v.occupied_.push_back({static_cast<int>(j), counts[j]});
            v.total_ += counts[j];
        }
    }
    return v;
}

OccupationVector OccupationVector::from_pairs(int modes, std::vector<ModeCount> pairs) {
    OccupationVector v(modes);
    std::sort(pairs.begin(), pairs.end(), [](const ModeCount &a, const ModeCount &b) { return a.mode < b.mode; });
    for (const auto &p : pairs) {
        if (p.mode < 0 || p.mode >= modes) {
            fail(ErrorKind::DomainError, "mode index " + std::to_string(p.mode) + " outside [0, " +
                                             std::to_string(modes) + ")");
        }
        if (p.count < 0) {
            fail(ErrorKind::DomainError, "negative photon count");
        }
        if (p.count == 0) {
            continue;
        }
        if (!v.occupied_.empty() && v.occupied_.back().mode == p.mode) {
            v.occupied_.back().count += p.count;
        } else {
            v.occupied_.push_back(p);
        }
        v.total_ += p.count;
    }
    return v;
}

OccupationVector OccupationVector::parse(std::string_view text, int modes) {
    if (text.find(':') != std::string_view::npos) {
        if (modes <= 0) {
            fail(ErrorKind::DomainError, "sparse occupation strings need an explicit mode count");
        }
        std::vector<ModeCount> pairs;
        size_t start = 0;
        while (start <= text.size()) {
            size_t comma = text.find(',', start);
            if (comma == std::string_view::npos) {
                comma = text.size();
            }
            std::string_view item = text.substr(start, comma - start);
            const size_t colon = item.find(':');
            if (colon == std::string_view::npos) {
                fail(ErrorKind::DomainError, "expected idx:count, got '" + std::string(item) + "'");
            }
            const int index = parse_int(item.substr(0, colon));
            pairs.push_back({index - 1, parse_int(item.substr(colon + 1))});
            start = comma + 1;
        }
        return from_pairs(modes, std::move(pairs));
    }
    if (text.empty()) {
        if (modes > 0) {
            return OccupationVector(modes);
        }
        fail(ErrorKind::DomainError, "empty occupation string");
    }
    if (modes != 0 && static_cast<int>(text.size()) != modes) {
        fail(ErrorKind::DomainError, "occupation '" + std::string(text) + "' has " + std::to_string(text.size()) +
                                         " digits but m = " + std::to_string(modes));
    }
    std::vector<int> counts;
    counts.reserve(text.size());
    for (char ch : text) {
        if (ch < '0' || ch > '9') {
            fail(ErrorKind::DomainError, "occupation digits must be 0-9, got '" + std::string(text) + "'");
        }
        counts.push_back(ch - '0');
    }
    return from_dense(counts);
}

int OccupationVector::count(int mode) const {
    if (mode < 0 || mode >= modes_) {
        fail(ErrorKind::DomainError, "mode index out of range");
    }
    auto it = std::lower_bound(occupied_.begin(), occupied_.end(), mode,
                               [](const ModeCount &p, int m) { return p.mode < m; });
    return it != occupied_.end() && it->mode == mode ? it->count : 0;
}

int OccupationVector::max_count() const noexcept {
    int best = 0;
    for (const auto &p : occupied_) {
        best = std::max(best, p.count);
    }
    return best;
}

std::vector<int> OccupationVector::dense() const {
    std::vector<int> out(modes_, 0);
    for (const auto &p : occupied_) {
        out[p.mode] = p.count;
    }
    return out;
}

OccupationVector OccupationVector::permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != modes_) {
        fail(ErrorKind::DomainError, "permutation size does not match mode count");
    }
    std::vector<ModeCount> moved;
    moved.reserve(occupied_.size());
    for (const auto &p : occupied_) {
        moved.push_back({perm[p.mode], p.count});
    }
    return from_pairs(modes_, std::move(moved));
}

std::int64_t OccupationVector::sum_of_squares() const noexcept {
    std::int64_t acc = 0;
    for (const auto &p : occupied_) {
        acc += static_cast<std::int64_t>(p.count) * p.count;
    }
    return acc;
}

std::string OccupationVector::to_string() const {
    if (modes_ > 64 || max_count() > 9) {
        return to_sparse_string();
    }
    std::string out(modes_, '0');
    for (const auto &p : occupied_) {
        out[p.mode] = static_cast<char>('0' + p.count);
    }
    return out;
}

std::string OccupationVector::to_sparse_string() const {
    std::string out;
    for (const auto &p : occupied_) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(p.mode + 1) + ":" + std::to_string(p.count);
    }
    return out;
}

}  // namespace scatmet
