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

// Matrix and table serialization shared by the CLI and the tests.

#ifndef SCATMET_IO_H
#define SCATMET_IO_H

#include <ostream>
#include <string>
#include <vector>

#include "scatmet/linalg.h"

namespace scatmet {

/// {"rows": r, "cols": c, "data": [[re, im], ...]} in row-major order.
std::string matrix_to_json(const ComplexMatrix &m);
/// Accepts the form above or nested rows of reals: [[1, 0], [0, 1]].
ComplexMatrix matrix_from_json(const std::string &text);

/// Whitespace-aligned grid; complex entries print as a+bi when any imaginary
/// part is non-negligible.
std::string matrix_to_text(const ComplexMatrix &m, int precision = 6);

/// Full round-trip precision (%.17g). NaN prints as "nan".
std::string format_double(double x);
/// `digits` significant digits (%.*g).
std::string format_sig(double x, int digits = 9);

/// Minimal CSV writer with LF line endings.
class CsvWriter {
   public:
    CsvWriter(std::ostream &out, const std::vector<std::string> &header);
    CsvWriter &cell(double x);
    CsvWriter &cell(long long x);
    CsvWriter &cell(const std::string &s);
    CsvWriter &empty();
    void end_row();

   private:
    void sep();
    std::ostream &out_;
    bool first_ = true;
};

std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &content);

/// Lowercase hex SHA-256 of `data`.
std::string sha256_hex(const std::string &data);

}  // namespace scatmet

#endif
