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

#include "scatmet/io.h"

#include <openssl/evp.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "json.hpp"
#include "scatmet/error.h"

namespace scatmet {

std::string matrix_to_json(const ComplexMatrix &m) {
    nlohmann::json data = nlohmann::json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            data.push_back({m(r, c).real(), m(r, c).imag()});
        }
    }
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["data"] = std::move(data);
    return j.dump();
}

ComplexMatrix matrix_from_json(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::DomainError, std::string("matrix file is not JSON: ") + e.what());
    }
    try {
        if (j.is_object()) {
            const int rows = j.at("rows").get<int>();
            const int cols = j.at("cols").get<int>();
            const auto &data = j.at("data");
            if (rows < 0 || cols < 0 || data.size() != static_cast<std::size_t>(rows) * cols) {
                fail(ErrorKind::DomainError, "matrix data length does not match rows * cols");
            }
            ComplexMatrix m(rows, cols);
            for (int r = 0; r < rows; ++r) {
                for (int c = 0; c < cols; ++c) {
                    const auto &z = data[static_cast<std::size_t>(r) * cols + c];
                    m(r, c) = z.is_array() ? Complex(z.at(0).get<double>(), z.at(1).get<double>())
                                           : Complex(z.get<double>(), 0.0);
                }
            }
            return m;
        }
        if (j.is_array()) {
            const int rows = static_cast<int>(j.size());
            const int cols = rows == 0 ? 0 : static_cast<int>(j[0].size());
            ComplexMatrix m(rows, cols);
            for (int r = 0; r < rows; ++r) {
                if (static_cast<int>(j[r].size()) != cols) {
                    fail(ErrorKind::DomainError, "ragged matrix rows");
                }
                for (int c = 0; c < cols; ++c) {
                    m(r, c) = j[r][c].get<double>();
                }
            }
            return m;
        }
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::DomainError, std::string("bad matrix JSON: ") + e.what());
    }
    fail(ErrorKind::DomainError, "matrix JSON must be an object or an array of rows");
}

std::string matrix_to_text(const ComplexMatrix &m, int precision) {
    const bool complex = m.imag().cwiseAbs().maxCoeff() > 1e-14;
    std::vector<std::string> cells;
    std::size_t width = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            std::ostringstream os;
            os << std::fixed << std::setprecision(precision);
            const double re = std::abs(m(r, c).real()) < 1e-15 ? 0.0 : m(r, c).real();
            os << re;
            if (complex) {
                const double im = std::abs(m(r, c).imag()) < 1e-15 ? 0.0 : m(r, c).imag();
                os << (im < 0 ? "-" : "+") << std::abs(im) << "i";
            }
            cells.push_back(os.str());
            width = std::max(width, cells.back().size());
        }
    }
    std::ostringstream out;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            out << (c == 0 ? "" : "  ") << std::setw(static_cast<int>(width)) << cells[r * m.cols() + c];
        }
        out << "\n";
    }
    return out.str();
}

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_sig(double x, int digits) {
    if (std::isnan(x)) {
        return "nan";
    }
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.*g", digits, x);
    return buf;
}

CsvWriter::CsvWriter(std::ostream &out, const std::vector<std::string> &header) : out_(out) {
    for (const auto &h : header) {
        cell(h);
    }
    end_row();
}

void CsvWriter::sep() {
    if (!first_) {
        out_ << ',';
    }
    first_ = false;
}

CsvWriter &CsvWriter::cell(double x) {
    sep();
    out_ << format_double(x);
    return *this;
}

CsvWriter &CsvWriter::cell(long long x) {
    sep();
    out_ << x;
    return *this;
}

CsvWriter &CsvWriter::cell(const std::string &s) {
    sep();
    out_ << s;
    return *this;
}

CsvWriter &CsvWriter::empty() {
    sep();
    return *this;
}

void CsvWriter::end_row() {
    out_ << '\n';
    first_ = true;
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorKind::DomainError, "cannot open '" + path + "'");
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        fail(ErrorKind::DomainError, "cannot write '" + path + "'");
    }
    out << content;
}

std::string sha256_hex(const std::string &data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) {
        os << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
    }
    return os.str();
}

}  // namespace scatmet
