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

#include "scatmet/decomp.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "json.hpp"
#include "scatmet/error.h"

namespace scatmet {

namespace {

constexpr double kPi = std::numbers::pi;

// Givens rotation G(a) = [[cos a, -sin a], [sin a, cos a]] on modes (mode, mode+1).
struct Givens {
    int mode;
    double angle;
};

void apply_left(RealMatrix &mat, const Givens &g) {
    const double c = std::cos(g.angle);
    const double s = std::sin(g.angle);
    for (Eigen::Index col = 0; col < mat.cols(); ++col) {
        const double a = mat(g.mode, col);
        const double b = mat(g.mode + 1, col);
        mat(g.mode, col) = c * a - s * b;
        mat(g.mode + 1, col) = s * a + c * b;
    }
}

void apply_right(RealMatrix &mat, const Givens &g) {
    const double c = std::cos(g.angle);
    const double s = std::sin(g.angle);
    for (Eigen::Index row = 0; row < mat.rows(); ++row) {
        const double a = mat(row, g.mode);
        const double b = mat(row, g.mode + 1);
        mat(row, g.mode) = c * a + s * b;
        mat(row, g.mode + 1) = -s * a + c * b;
    }
}

// Wraps into (-pi, pi].
double wrap(double a) {
    while (a > kPi) {
        a -= 2 * kPi;
    }
    while (a <= -kPi) {
        a += 2 * kPi;
    }
    return a;
}

// G(a) as V2 plus sign flips, appended in light order.
void emit_rotation(ElementList &out, int mode, double angle) {
    angle = wrap(angle);
    bool negate_both = false;
    if (std::abs(angle) > kPi / 2) {
        // G(a) = G(a - pi) * (-I)
        negate_both = true;
        angle = wrap(angle - kPi);
    }
    if (negate_both) {
        out.push_back(SignFlip{mode});
        out.push_back(SignFlip{mode + 1});
    }
    const double eta = std::cos(angle);
    if (angle >= 0) {
        out.push_back(Rotation{mode, eta});
    } else {
        // G(-|a|) = Z V2(cos a) Z with Z = diag(1, -1)
        out.push_back(SignFlip{mode + 1});
        out.push_back(Rotation{mode, eta});
        out.push_back(SignFlip{mode + 1});
    }
}

bool touches(const Element &e, int mode) {
    if (const auto *r = std::get_if<Rotation>(&e)) {
        return r->mode == mode || r->mode + 1 == mode;
    }
    return std::get<SignFlip>(e).mode == mode;
}

// Drops identity rotations and cancels pairs of flips on a mode with nothing
// acting on that mode in between.
ElementList simplify(ElementList in) {
    in.erase(std::remove_if(in.begin(), in.end(),
                            [](const Element &e) {
                                const auto *r = std::get_if<Rotation>(&e);
                                return r != nullptr && std::abs(1.0 - r->eta) < 1e-15;
                            }),
             in.end());
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < in.size() && !changed; ++i) {
            const auto *flip = std::get_if<SignFlip>(&in[i]);
            if (flip == nullptr) {
                continue;
            }
            for (std::size_t j = i + 1; j < in.size(); ++j) {
                if (!touches(in[j], flip->mode)) {
                    continue;
                }
                if (std::holds_alternative<SignFlip>(in[j])) {
                    in.erase(in.begin() + j);
                    in.erase(in.begin() + i);
                    changed = true;
                }
                break;
            }
        }
    }
    return in;
}

}  // namespace

ElementList decompose_orthogonal(const RealMatrix &t, double tolerance) {
    const int m = static_cast<int>(t.rows());
    if (t.cols() != m || m < 1) {
        fail(ErrorKind::NotOrthogonal, "decomposition needs a square matrix");
    }
    const double err = orthogonality_error(t);
    if (!(err <= tolerance)) {
        fail(ErrorKind::NotOrthogonal, "matrix is not orthogonal: max |T Tᵀ - I| = " + std::to_string(err));
    }
    RealMatrix work = t;
    std::vector<Givens> left;   // applied as L_k ... L_1 T
    std::vector<Givens> right;  // applied as T R_1 ... R_p
    for (int i = 0; i < m - 1; ++i) {
        for (int j = 0; j <= i; ++j) {
            if (i % 2 == 0) {
                // Null (m-1-j, i-j) with a rotation on columns (i-j, i-j+1).
                const int row = m - 1 - j;
                const int col = i - j;
                const Givens g{col, std::atan2(-work(row, col), work(row, col + 1))};
                apply_right(work, g);
                right.push_back(g);
            } else {
                // Null (m-1-i+j, j) with a rotation on rows (m-2-i+j, m-1-i+j).
                const int row = m - 1 - i + j;
                const int col = j;
                const Givens g{row - 1, std::atan2(-work(row, col), work(row - 1, col))};
                apply_left(work, g);
                left.push_back(g);
            }
        }
    }
    // work = L_k..L_1 T R_1..R_p is diagonal with entries ±1, so
    // T = L_1ᵀ..L_kᵀ D R_pᵀ..R_1ᵀ. Conjugating by D moves it to the output:
    // Gᵀ D = D (D Gᵀ D) and D G(a) D = G(d_i d_{i+1} a).
    std::vector<int> d(m);
    for (int k = 0; k < m; ++k) {
        d[k] = work(k, k) < 0 ? -1 : 1;
    }
    ElementList out;
    for (const Givens &g : right) {
        emit_rotation(out, g.mode, -g.angle);
    }
    for (auto it = left.rbegin(); it != left.rend(); ++it) {
        emit_rotation(out, it->mode, -it->angle * d[it->mode] * d[it->mode + 1]);
    }
    for (int k = 0; k < m; ++k) {
        if (d[k] < 0) {
            out.push_back(SignFlip{k});
        }
    }
    return simplify(std::move(out));
}

RealMatrix reconstruct(const ElementList &elements, int m) {
    RealMatrix mat = RealMatrix::Identity(m, m);
    for (const Element &e : elements) {
        if (const auto *r = std::get_if<Rotation>(&e)) {
            if (r->mode < 0 || r->mode + 1 >= m) {
                fail(ErrorKind::DomainError, "rotation on modes outside the network");
            }
            if (!(r->eta >= -1e-12 && r->eta <= 1 + 1e-12)) {
                fail(ErrorKind::DomainError, "reflectivity outside [0, 1]");
            }
            const double eta = std::clamp(r->eta, 0.0, 1.0);
            apply_left(mat, Givens{r->mode, std::acos(eta)});
        } else {
            const int mode = std::get<SignFlip>(e).mode;
            if (mode < 0 || mode >= m) {
                fail(ErrorKind::DomainError, "sign flip on a mode outside the network");
            }
            mat.row(mode) *= -1.0;
        }
    }
    return mat;
}

int rotation_count(const ElementList &elements) {
    return static_cast<int>(
        std::count_if(elements.begin(), elements.end(), [](const Element &e) { return std::holds_alternative<Rotation>(e); }));
}

std::vector<double> reflectivity_report(const ElementList &elements) {
    std::vector<double> etas;
    for (const Element &e : elements) {
        if (const auto *r = std::get_if<Rotation>(&e)) {
            etas.push_back(std::round(r->eta * 1e4) / 1e4);
        }
    }
    std::sort(etas.begin(), etas.end());
    return etas;
}

std::string elements_to_json(const ElementList &elements, int indent) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Element &e : elements) {
        if (const auto *r = std::get_if<Rotation>(&e)) {
            arr.push_back({{"type", "rotation"}, {"modes", {r->mode + 1, r->mode + 2}}, {"eta", r->eta}});
        } else {
            arr.push_back({{"type", "sign"}, {"mode", std::get<SignFlip>(e).mode + 1}});
        }
    }
    return arr.dump(indent);
}

ElementList elements_from_json(const std::string &text) {
    ElementList out;
    try {
        const nlohmann::json arr = nlohmann::json::parse(text);
        for (const auto &item : arr) {
            const std::string type = item.at("type").get<std::string>();
            if (type == "rotation") {
                const auto &modes = item.at("modes");
                const int a = modes.at(0).get<int>();
                if (modes.at(1).get<int>() != a + 1) {
                    fail(ErrorKind::DomainError, "rotations act on neighbouring modes");
                }
                out.push_back(Rotation{a - 1, item.at("eta").get<double>()});
            } else if (type == "sign") {
                out.push_back(SignFlip{item.at("mode").get<int>() - 1});
            } else {
                fail(ErrorKind::DomainError, "unknown element type '" + type + "'");
            }
        }
    } catch (const nlohmann::json::exception &e) {
        fail(ErrorKind::DomainError, std::string("bad element list: ") + e.what());
    }
    return out;
}

std::string circuit_listing(const ElementList &elements) {
    std::ostringstream os;
    os.precision(6);
    os << std::fixed;
    int step = 1;
    for (const Element &e : elements) {
        os << step++ << ": ";
        if (const auto *r = std::get_if<Rotation>(&e)) {
            os << "V2(" << r->eta << ") modes " << r->mode + 1 << "-" << r->mode + 2 << "\n";
        } else {
            os << "pi mode " << std::get<SignFlip>(e).mode + 1 << "\n";
        }
    }
    return os.str();
}

}  // namespace scatmet
