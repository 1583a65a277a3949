// Copyright 2026 the orthopair authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "orthopair/random.hpp"

#include <cmath>

#include "orthopair/error.hpp"

namespace orthopair {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidOperand: return "InvalidOperand";
        case Errc::NotHermitian: return "NotHermitian";
        case Errc::NotPositive: return "NotPositive";
        case Errc::BlockMismatch: return "BlockMismatch";
        case Errc::ZeroVector: return "ZeroVector";
        case Errc::SpaceMismatch: return "SpaceMismatch";
        case Errc::InvalidTheta: return "InvalidTheta";
        case Errc::SingularGram: return "SingularGram";
        case Errc::NotALinear: return "NotALinear";
        case Errc::Singular: return "Singular";
        case Errc::NotMinimalProjection: return "NotMinimalProjection";
        case Errc::DegenerateSample: return "DegenerateSample";
        case Errc::InconsistentGamma: return "InconsistentGamma";
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::ParseError: return "ParseError";
    }
    return "Unknown";
}

double Rng::uniform(double lo, double hi) {
    // Fixed mapping from the raw 64-bit draw so sequences do not depend on the
    // standard library's distribution implementation.
    const double unit = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * unit;
}

int Rng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
}

Matrix Rng::gaussian_matrix(Eigen::Index rows, Eigen::Index cols) {
    Matrix m(rows, cols);
    for (Eigen::Index c = 0; c < cols; ++c) {
        for (Eigen::Index r = 0; r < rows; ++r) {
            m(r, c) = complex_gaussian();
        }
    }
    return m;
}

Vector Rng::gaussian_vector(Eigen::Index size) {
    Vector v(size);
    for (Eigen::Index i = 0; i < size; ++i) {
        v(i) = complex_gaussian();
    }
    return v;
}

Vector Rng::unit_vector(Eigen::Index size) {
    for (;;) {
        Vector v = gaussian_vector(size);
        const double n = v.norm();
        if (n > 1e-8) {
            return v / n;
        }
    }
}

Matrix Rng::haar_unitary(Eigen::Index size) {
    const Matrix z = gaussian_matrix(size, size);
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ() * Matrix::Identity(size, size);
    const Matrix& r = qr.matrixQR();
    for (Eigen::Index i = 0; i < size; ++i) {
        const Complex d = r(i, i);
        const double mag = std::abs(d);
        q.col(i) *= (mag > 0.0 ? d / mag : Complex{1.0, 0.0});
    }
    return q;
}

Matrix Rng::random_projection(Eigen::Index size, Eigen::Index rank) {
    const Matrix u = haar_unitary(size);
    const auto basis = u.leftCols(rank);
    return basis * basis.adjoint();
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept {
    std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace orthopair
