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

#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

namespace orthopair {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Every random draw in the library flows through an Rng constructed from an
// explicit seed. Sub-seeds for case i of a run are derive_seed(master, i).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double gaussian() { return normal_(engine_); }
    double uniform(double lo, double hi);
    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi);
    Complex complex_gaussian() { return {gaussian(), gaussian()}; }
    Matrix gaussian_matrix(Eigen::Index rows, Eigen::Index cols);
    Vector gaussian_vector(Eigen::Index size);
    Vector unit_vector(Eigen::Index size);
    /// Haar-distributed unitary (QR of a Gaussian matrix with phase correction).
    Matrix haar_unitary(Eigen::Index size);
    /// Orthogonal projection onto a uniformly random subspace of the given rank.
    Matrix random_projection(Eigen::Index size, Eigen::Index rank);
    std::uint64_t next_seed() { return engine_(); }

private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

/// splitmix64 mix of (master, index); stable across platforms.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) noexcept;

}  // namespace orthopair
