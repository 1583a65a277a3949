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


#include <gtest/gtest.h>

#include "oracles.hpp"
#include "orthopair/algebra.hpp"

namespace {

using namespace orthopair;

const AlgebraDescriptor kDefault({3, 2});

Matrix diag2(Complex a, Complex b) {
    Matrix m = Matrix::Zero(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

TEST(AlgebraDescriptor, DimensionAndOffsets) {
    EXPECT_EQ(kDefault.dimension(), 13u);
    EXPECT_EQ(kDefault.offset(0), 0u);
    EXPECT_EQ(kDefault.offset(1), 9u);
}

TEST(AlgebraDescriptor, RejectsEmptyAndNonPositiveSizes) {
    EXPECT_THROW(AlgebraDescriptor(std::vector<int>{}), Error);
    EXPECT_THROW(AlgebraDescriptor({2, 0}), Error);
}

TEST(AlgebraElement, MismatchedAlgebrasAreRejected) {
    const AlgebraDescriptor other({2});
    try {
        (void)(AlgebraElement::identity(kDefault) + AlgebraElement::identity(other));
        FAIL() << "expected InvalidOperand";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::InvalidOperand);
    }
}

TEST(AlgebraElement, CoordinatesRoundTrip) {
    Rng rng(3);
    const AlgebraElement a = AlgebraElement::random(kDefault, rng);
    EXPECT_EQ(AlgebraElement::from_coordinates(kDefault, a.coordinates()), a);
}

TEST(Adjoint, IdentityIsSelfAdjoint) {
    const AlgebraElement id = AlgebraElement::identity(kDefault);
    EXPECT_EQ(id.adjoint(), id);
}

TEST(Adjoint, NilpotentUnit) {
    const AlgebraDescriptor d({2});
    const AlgebraElement e12 = AlgebraElement::matrix_unit(d, 0, 0, 1);
    EXPECT_EQ(e12.adjoint(), AlgebraElement::matrix_unit(d, 0, 1, 0));
}

TEST(Adjoint, InvolutionAndReversal) {
    Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        const AlgebraElement a = AlgebraElement::random(kDefault, rng);
        const AlgebraElement b = AlgebraElement::random(kDefault, rng);
        EXPECT_EQ(a.adjoint().adjoint(), a);
        EXPECT_LE(max_abs_diff((a * b).adjoint(), b.adjoint() * a.adjoint()), 1e-13 * (1 + a.norm() * b.norm()));
    }
}

TEST(Norm, MatchesSingularValueOracle) {
    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const AlgebraElement a = AlgebraElement::random(kDefault, rng);
        const double expected = oracle::svd_norm(a);
        EXPECT_NEAR(a.norm(), expected, 1e-12 * expected);
    }
}

TEST(Norm, CStarIdentity) {
    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const AlgebraElement a = AlgebraElement::random(kDefault, rng);
        const double n2 = oracle::svd_norm(a) * oracle::svd_norm(a);
        EXPECT_NEAR((a.adjoint() * a).norm(), n2, 1e-12 * n2);
    }
}

TEST(Norm, IdentityAndMatrixUnit) {
    EXPECT_DOUBLE_EQ(AlgebraElement::identity(kDefault).norm(), 1.0);
    EXPECT_NEAR(AlgebraElement::matrix_unit(kDefault, 0, 0, 2).norm(), 1.0, 1e-15);
    EXPECT_EQ(AlgebraElement(kDefault).norm(), 0.0);
}

TEST(PsdSqrt, Identity) {
    const AlgebraElement id = AlgebraElement::identity(kDefault);
    EXPECT_LE(max_abs_diff(psd_sqrt(id), id), 1e-15);
}

TEST(PsdSqrt, Diagonal) {
    const AlgebraDescriptor d({2});
    const AlgebraElement h(d, {diag2(4.0, 9.0)});
    EXPECT_LE(max_abs_diff(psd_sqrt(h), AlgebraElement(d, {diag2(2.0, 3.0)})), 1e-14);
}

TEST(PsdSqrt, SquaresBackOnRandomInputs) {
    Rng rng(14);
    for (int i = 0; i < 100; ++i) {
        const AlgebraElement g = AlgebraElement::random(kDefault, rng);
        const AlgebraElement h = g.adjoint() * g;
        const AlgebraElement s = psd_sqrt(h);
        EXPECT_LE(max_abs_diff(s * s, h), 1e-10 * h.norm());
        EXPECT_LE(max_abs_diff(s, s.adjoint()), 1e-14 * (1 + s.norm()));
        EXPECT_GE(min_eigenvalue(s), -1e-12 * s.norm());
    }
}

TEST(PsdSqrt, ClampsNegativeDustOfSingularInputs) {
    Rng rng(15);
    for (int i = 0; i < 20; ++i) {
        const Matrix g = rng.gaussian_matrix(3, 1);
        const AlgebraElement h(AlgebraDescriptor({3}), {g * g.adjoint()});
        const AlgebraElement s = psd_sqrt(h);
        EXPECT_LE(max_abs_diff(s * s, h), 1e-10 * h.norm());
    }
}

TEST(PsdSqrt, Errors) {
    const AlgebraDescriptor d({2});
    try {
        psd_sqrt(AlgebraElement::matrix_unit(d, 0, 0, 1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotHermitian);
    }
    try {
        psd_sqrt(AlgebraElement(d, {diag2(1.0, -0.5)}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotPositive);
    }
}

TEST(RankOne, FirstBasisVectorGivesMatrixUnit) {
    const AlgebraDescriptor d({2});
    Vector e1 = Vector::Zero(2);
    e1(0) = 1.0;
    const HilbertVector v{0, e1};
    EXPECT_EQ(rank_one(d, v, v), AlgebraElement::matrix_unit(d, 0, 0, 0));
}

TEST(RankOne, ActsAsInnerProductTimesEta) {
    Rng rng(16);
    const Vector eta = rng.gaussian_vector(3);
    const Vector zeta = rng.gaussian_vector(3);
    const Vector xi = rng.gaussian_vector(3);
    const AlgebraElement r = rank_one(kDefault, {0, eta}, {0, zeta});
    const Vector got = r.block(0) * xi;
    const Vector expected = zeta.dot(xi) * eta;  // [xi, zeta] = zeta^* xi
    EXPECT_LE((got - expected).norm(), 1e-13 * (1 + expected.norm()));
    EXPECT_TRUE(r.block(1).isZero());
}

TEST(RankOne, BlockMismatch) {
    try {
        rank_one(kDefault, {0, Vector::Ones(3)}, {1, Vector::Ones(2)});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::BlockMismatch);
    }
}

TEST(RankOne, UnitVectorGivesProjectionCompressingTheAlgebra) {
    Rng rng(17);
    for (int i = 0; i < 20; ++i) {
        const Vector eta = rng.unit_vector(3);
        const AlgebraElement e = rank_one(kDefault, {0, eta}, {0, eta});
        EXPECT_LE(max_abs_diff(e * e, e), 1e-14);
        EXPECT_LE(max_abs_diff(e.adjoint(), e), 1e-15);
        const AlgebraElement a = AlgebraElement::random(kDefault, rng);
        const Complex q = eta.dot(a.block(0) * eta);  // [a eta, eta]
        EXPECT_LE(max_abs_diff(e * a * e, q * e), 1e-13 * (1 + a.norm()));
    }
}

TEST(MinimalProjection, CanonicalChoiceIsFirstMatrixUnit) {
    EXPECT_EQ(minimal_projection(kDefault, 1), AlgebraElement::matrix_unit(kDefault, 1, 0, 0));
}

TEST(MinimalProjection, OneByOneBlockIsTheUnit) {
    const AlgebraDescriptor d({1});
    EXPECT_EQ(minimal_projection(d, 0), AlgebraElement::identity(d));
}

TEST(MinimalProjection, RandomVectorGivesTraceOneProjection) {
    Rng rng(18);
    for (int i = 0; i < 20; ++i) {
        const AlgebraElement e = minimal_projection(kDefault, 0, rng.complex_gaussian() * rng.unit_vector(3));
        EXPECT_LE(max_abs_diff(e * e, e), 1e-14);
        EXPECT_LE(max_abs_diff(e.adjoint(), e), 1e-15);
        EXPECT_NEAR(std::abs(e.trace() - 1.0), 0.0, 1e-14);
    }
}

TEST(MinimalProjection, ZeroVectorRejected) {
    try {
        minimal_projection(kDefault, 0, Vector::Zero(3));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::ZeroVector);
    }
}

TEST(MinimalProjection, CompressionLawPerBlock) {
    Rng rng(19);
    for (std::size_t b = 0; b < kDefault.block_count(); ++b) {
        for (int i = 0; i < 20; ++i) {
            const AlgebraElement e = minimal_projection(kDefault, b, rng.unit_vector(kDefault.block_size(b)));
            const AlgebraElement a = AlgebraElement::random(kDefault, rng);
            const AlgebraElement eae = e * a * e;
            EXPECT_LE(max_abs_diff(eae, eae.trace() * e), 1e-12 * (1 + a.norm()));
        }
    }
}

TEST(Symmetry, FromIdentityAndZeroProjection) {
    const AlgebraElement id = AlgebraElement::identity(kDefault);
    EXPECT_EQ(symmetry_from_projection(id), id);
    EXPECT_EQ(symmetry_from_projection(AlgebraElement(kDefault)), -id);
}

TEST(Symmetry, RandomIsSelfAdjointUnitary) {
    const AlgebraElement id = AlgebraElement::identity(kDefault);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const AlgebraElement u = random_symmetry(kDefault, seed);
        EXPECT_LE(max_abs_diff(u.adjoint(), u), 1e-12);
        EXPECT_LE(max_abs_diff(u * u, id), 1e-12);
    }
}

TEST(Center, UnitEmbedsAsIdentity) {
    EXPECT_EQ(CentralElement::constant(kDefault, 1.0).embed(), AlgebraElement::identity(kDefault));
}

TEST(Center, EmbeddedElementsCommute) {
    Rng rng(20);
    const CentralElement gamma = CentralElement::random(kDefault, rng);
    const AlgebraElement g = gamma.embed();
    EXPECT_TRUE(is_central(g));
    for (int i = 0; i < 50; ++i) {
        const AlgebraElement a = AlgebraElement::random(kDefault, rng);
        EXPECT_LE(max_abs_diff(g * a, a * g), 1e-13 * (1 + a.norm()));
    }
}

TEST(Center, CentralPartInvertsEmbed) {
    Rng rng(21);
    for (int i = 0; i < 20; ++i) {
        const CentralElement gamma = CentralElement::random(kDefault, rng);
        const CentralElement back = central_part(gamma.embed());
        for (std::size_t b = 0; b < kDefault.block_count(); ++b) {
            EXPECT_LE(std::abs(back[b] - gamma[b]), 1e-15 * std::abs(gamma[b]));
        }
    }
}

TEST(Center, OffDiagonalUnitIsNotCentral) {
    for (std::size_t b = 0; b < kDefault.block_count(); ++b) {
        const AlgebraElement e12 = AlgebraElement::matrix_unit(kDefault, b, 0, 1);
        EXPECT_FALSE(is_central(e12));
        const auto w = centrality_witness(e12);
        ASSERT_TRUE(w.has_value());
        EXPECT_EQ(w->block, b);
        // The named unit really fails to commute.
        const AlgebraElement unit = AlgebraElement::matrix_unit(kDefault, w->block, w->row, w->col);
        EXPECT_GT(distance(e12 * unit, unit * e12), 0.5);
        EXPECT_NEAR(w->commutator_norm, distance(e12 * unit, unit * e12), 1e-14);
    }
}

TEST(Center, NonScalarBlockIsNotCentral) {
    const AlgebraDescriptor d({2});
    EXPECT_FALSE(is_central(AlgebraElement(d, {diag2(1.0, 2.0)})));
}

TEST(Center, InverseAndSquareRoot) {
    const CentralElement g(kDefault, {Complex(4.0, 0.0), Complex(0.0, 2.0)});
    const CentralElement r = g.sqrt();
    for (std::size_t b = 0; b < 2; ++b) {
        EXPECT_LE(std::abs(r[b] * r[b] - g[b]), 1e-15);
        EXPECT_LE(std::abs(g.inverse()[b] * g[b] - 1.0), 1e-15);
        EXPECT_LE(std::abs(g.conj()[b] - std::conj(g[b])), 0.0);
    }
    EXPECT_DOUBLE_EQ(g.max_modulus(), 4.0);
}

TEST(Inverse, RandomAndSingular) {
    Rng rng(22);
    const AlgebraElement id = AlgebraElement::identity(kDefault);
    for (int i = 0; i < 20; ++i) {
        const AlgebraElement a = AlgebraElement::random(kDefault, rng);
        EXPECT_LE(max_abs_diff(a * inverse(a), id), 1e-10);
    }
    try {
        inverse(AlgebraElement::matrix_unit(kDefault, 0, 0, 0));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::Singular);
    }
}

TEST(PseudoInverse, PenroseConditionsOnRankDeficientInputs) {
    Rng rng(23);
    for (int i = 0; i < 50; ++i) {
        std::vector<Matrix> blocks;
        for (int k : kDefault.block_sizes()) {
            const int r = rng.uniform_int(0, k);
            blocks.push_back(rng.gaussian_matrix(k, r) * rng.gaussian_matrix(r, k));
        }
        const AlgebraElement a(kDefault, blocks);
        const AlgebraElement p = pseudo_inverse(a);
        const double scale = 1 + a.norm();
        EXPECT_LE(max_abs_diff(a * p * a, a), 1e-9 * scale);
        EXPECT_LE(max_abs_diff((a * p).adjoint(), a * p), 1e-9);
        EXPECT_LE(max_abs_diff((p * a).adjoint(), p * a), 1e-9);
        // Compare with the SVD-based pseudoinverse blockwise.
        for (std::size_t b = 0; b < kDefault.block_count(); ++b) {
            Eigen::JacobiSVD<Matrix> svd(a.block(b), Eigen::ComputeFullU | Eigen::ComputeFullV);
            svd.setThreshold(1e-10);
            const Matrix ref = svd.solve(Matrix::Identity(a.block(b).rows(), a.block(b).rows()));
            EXPECT_LE((p.block(b) - ref).cwiseAbs().maxCoeff(), 1e-7 * (1 + ref.norm()));
        }
    }
}

TEST(Eigenvalues, AscendingPerBlock) {
    const AlgebraDescriptor d({2, 2});
    const AlgebraElement h(d, {diag2(3.0, 1.0), diag2(-2.0, 5.0)});
    const std::vector<double> ev = eigenvalues(h);
    ASSERT_EQ(ev.size(), 4u);
    EXPECT_NEAR(ev[0], 1.0, 1e-15);
    EXPECT_NEAR(ev[1], 3.0, 1e-15);
    EXPECT_NEAR(ev[2], -2.0, 1e-15);
    EXPECT_NEAR(ev[3], 5.0, 1e-15);
    EXPECT_NEAR(min_eigenvalue(h), -2.0, 1e-15);
}

TEST(Random, DeriveSeedIsStable) {
    EXPECT_EQ(derive_seed(42, 0), derive_seed(42, 0));
    EXPECT_NE(derive_seed(42, 0), derive_seed(42, 1));
    EXPECT_NE(derive_seed(42, 0), derive_seed(43, 0));
}

TEST(Random, HaarUnitaryIsUnitary) {
    Rng rng(24);
    const Matrix u = rng.haar_unitary(4);
    EXPECT_LE((u.adjoint() * u - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-13);
}

}  // namespace
