#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lambdaosc/generator.hpp"
#include "test_helpers.hpp"

using namespace lambdaosc;
using testing::fig2_params;
using testing::random_params;
using testing::reference_rhs_case1;
using testing::reference_rhs_case2;

namespace {

RateMatrix build(const PhysicalParams& p, Case which, int n_max,
                 const GeneratorVariants& v = {}) {
    const DressedParams d = derive_dressed(p);
    const BaseRates b = base_rates(d, p.gamma2, p.gamma3, p.gamma);
    if (which == Case::I)
        return assemble_case1(p, d,
                              case1_rates(b, d, p.gamma2, p.gamma3, p.gamma),
                              n_max, v);
    return assemble_case2(p, d, case2_rates(b, d, p.gamma2, p.gamma3, p.gamma),
                          n_max, v);
}

} // namespace

TEST_CASE("dimensions") {
    const PhysicalParams p = fig2_params();
    CHECK(build(p, Case::I, 4).dim() == 35);
    CHECK(build(p, Case::I, 1).dim() == 14);
    CHECK(build(p, Case::II, 4).dim() == 85);
    CHECK_THROWS_AS(build(p, Case::I, 0), std::invalid_argument);
    CHECK_THROWS_AS(build(p, Case::II, 1), std::invalid_argument);
}

TEST_CASE("sparsity pattern depends only on case and n_max") {
    std::mt19937_64 rng(5);
    PhysicalParams a = random_params(rng);
    PhysicalParams b = random_params(rng);
    // avoid structural zeros wiping entries
    a.g = 1.3; b.g = 2.1; a.gamma = 0.2; b.gamma = 0.4;
    a.omega23 = 11; b.omega23 = 17;
    for (Case c : {Case::I, Case::II}) {
        const RateMatrix ma = build(a, c, 8);
        const RateMatrix mb = build(b, c, 8);
        REQUIRE(ma.L.nonZeros() == mb.L.nonZeros());
        for (int k = 0; k <= ma.L.outerSize(); ++k)
            CHECK(ma.L.outerIndexPtr()[k] == mb.L.outerIndexPtr()[k]);
        for (int k = 0; k < ma.L.nonZeros(); ++k)
            CHECK(ma.L.innerIndexPtr()[k] == mb.L.innerIndexPtr()[k]);
        // row sparsity stays O(1)
        Eigen::VectorXi rowcount = Eigen::VectorXi::Zero(ma.dim());
        for (int k = 0; k < ma.L.outerSize(); ++k)
            for (Eigen::SparseMatrix<double>::InnerIterator it(ma.L, k); it;
                 ++it)
                rowcount[it.row()]++;
        CHECK(rowcount.maxCoeff() <= (c == Case::I ? 14 : 18));
    }
}

TEST_CASE("g = 0 decouples the probability block into a birth-death chain") {
    PhysicalParams p = fig2_params();
    p.g = 0;
    const int N = 6;
    const RateMatrix m = build(p, Case::I, N);
    const double kn = p.kappa * p.nbar, kp = p.kappa * (1 + p.nbar);
    Eigen::MatrixXd D(m.L);
    for (int n = 0; n <= N; ++n) {
        for (int j = 0; j < m.dim(); ++j) {
            const double v = D(m.index(0, n), j);
            if (j == m.index(0, n))
                CHECK(v == doctest::Approx(-2 * kn * (n + 1) - 2 * kp * n));
            else if (n > 0 && j == m.index(0, n - 1))
                CHECK(v == doctest::Approx(2 * kn * n));
            else if (n < N && j == m.index(0, n + 1))
                CHECK(v == doctest::Approx(2 * kp * (n + 1)));
            else
                CHECK(v == 0.0);
        }
    }
}

TEST_CASE("matrix action matches the straight-line reference (case I)") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> gauss;
    for (int k = 0; k < 8; ++k) {
        const PhysicalParams p = random_params(rng);
        const int N = 10;
        const RateMatrix m = build(p, Case::I, N);
        BlockVector s(Case::I, N);
        for (int i = 0; i < s.size(); ++i) s.data[i] = gauss(rng);
        const Eigen::VectorXd got = m.L * s.data;
        const Eigen::VectorXd want = reference_rhs_case1(p, s);
        const double scale = want.cwiseAbs().maxCoeff() + 1.0;
        CHECK((got - want).cwiseAbs().maxCoeff() / scale <= 1e-13);
    }
}

TEST_CASE("matrix action matches the straight-line reference (case II)") {
    std::mt19937_64 rng(29);
    std::normal_distribution<double> gauss;
    for (int k = 0; k < 8; ++k) {
        const PhysicalParams p = random_params(rng);
        const int N = 10;
        const RateMatrix m = build(p, Case::II, N);
        BlockVector s(Case::II, N);
        for (int i = 0; i < s.size(); ++i) s.data[i] = gauss(rng);
        const Eigen::VectorXd got = m.L * s.data;
        const Eigen::VectorXd want = reference_rhs_case2(p, s);
        const double scale = want.cwiseAbs().maxCoeff() + 1.0;
        CHECK((got - want).cwiseAbs().maxCoeff() / scale <= 1e-13);
    }
}

TEST_CASE("truncation locality: doubling n_max preserves interior rows") {
    std::mt19937_64 rng(37);
    const PhysicalParams p = random_params(rng);
    for (Case c : {Case::I, Case::II}) {
        const int N = 8;
        const RateMatrix small = build(p, c, N);
        const RateMatrix big = build(p, c, 2 * N);
        Eigen::MatrixXd S(small.L), B(big.L);
        for (int i = 0; i < block_count(c); ++i)
            for (int n = 0; n + 1 < N; ++n) // rows not touching n = N
                for (int j = 0; j < block_count(c); ++j)
                    for (int m = 0; m <= N; ++m)
                        CHECK(S(small.index(i, n), small.index(j, m)) ==
                              B(big.index(i, n), big.index(j, m)));
    }
}

TEST_CASE("trace functional structure") {
    std::mt19937_64 rng(41);
    PhysicalParams p = random_params(rng);
    p.g = 1.7;
    const int N = 30;

    SUBCASE("no bath quanta: exactly zero") {
        PhysicalParams q = p;
        q.g = 0;
        q.nbar = 0;
        const RateMatrix m = build(q, Case::I, N);
        const Eigen::RowVectorXd w = trace_functional(m);
        CHECK(w.cwiseAbs().maxCoeff() == 0.0);
    }

    SUBCASE("probability columns: zero except the truncation boundary") {
        PhysicalParams q = p;
        q.g = 0;
        const RateMatrix m = build(q, Case::I, N);
        const Eigen::RowVectorXd w = trace_functional(m);
        for (int n = 0; n < N; ++n) CHECK(w[m.index(0, n)] == 0.0);
        CHECK(w[m.index(0, N)] ==
              doctest::Approx(-2 * q.kappa * q.nbar * (N + 1)));
    }

    SUBCASE("case I: coherence-block entries cancel pairwise") {
        const RateMatrix m = build(p, Case::I, N);
        const Eigen::RowVectorXd w = trace_functional(m);
        const DressedParams d = derive_dressed(p);
        for (int n = 0; n <= N; ++n) {
            CHECK(w[m.index(3, n)] == doctest::Approx(d.g_bar));
            CHECK(w[m.index(5, n)] == doctest::Approx(-d.g_bar));
            if (n < N)
                CHECK(w[m.index(3, n + 1)] + w[m.index(5, n)] ==
                      doctest::Approx(0.0));
        }
        for (int i : {1, 2, 4, 6})
            for (int n = 0; n <= N; ++n) CHECK(w[m.index(i, n)] == 0.0);
    }
}

TEST_CASE("variant switches change the matrix") {
    std::mt19937_64 rng(43);
    PhysicalParams p = random_params(rng);
    p.g = 2.0;
    p.gamma = 0.5;
    p.omega23 = 13;
    GeneratorVariants def;
    for (int k = 0; k < 5; ++k) {
        GeneratorVariants v;
        switch (k) {
            case 0: v.case1_s5_drive_literal = false; break;
            case 1: v.case1_population_cross_term = false; break;
            case 2: v.case2_s3_two_quanta_term = false; break;
            case 3: v.case2_s15_shifted_index = false; break;
            case 4: v.case2_s16_literal_index = false; break;
        }
        const Case c = k < 2 ? Case::I : Case::II;
        const RateMatrix a = build(p, c, 6, def);
        const RateMatrix b = build(p, c, 6, v);
        CHECK(Eigen::MatrixXd(a.L - b.L).cwiseAbs().maxCoeff() > 0.0);
    }
}

TEST_CASE("fingerprint tracks parameters") {
    const PhysicalParams p = fig2_params();
    PhysicalParams q = p;
    q.g += 1e-9;
    CHECK(build(p, Case::I, 4).param_fingerprint ==
          build(p, Case::I, 4).param_fingerprint);
    CHECK(build(p, Case::I, 4).param_fingerprint !=
          build(q, Case::I, 4).param_fingerprint);
}
