#include "lambdaosc/generator.hpp"

#include <cstring>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace lambdaosc {

namespace {

// FNV-1a over the parameter bytes; identifies a matrix provenance in dumps.
std::uint64_t fingerprint(const PhysicalParams& p, Case c, int n_max) {
    const double vals[] = {p.omega, p.omega23, p.Omega0, p.g, p.gamma2,
                           p.gamma3, p.gamma, p.kappa, p.nbar,
                           double(static_cast<int>(c)), double(n_max)};
    std::uint64_t h = 1469598103934665603ull;
    const unsigned char* bytes = reinterpret_cast<const unsigned char*>(vals);
    for (std::size_t i = 0; i < sizeof(vals); ++i) {
        h ^= bytes[i];
        h *= 1099511628211ull;
    }
    return h;
}

class Builder {
public:
    Builder(Case c, int n_max) : c_(c), n_max_(n_max) {}

    // add coefficient of s^(j)_m into the equation for s^(i)_n;
    // out-of-ladder m is dropped (hard truncation)
    void add(int i, int n, int j, int m, double val) {
        if (m < 0 || m > n_max_ || val == 0.0) return;
        trip_.emplace_back(i * (n_max_ + 1) + n, j * (n_max_ + 1) + m, val);
    }

    RateMatrix finish(const PhysicalParams& p) {
        RateMatrix out;
        out.which = c_;
        out.n_max = n_max_;
        out.L.resize(block_count(c_) * (n_max_ + 1),
                     block_count(c_) * (n_max_ + 1));
        out.L.setFromTriplets(trip_.begin(), trip_.end());
        out.L.makeCompressed();
        double mx = 0;
        for (int k = 0; k < out.L.nonZeros(); ++k)
            mx = std::max(mx, std::abs(out.L.valuePtr()[k]));
        out.max_abs_entry = mx;
        out.param_fingerprint = fingerprint(p, c_, n_max_);
        return out;
    }

private:
    Case c_;
    int n_max_;
    std::vector<Eigen::Triplet<double>> trip_;
};

// single-quantum thermal ladder shared by the population blocks:
// -2 kn ((n+1) s_n - n s_{n-1}) - 2 kp (n s_n - (n+1) s_{n+1})
void population_ladder(Builder& B, int i, int n, double kn, double kp) {
    B.add(i, n, i, n, -2 * kn * (n + 1) - 2 * kp * n);
    B.add(i, n, i, n - 1, 2 * kn * n);
    B.add(i, n, i, n + 1, 2 * kp * (n + 1));
}

} // namespace

RateMatrix assemble_case1(const PhysicalParams& p, const DressedParams& d,
                          const CaseIRates& r, int n_max,
                          const GeneratorVariants& v) {
    if (n_max < 1)
        throw std::invalid_argument("assemble_case1: n_max must be >= 1");
    const double kn = p.kappa * p.nbar;        // kappa*nbar
    const double kp = p.kappa * (1 + p.nbar);  // kappa*(1+nbar)
    const double gb = d.g_bar;
    const double de = d.delta_bar;
    Builder B(Case::I, n_max);
    for (int n = 0; n <= n_max; ++n) {
        // s0: i gb (P5 - P3) -> -gb s5 + gb s3 ; thermal ladder
        population_ladder(B, 0, n, kn, kp);
        B.add(0, n, 5, n, -gb);
        B.add(0, n, 3, n, +gb);
        // s1: same drive, plus pumping from s0 and damping
        population_ladder(B, 1, n, kn, kp);
        B.add(1, n, 5, n, -gb);
        B.add(1, n, 3, n, +gb);
        B.add(1, n, 0, n, r.g1_0);
        B.add(1, n, 1, n, -r.g1_1);
        if (v.case1_population_cross_term) B.add(1, n, 2, n, -r.g1_2);
        // s2: i gb (P5 + P3) -> -gb s5 - gb s3
        population_ladder(B, 2, n, kn, kp);
        B.add(2, n, 5, n, -gb);
        B.add(2, n, 3, n, -gb);
        B.add(2, n, 0, n, r.g2_0);
        B.add(2, n, 1, n, -r.g2_1);
        B.add(2, n, 2, n, -r.g2_2);
        // s3: de s4 - gb n (s1_n - s2_n - s1_{n-1} - s2_{n-1})
        B.add(3, n, 4, n, de);
        B.add(3, n, 1, n, -gb * n);
        B.add(3, n, 2, n, +gb * n);
        B.add(3, n, 1, n - 1, +gb * n);
        B.add(3, n, 2, n - 1, +gb * n);
        B.add(3, n, 3, n, -kp * (2 * n - 1) - kn * (2 * n + 1) - r.g3_3);
        B.add(3, n, 3, n + 1, 2 * kp * (n + 1));
        B.add(3, n, 3, n - 1, 2 * kn * n);
        B.add(3, n, 5, n, -2 * kp);
        // s4: -de s3
        B.add(4, n, 3, n, -de);
        B.add(4, n, 4, n, -kp * (2 * n - 1) - kn * (2 * n + 1) - r.g4_4());
        B.add(4, n, 4, n + 1, 2 * kp * (n + 1));
        B.add(4, n, 4, n - 1, 2 * kn * n);
        B.add(4, n, 6, n, -2 * kp);
        // s5: de s6 + gb (n+1)(s1_n + s2_n - s1_{n+1} + s2_{n+1})
        B.add(5, n, 6, n, de);
        B.add(5, n, 1, n, gb * (n + 1));
        B.add(5, n, 2, n, gb * (n + 1));
        B.add(5, n, 1, n + 1, -gb * (n + 1));
        B.add(5, n, 2, n + 1,
              (v.case1_s5_drive_literal ? +1.0 : -1.0) * gb * (n + 1));
        B.add(5, n, 5, n, -kp * (2 * n + 1) - kn * (2 * n + 3) - r.g5_5());
        B.add(5, n, 5, n + 1, 2 * kp * (n + 1));
        B.add(5, n, 5, n - 1, 2 * kn * n);
        B.add(5, n, 3, n, 2 * kn);
        // s6: -de s5
        B.add(6, n, 5, n, -de);
        B.add(6, n, 6, n, -kn * (2 * n + 3) - kp * (2 * n + 1) - r.g6_6());
        B.add(6, n, 6, n - 1, 2 * kn * n);
        B.add(6, n, 6, n + 1, 2 * kp * (n + 1));
        B.add(6, n, 4, n, 2 * kn);
    }
    return B.finish(p);
}

RateMatrix assemble_case2(const PhysicalParams& p, const DressedParams& d,
                          const CaseIIRates& t, int n_max,
                          const GeneratorVariants& v) {
    if (n_max < 2)
        throw std::invalid_argument("assemble_case2: n_max must be >= 2");
    const double kn = p.kappa * p.nbar;
    const double kp = p.kappa * (1 + p.nbar);
    const double gt = d.g_tilde;
    const double de = d.delta_tilde;
    Builder B(Case::II, n_max);
    for (int n = 0; n <= n_max; ++n) {
        // s0: i gt (P3 - P5 - P9 + P7), all imaginary-type columns
        population_ladder(B, 0, n, kn, kp);
        B.add(0, n, 3, n, -gt);
        B.add(0, n, 5, n, +gt);
        B.add(0, n, 9, n, +gt);
        B.add(0, n, 7, n, -gt);
        // s1: i gt (P7 - P9)
        population_ladder(B, 1, n, kn, kp);
        B.add(1, n, 7, n, -gt);
        B.add(1, n, 9, n, +gt);
        B.add(1, n, 0, n, t.t1_0);
        B.add(1, n, 1, n, -t.t1_1);
        B.add(1, n, 2, n, -t.t1_2);
        // s2: -i gt (P9 + P7)
        population_ladder(B, 2, n, kn, kp);
        B.add(2, n, 9, n, +gt);
        B.add(2, n, 7, n, +gt);
        B.add(2, n, 0, n, t.t2_0);
        B.add(2, n, 1, n, +t.t2_1);
        B.add(2, n, 2, n, -t.t2_2);
        // s3: de s4 + gt (n(2 s0_n - s1_{n-1} - s2_{n-1}) - 2n s1_n - s11_n)
        B.add(3, n, 4, n, de);
        B.add(3, n, 0, n, 2 * gt * n);
        B.add(3, n, 1, n - 1, -gt * n);
        B.add(3, n, 2, n - 1, -gt * n);
        if (v.case2_s3_two_quanta_term) {
            B.add(3, n, 1, n, -gt * 2 * n);
            B.add(3, n, 11, n, -gt);
        } else {
            B.add(3, n, 1, n, -gt * (2 * n + 1));
        }
        B.add(3, n, 3, n, -kp * (2 * n - 1) - kn * (2 * n + 1) - t.t3_3);
        B.add(3, n, 3, n + 1, 2 * kp * (n + 1));
        B.add(3, n, 3, n - 1, 2 * kn * n);
        B.add(3, n, 9, n, -2 * kp);
        B.add(3, n, 7, n, t.t3_7);
        // s4: -de s3 ; -i gt P12 -> +gt s12
        B.add(4, n, 3, n, -de);
        B.add(4, n, 12, n, +gt);
        B.add(4, n, 4, n, -kp * (2 * n - 1) - kn * (2 * n + 1) - t.t4_4());
        B.add(4, n, 4, n + 1, 2 * kp * (n + 1));
        B.add(4, n, 4, n - 1, 2 * kn * n);
        B.add(4, n, 10, n, -2 * kp);
        B.add(4, n, 8, n, t.t4_8());
        // s5: de s6 + gt (s11 + (n+1)(s1_{n+1} - s2_{n+1}) - 2(n+1)(s0_n - s1_n))
        B.add(5, n, 6, n, de);
        B.add(5, n, 11, n, gt);
        B.add(5, n, 1, n + 1, gt * (n + 1));
        B.add(5, n, 2, n + 1, -gt * (n + 1));
        B.add(5, n, 0, n, -2 * gt * (n + 1));
        B.add(5, n, 1, n, 2 * gt * (n + 1));
        B.add(5, n, 5, n, -kp * (2 * n + 1) - kn * (2 * n + 3) - t.t5_5);
        B.add(5, n, 5, n + 1, 2 * kp * (n + 1));
        B.add(5, n, 5, n - 1, 2 * kn * n);
        B.add(5, n, 7, n, 2 * kn);
        B.add(5, n, 9, n, t.t5_9);
        // s6: -de s5 ; +i gt P12 -> -gt s12
        B.add(6, n, 5, n, -de);
        B.add(6, n, 12, n, -gt);
        B.add(6, n, 6, n, -kn * (2 * n + 3) - kp * (2 * n + 1) - t.t6_6());
        B.add(6, n, 6, n - 1, 2 * kn * n);
        B.add(6, n, 6, n + 1, 2 * kp * (n + 1));
        B.add(6, n, 8, n, 2 * kn);
        B.add(6, n, 10, n, t.t6_10());
        // s7: de s8 + gt (s13 + n(s1_n - s2_n) - 2n(s0_{n-1} - s1_{n-1}))
        B.add(7, n, 8, n, de);
        B.add(7, n, 13, n, gt);
        B.add(7, n, 1, n, gt * n);
        B.add(7, n, 2, n, -gt * n);
        B.add(7, n, 0, n - 1, -2 * gt * n);
        B.add(7, n, 1, n - 1, 2 * gt * n);
        B.add(7, n, 7, n, -kn * (2 * n + 1) - kp * (2 * n - 1) - t.t7_7());
        B.add(7, n, 7, n - 1, 2 * kn * n);
        B.add(7, n, 7, n + 1, 2 * kp * (n + 1));
        B.add(7, n, 5, n, -2 * kp);
        B.add(7, n, 3, n, t.t7_3());
        // s8: -de s7 ; +i gt P14 -> -gt s14
        B.add(8, n, 7, n, -de);
        B.add(8, n, 14, n, -gt);
        B.add(8, n, 8, n, -kn * (2 * n + 1) - kp * (2 * n - 1) - t.t8_8());
        B.add(8, n, 8, n - 1, 2 * kn * n);
        B.add(8, n, 8, n + 1, 2 * kp * (n + 1));
        B.add(8, n, 6, n, -2 * kp);
        B.add(8, n, 4, n, t.t8_4());
        // s9: de s10 + gt (2(n+1)(s0_{n+1} - s1_{n+1}) - (n+1)(s1_n + s2_n) - s15_n)
        B.add(9, n, 10, n, de);
        B.add(9, n, 0, n + 1, 2 * gt * (n + 1));
        B.add(9, n, 1, n + 1, -2 * gt * (n + 1));
        B.add(9, n, 1, n, -gt * (n + 1));
        B.add(9, n, 2, n, -gt * (n + 1));
        B.add(9, n, 15, n, -gt);
        B.add(9, n, 9, n, -kp * (2 * n + 1) - kn * (2 * n + 3) - t.t9_9());
        B.add(9, n, 9, n + 1, 2 * kp * (n + 1));
        B.add(9, n, 9, n - 1, 2 * kn * n);
        B.add(9, n, 3, n, 2 * kn);
        B.add(9, n, 5, n, t.t9_5);
        // s10: -de s9 ; -i gt P16 -> +gt s16
        B.add(10, n, 9, n, -de);
        B.add(10, n, 16, n, +gt);
        B.add(10, n, 10, n, -kn * (2 * n + 3) - kp * (2 * n + 1) - t.t10_10());
        B.add(10, n, 10, n - 1, 2 * kn * n);
        B.add(10, n, 10, n + 1, 2 * kp * (n + 1));
        B.add(10, n, 4, n, 2 * kn);
        B.add(10, n, 6, n, t.t10_6());
        // s11: 2i de P12 -> -2 de s12 ; i gt (n P5 - (n+1) P3) -> -gt n s5 + gt (n+1) s3
        B.add(11, n, 12, n, -2 * de);
        B.add(11, n, 5, n, -gt * n);
        B.add(11, n, 3, n, +gt * (n + 1));
        B.add(11, n, 11, n, -2 * kp * n - 2 * kn * (n + 1) - t.t11_11);
        B.add(11, n, 11, n + 1, 2 * kp * (n + 1));
        B.add(11, n, 11, n - 1, 2 * kn * n);
        B.add(11, n, 15, n, -2 * kp);
        B.add(11, n, 13, n, 2 * kn);
        // s12: +2 de s11 + gt (n s6 - (n+1) s4)
        B.add(12, n, 11, n, 2 * de);
        B.add(12, n, 6, n, gt * n);
        B.add(12, n, 4, n, -gt * (n + 1));
        B.add(12, n, 12, n, -2 * kp * n - 2 * kn * (n + 1) - t.t12_12());
        B.add(12, n, 12, n + 1, 2 * kp * (n + 1));
        B.add(12, n, 12, n - 1, 2 * kn * n);
        B.add(12, n, 16, n, -2 * kp);
        B.add(12, n, 14, n, 2 * kn);
        // s13: -2 de s14 ; i gt ((n-1) P7_n - n P3_{n-1}) -> -gt ((n-1) s7_n - n s3_{n-1})
        B.add(13, n, 14, n, -2 * de);
        B.add(13, n, 7, n, -gt * (n - 1));
        B.add(13, n, 3, n - 1, +gt * n);
        B.add(13, n, 13, n, -2 * kp * (n - 1) - 2 * kn * n - t.t13_13());
        B.add(13, n, 13, n + 1, 2 * kp * (n + 1));
        B.add(13, n, 13, n - 1, 2 * kn * n);
        B.add(13, n, 11, n, -4 * kp);
        // s14: +2 de s13 + gt ((n-1) s8_n - n s4_{n-1})
        B.add(14, n, 13, n, 2 * de);
        B.add(14, n, 8, n, gt * (n - 1));
        B.add(14, n, 4, n - 1, -gt * n);
        B.add(14, n, 14, n, -2 * kp * (n - 1) - 2 * kn * n - t.t14_14());
        B.add(14, n, 14, n + 1, 2 * kp * (n + 1));
        B.add(14, n, 14, n - 1, 2 * kn * n);
        B.add(14, n, 12, n, -4 * kp);
        // s15: -2 de s16 ; i gt ((n+1) P5_{n+1} - (n+2) P9_n) -> -gt (...)
        B.add(15, n, 16, n, -2 * de);
        B.add(15, n, 5, v.case2_s15_shifted_index ? n + 1 : n, -gt * (n + 1));
        B.add(15, n, 9, n, +gt * (n + 2));
        B.add(15, n, 15, n, -2 * kp * (n + 1) - kn * 2 * (n + 2) - t.t15_15());
        B.add(15, n, 15, n + 1, 2 * kp * (n + 1));
        B.add(15, n, 15, n - 1, 2 * kn * n);
        B.add(15, n, 11, n, 4 * kn);
        // s16: +2 de s15 + gt ((n+1) s6_{n+1} - (n+2) s10_n)
        B.add(16, n, 15, n, 2 * de);
        B.add(16, n, 6, v.case2_s16_literal_index ? n + 1 : n, gt * (n + 1));
        B.add(16, n, 10, n, -gt * (n + 2));
        B.add(16, n, 16, n, -2 * kp * (n + 1) - kn * 2 * (n + 2) - t.t16_16());
        B.add(16, n, 16, n + 1, 2 * kp * (n + 1));
        B.add(16, n, 16, n - 1, 2 * kn * n);
        B.add(16, n, 12, n, 4 * kn);
    }
    return B.finish(p);
}

Eigen::RowVectorXd trace_functional(const RateMatrix& m) {
    Eigen::VectorXd ind = Eigen::VectorXd::Zero(m.dim());
    ind.segment(0, m.ladder()).setOnes();
    Eigen::RowVectorXd w = ind.transpose() * m.L;
    return w;
}

void dump_coordinates(const RateMatrix& m, std::ostream& os) {
    os << "# case=" << static_cast<int>(m.which) << " n_max=" << m.n_max
       << " dim=" << m.dim() << " fingerprint=" << m.param_fingerprint << "\n";
    for (int k = 0; k < m.L.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(m.L, k); it; ++it)
            os << it.row() << " " << it.col() << " " << it.value() << "\n";
}

} // namespace lambdaosc
