#include "lambdaosc/oracle.hpp"

#include <Eigen/SparseLU>

#include <cmath>
#include <limits>
#include <sstream>
#include <tuple>
#include <vector>

namespace lambdaosc {

namespace {

ComplexSparse sparse_from_dense(const ComplexDense& M) {
    std::vector<Eigen::Triplet<Cplx>> trip;
    for (int j = 0; j < M.cols(); ++j)
        for (int i = 0; i < M.rows(); ++i)
            if (M(i, j) != Cplx(0, 0)) trip.emplace_back(i, j, M(i, j));
    ComplexSparse S(M.rows(), M.cols());
    S.setFromTriplets(trip.begin(), trip.end());
    return S;
}

ComplexSparse kron(const ComplexSparse& A, const ComplexSparse& B) {
    ComplexSparse K(A.rows() * B.rows(), A.cols() * B.cols());
    std::vector<Eigen::Triplet<Cplx>> trip;
    trip.reserve(std::size_t(A.nonZeros()) * B.nonZeros());
    for (int ka = 0; ka < A.outerSize(); ++ka)
        for (ComplexSparse::InnerIterator ia(A, ka); ia; ++ia)
            for (int kb = 0; kb < B.outerSize(); ++kb)
                for (ComplexSparse::InnerIterator ib(B, kb); ib; ++ib)
                    trip.emplace_back(ia.row() * B.rows() + ib.row(),
                                      ia.col() * B.cols() + ib.col(),
                                      ia.value() * ib.value());
    K.setFromTriplets(trip.begin(), trip.end());
    return K;
}

ComplexSparse identity(int n) {
    ComplexSparse I(n, n);
    I.setIdentity();
    return I;
}

// Operator toolbox on the level (x) fock product space, level-major.
struct Ops {
    int N;
    ComplexSparse eye;

    explicit Ops(int n_max) : N(n_max), eye(identity(3 * (n_max + 1))) {}

    // |level_a><level_b| (x) 1, levels 1..3
    ComplexSparse R(int a, int b) const {
        ComplexDense M = ComplexDense::Zero(3, 3);
        M(a - 1, b - 1) = 1.0;
        return kron(sparse_from_dense(M), identity(N + 1));
    }
    ComplexSparse lower() const { // 1 (x) b
        ComplexDense a = ComplexDense::Zero(N + 1, N + 1);
        for (int n = 1; n <= N; ++n) a(n - 1, n) = std::sqrt(double(n));
        return kron(identity(3), sparse_from_dense(a));
    }
    ComplexSparse raise() const { // 1 (x) b^dagger
        ComplexDense a = ComplexDense::Zero(N + 1, N + 1);
        for (int n = 1; n <= N; ++n) a(n, n - 1) = std::sqrt(double(n));
        return kron(identity(3), sparse_from_dense(a));
    }
};

// vec(A rho B) = (B^T (x) A) vec(rho), column-major vec
ComplexSparse sandwich(const ComplexSparse& A, const ComplexSparse& B) {
    return kron(ComplexSparse(B.transpose()), A);
}

// -c [A, B rho] + H.c. = -c (AB rho - B rho A + rho B'A' - A' rho B')
ComplexSparse damping_term(double c, const ComplexSparse& A,
                           const ComplexSparse& B, const ComplexSparse& eye) {
    ComplexSparse Ad = ComplexSparse(A.adjoint());
    ComplexSparse Bd = ComplexSparse(B.adjoint());
    ComplexSparse out = sandwich(ComplexSparse(A * B), eye);
    out -= sandwich(B, A);
    out += sandwich(eye, ComplexSparse(Bd * Ad));
    out -= sandwich(Ad, Bd);
    return ComplexSparse((-c) * out);
}

ComplexSparse hamiltonian_term(const ComplexSparse& H,
                               const ComplexSparse& eye) {
    return ComplexSparse(Cplx(0, -1) *
                         (sandwich(H, eye) - sandwich(eye, H)));
}

} // namespace

SuperOperator build_secular_liouvillian(const PhysicalParams& p,
                                        const DressedParams& d,
                                        const BaseRates& b, Case which,
                                        int n_max) {
    if (n_max < 2)
        throw std::invalid_argument(
            "build_secular_liouvillian: n_max must be >= 2");
    Ops op(n_max);
    const double s = d.sin_theta, c = d.cos_theta;
    const double q = 1.0 / (2.0 * std::sqrt(2.0));
    const double s2t = 2.0 * s * c; // sin(2 theta)

    // static residues of the two bare decay operators in the dressed basis
    ComplexSparse Rplus = ComplexSparse(
        s2t * q * op.R(1, 1) - c * q * (1 + s) * op.R(2, 2) +
        c * q * (1 - s) * op.R(3, 3));
    ComplexSparse Rminus = ComplexSparse(
        s2t * q * op.R(1, 1) + c * q * (1 - s) * op.R(2, 2) -
        c * q * (1 + s) * op.R(3, 3));
    ComplexSparse M = ComplexSparse(0.5 * (op.R(2, 2) + op.R(3, 3)) -
                                    op.R(1, 1));
    ComplexSparse B = op.lower(), Bd = op.raise();

    struct Term {
        double c;
        ComplexSparse A, B;
    };
    const std::vector<Term> terms = {
        {p.gamma2, Rplus, Rplus},
        {p.gamma3, Rminus, Rminus},
        {s * s / 4 * b.gamma_plus, op.R(1, 2), op.R(2, 1)},
        {s * s / 4 * b.gamma_minus, op.R(1, 3), op.R(3, 1)},
        {b.gamma00, op.R(2, 1), op.R(1, 2)},
        {b.gamma00, op.R(3, 1), op.R(1, 3)},
        {b.Gamma_plus, op.R(3, 2), op.R(2, 3)},
        {b.Gamma_minus, op.R(2, 3), op.R(3, 2)},
        {b.gamma0_plus / 2, op.R(1, 2), op.R(1, 3)},
        {b.gamma0_plus / 2, op.R(3, 1), op.R(2, 1)},
        {b.gamma0_minus / 2, op.R(2, 1), op.R(3, 1)},
        {b.gamma0_minus / 2, op.R(1, 3), op.R(1, 2)},
        {p.gamma * c * c * c * c / 4, M, M},
        {p.gamma / 8 * c * c * (1 - s) * (1 - s),
         ComplexSparse(op.R(1, 2) + op.R(3, 1)),
         ComplexSparse(op.R(2, 1) + op.R(1, 3))},
        {p.gamma / 8 * c * c * (1 + s) * (1 + s),
         ComplexSparse(op.R(2, 1) + op.R(1, 3)),
         ComplexSparse(op.R(1, 2) + op.R(3, 1))},
        {p.kappa * (1 + p.nbar), Bd, B},
        {p.kappa * p.nbar, B, Bd},
    };

    SuperOperator out;
    out.n_max = n_max;
    const int D = out.hdim();
    out.L.resize(D * D, D * D);
    for (const auto& t : terms)
        out.L += damping_term(t.c, t.A, t.B, op.eye);

    ComplexSparse H;
    if (which == Case::I) {
        H = ComplexSparse(d.delta_bar * (Bd * B) +
                          d.g_bar * (op.R(3, 2) * Bd + op.R(2, 3) * B));
    } else {
        H = ComplexSparse(
            d.delta_tilde * (Bd * B) -
            d.g_tilde * ((op.R(1, 2) + op.R(3, 1)) * Bd +
                         (op.R(2, 1) + op.R(1, 3)) * B));
    }
    out.L += hamiltonian_term(H, op.eye);
    out.L.makeCompressed();
    return out;
}

SuperOperator build_bare_liouvillian(const PhysicalParams& p, int n_max) {
    if (n_max < 2)
        throw std::invalid_argument(
            "build_bare_liouvillian: n_max must be >= 2");
    Ops op(n_max); // level index now means bare |1>,|2>,|3>
    ComplexSparse B = op.lower(), Bd = op.raise();
    ComplexSparse H = ComplexSparse(
        p.omega * (Bd * B) +
        p.omega23 / 2 * (op.R(2, 2) - op.R(3, 3)) +
        p.g * (op.R(1, 1) * (B + Bd)) -
        p.Omega0 * (op.R(1, 2) + op.R(2, 1) + op.R(1, 3) + op.R(3, 1)));
    const std::vector<std::tuple<double, ComplexSparse, ComplexSparse>> terms =
        {{p.gamma2, op.R(1, 2), op.R(2, 1)},
         {p.gamma3, op.R(1, 3), op.R(3, 1)},
         {p.gamma, op.R(2, 3), op.R(3, 2)},
         {p.kappa * (1 + p.nbar), Bd, B},
         {p.kappa * p.nbar, B, Bd}};
    SuperOperator out;
    out.n_max = n_max;
    const int D = out.hdim();
    out.L.resize(D * D, D * D);
    for (const auto& [c, A, Bm] : terms)
        out.L += damping_term(c, A, Bm, op.eye);
    out.L += hamiltonian_term(H, op.eye);
    out.L.makeCompressed();
    return out;
}

namespace {

Eigen::VectorXcd solve_with_trace_row(const SuperOperator& s, int diag_slot) {
    const int D = s.hdim();
    const int row = diag_slot + D * diag_slot; // vec index of (slot, slot)
    std::vector<Eigen::Triplet<Cplx>> trip;
    for (int k = 0; k < s.L.outerSize(); ++k)
        for (ComplexSparse::InnerIterator it(s.L, k); it; ++it)
            if (it.row() != row)
                trip.emplace_back(it.row(), it.col(), it.value());
    for (int h = 0; h < D; ++h) trip.emplace_back(row, h + D * h, Cplx(1, 0));
    ComplexSparse A(D * D, D * D);
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
    Eigen::SparseLU<ComplexSparse> lu(A);
    if (lu.info() != Eigen::Success)
        throw DegenerateNullSpace("oracle_steady: factorization failed");
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(D * D);
    rhs[row] = 1.0;
    Eigen::VectorXcd v = lu.solve(rhs);
    if (lu.info() != Eigen::Success || !v.allFinite())
        throw DegenerateNullSpace("oracle_steady: solve failed");
    return v;
}

} // namespace

DenseDensityMatrix oracle_steady(const SuperOperator& s,
                                 bool check_uniqueness) {
    const int D = s.hdim();
    Eigen::VectorXcd v = solve_with_trace_row(s, 0);
    if (check_uniqueness) {
        Eigen::VectorXcd w = solve_with_trace_row(s, D - 1);
        const double dev = (v - w).cwiseAbs().maxCoeff();
        if (dev > 1e-7) {
            std::ostringstream os;
            os << "oracle_steady: null space looks degenerate (solutions "
                  "differ by "
               << dev << ")";
            throw DegenerateNullSpace(os.str());
        }
    }
    DenseDensityMatrix out;
    out.n_max = s.n_max;
    out.rho = Eigen::Map<const ComplexDense>(v.data(), D, D);
    out.rho /= out.rho.trace();
    return out;
}

DenseDensityMatrix apply_superop(const SuperOperator& s,
                                 const DenseDensityMatrix& rho) {
    const int D = s.hdim();
    Eigen::VectorXcd v =
        Eigen::Map<const Eigen::VectorXcd>(rho.rho.data(), D * D);
    Eigen::VectorXcd dv = s.L * v;
    DenseDensityMatrix out;
    out.n_max = s.n_max;
    out.rho = Eigen::Map<const ComplexDense>(dv.data(), D, D);
    return out;
}

BlockVector project_to_blocks(const DenseDensityMatrix& rho, Case which) {
    const int N = rho.n_max;
    BlockVector out(which, N);
    double residue = 0.0;
    // take(i, n, value, imag_type): store the real content, track residue
    auto take = [&](int i, int n, Cplx v, bool imag_type) {
        if (imag_type) {
            residue = std::max(residue, std::abs(v.real()));
            out.at(i, n) = v.imag();
        } else {
            residue = std::max(residue, std::abs(v.imag()));
            out.at(i, n) = v.real();
        }
    };
    auto rb = [&](int a, int b, int n, int m) { return rho.block(a - 1, b - 1, n, m); };
    for (int n = 0; n <= N; ++n) {
        const Cplx d11 = rb(1, 1, n, n), d22 = rb(2, 2, n, n),
                   d33 = rb(3, 3, n, n);
        take(0, n, d11 + d22 + d33, false);
        take(1, n, d22 + d33, false);
        take(2, n, d22 - d33, false);
    }
    auto sq = [](int k) { return std::sqrt(double(k)); };
    if (which == Case::I) {
        for (int n = 0; n <= N; ++n) {
            // bd rho23 -+ rho32 b
            Cplx lo = n >= 1 ? sq(n) * rb(2, 3, n - 1, n) : Cplx(0);
            Cplx lo2 = n >= 1 ? sq(n) * rb(3, 2, n, n - 1) : Cplx(0);
            take(3, n, lo - lo2, true);
            take(4, n, lo + lo2, false);
            // rho23 bd -+ b rho32
            Cplx up = n < N ? sq(n + 1) * rb(2, 3, n, n + 1) : Cplx(0);
            Cplx up2 = n < N ? sq(n + 1) * rb(3, 2, n + 1, n) : Cplx(0);
            take(5, n, up - up2, true);
            take(6, n, up + up2, false);
        }
    } else {
        for (int n = 0; n <= N; ++n) {
            Cplx a = n >= 1 ? sq(n) * rb(2, 1, n - 1, n) : Cplx(0);
            Cplx b = n >= 1 ? sq(n) * rb(1, 2, n, n - 1) : Cplx(0);
            take(3, n, a - b, true);
            take(4, n, a + b, false);
            Cplx c = n < N ? sq(n + 1) * rb(1, 3, n, n + 1) : Cplx(0);
            Cplx d = n < N ? sq(n + 1) * rb(3, 1, n + 1, n) : Cplx(0);
            take(5, n, c - d, true);
            take(6, n, c + d, false);
            Cplx e = n >= 1 ? sq(n) * rb(1, 3, n - 1, n) : Cplx(0);
            Cplx f = n >= 1 ? sq(n) * rb(3, 1, n, n - 1) : Cplx(0);
            take(7, n, e - f, true);
            take(8, n, e + f, false);
            Cplx g = n < N ? sq(n + 1) * rb(2, 1, n, n + 1) : Cplx(0);
            Cplx h = n < N ? sq(n + 1) * rb(1, 2, n + 1, n) : Cplx(0);
            take(9, n, g - h, true);
            take(10, n, g + h, false);
            // bd rho23 bd +- b rho32 b
            Cplx x = (n >= 1 && n < N)
                         ? sq(n) * sq(n + 1) * rb(2, 3, n - 1, n + 1)
                         : Cplx(0);
            Cplx y = (n >= 1 && n < N)
                         ? sq(n) * sq(n + 1) * rb(3, 2, n + 1, n - 1)
                         : Cplx(0);
            take(11, n, x + y, false);
            take(12, n, x - y, true);
            // bd^2 rho23 +- rho32 b^2
            Cplx u = n >= 2 ? sq(n) * sq(n - 1) * rb(2, 3, n - 2, n) : Cplx(0);
            Cplx w = n >= 2 ? sq(n) * sq(n - 1) * rb(3, 2, n, n - 2) : Cplx(0);
            take(13, n, u + w, false);
            take(14, n, u - w, true);
            // rho23 bd^2 +- b^2 rho32
            Cplx r = n <= N - 2 ? sq(n + 1) * sq(n + 2) * rb(2, 3, n, n + 2)
                                : Cplx(0);
            Cplx t = n <= N - 2 ? sq(n + 1) * sq(n + 2) * rb(3, 2, n + 2, n)
                                : Cplx(0);
            take(15, n, r + t, false);
            take(16, n, r - t, true);
        }
    }
    if (residue > 1e-8) {
        std::ostringstream os;
        os << "project_to_blocks: imaginary residue " << residue;
        throw ImaginaryResidue(os.str());
    }
    return out;
}

void density_observables(const DenseDensityMatrix& rho, double& mean_n,
                         double& g2) {
    const int N = rho.n_max;
    double mean = 0, fac = 0;
    for (int n = 0; n <= N; ++n) {
        double pn = 0;
        for (int e = 0; e < 3; ++e) pn += rho.block(e, e, n, n).real();
        mean += n * pn;
        fac += double(n) * (n - 1) * pn;
    }
    mean_n = mean;
    g2 = mean > 1e-300 ? fac / (mean * mean)
                       : std::numeric_limits<double>::quiet_NaN();
}

} // namespace lambdaosc
