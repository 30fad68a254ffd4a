#include "lambdaosc/solver.hpp"

#include <Eigen/SparseLU>
#include <Eigen/SparseQR>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace lambdaosc {

namespace {

Eigen::SparseMatrix<double> with_normalization_row(const RateMatrix& m,
                                                   int row) {
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(m.L.nonZeros() + m.ladder());
    for (int k = 0; k < m.L.outerSize(); ++k)
        for (Eigen::SparseMatrix<double>::InnerIterator it(m.L, k); it; ++it)
            if (it.row() != row)
                trip.emplace_back(it.row(), it.col(), it.value());
    for (int n = 0; n < m.ladder(); ++n) trip.emplace_back(row, n, 1.0);
    Eigen::SparseMatrix<double> A(m.dim(), m.dim());
    A.setFromTriplets(trip.begin(), trip.end());
    A.makeCompressed();
    return A;
}

// residual over non-replaced rows plus the leak on the replaced one
void split_residual(const RateMatrix& m, const Eigen::VectorXd& x, int row,
                    double& residual, double& leak) {
    Eigen::VectorXd r = m.L * x;
    leak = std::abs(r[row]);
    r[row] = 0.0;
    residual = r.cwiseAbs().maxCoeff();
}

void check_physical(const BlockVector& s) {
    double worst = 0.0;
    for (int n = 0; n <= s.n_max; ++n) worst = std::min(worst, s.at(0, n));
    if (worst < -1e-8) {
        std::ostringstream os;
        os << "steady_state: P^(0) entry " << worst
           << " below -1e-8; increase n_max";
        throw NonPhysical(os.str(), worst);
    }
}

} // namespace

SteadyStateResult steady_state(const RateMatrix& m, int replace_fock) {
    const int nf = replace_fock < 0 ? m.n_max : replace_fock;
    if (nf < 0 || nf > m.n_max)
        throw std::invalid_argument("steady_state: replace_fock out of range");
    const int row = m.index(0, nf);
    Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m.dim());
    rhs[row] = 1.0;

    SteadyStateResult out;
    out.state = BlockVector(m.which, m.n_max);

    Eigen::SparseMatrix<double> A = with_normalization_row(m, row);
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
    lu.analyzePattern(A);
    lu.factorize(A);
    bool ok = (lu.info() == Eigen::Success);
    Eigen::VectorXd x;
    if (ok) {
        x = lu.solve(rhs);
        ok = (lu.info() == Eigen::Success) && x.allFinite();
    }
    const double accept = 1e-9 * std::max(m.max_abs_entry, 1.0);
    if (ok) {
        split_residual(m, x, row, out.residual, out.trace_leak);
        ok = out.residual <= accept;
        out.method = SolveMethod::ReplaceRow;
    }
    if (!ok) {
        // stacked [L; normalization] least squares
        std::vector<Eigen::Triplet<double>> trip;
        for (int k = 0; k < m.L.outerSize(); ++k)
            for (Eigen::SparseMatrix<double>::InnerIterator it(m.L, k); it;
                 ++it)
                trip.emplace_back(it.row(), it.col(), it.value());
        for (int n = 0; n < m.ladder(); ++n)
            trip.emplace_back(m.dim(), n, 1.0);
        Eigen::SparseMatrix<double> S(m.dim() + 1, m.dim());
        S.setFromTriplets(trip.begin(), trip.end());
        S.makeCompressed();
        Eigen::VectorXd b = Eigen::VectorXd::Zero(m.dim() + 1);
        b[m.dim()] = 1.0;
        Eigen::SparseQR<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>>
            qr(S);
        if (qr.info() != Eigen::Success)
            throw SingularSystem("steady_state: QR factorization failed");
        x = qr.solve(b);
        if (qr.info() != Eigen::Success || !x.allFinite())
            throw SingularSystem("steady_state: least-squares solve failed");
        split_residual(m, x, row, out.residual, out.trace_leak);
        if (out.residual > accept) {
            std::ostringstream os;
            os << "steady_state: residual " << out.residual
               << " exceeds bound " << accept << " (condition hint "
               << out.condition_hint << ")";
            throw SingularSystem(os.str());
        }
        out.method = SolveMethod::LeastSquares;
    }

    // crude inverse-norm probe: ||A^-1 e||_inf * ||A||_inf on one solve
    if (out.method == SolveMethod::ReplaceRow) {
        Eigen::VectorXd probe = lu.solve(Eigen::VectorXd::Ones(m.dim()));
        if (lu.info() == Eigen::Success && probe.allFinite())
            out.condition_hint =
                probe.cwiseAbs().maxCoeff() * std::max(m.max_abs_entry, 1.0);
    }

    out.state.data = x;
    out.state.normalize();
    check_physical(out.state);
    return out;
}

namespace {

class TrapStepper {
public:
    explicit TrapStepper(const RateMatrix& m) : m_(m) {}

    // solve (I - h/2 L) y = (I + h/2 L) x
    Eigen::VectorXd step(double h, const Eigen::VectorXd& x) {
        if (h != h_cached_) {
            Eigen::SparseMatrix<double> A = ident() - (h / 2) * m_.L;
            A.makeCompressed();
            lu_.compute(A);
            if (lu_.info() != Eigen::Success)
                throw StepFailure("evolve: implicit factorization failed");
            h_cached_ = h;
        }
        Eigen::VectorXd rhs = x + (h / 2) * (m_.L * x);
        Eigen::VectorXd y = lu_.solve(rhs);
        if (lu_.info() != Eigen::Success || !y.allFinite())
            throw StepFailure("evolve: implicit solve failed");
        return y;
    }

private:
    Eigen::SparseMatrix<double> ident() const {
        Eigen::SparseMatrix<double> I(m_.dim(), m_.dim());
        I.setIdentity();
        return I;
    }
    const RateMatrix& m_;
    double h_cached_ = -1.0;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu_;
};

} // namespace

BlockVector evolve(const RateMatrix& m, const BlockVector& p0, double t_end,
                   const StepControl& ctl) {
    if (p0.which != m.which || p0.n_max != m.n_max)
        throw std::invalid_argument("evolve: state/matrix layout mismatch");
    if (t_end < 0) throw std::invalid_argument("evolve: t_end must be >= 0");
    BlockVector out = p0;
    if (t_end == 0.0) return out;

    if (ctl.explicit_rk4) {
        if (ctl.h0 <= 0)
            throw std::invalid_argument("evolve: explicit_rk4 needs h0 > 0");
        Eigen::VectorXd x = out.data;
        double t = 0;
        long steps = 0;
        while (t < t_end) {
            const double h = std::min(ctl.h0, t_end - t);
            Eigen::VectorXd k1 = m.L * x;
            Eigen::VectorXd k2 = m.L * (x + (h / 2) * k1);
            Eigen::VectorXd k3 = m.L * (x + (h / 2) * k2);
            Eigen::VectorXd k4 = m.L * (x + h * k3);
            x += (h / 6) * (k1 + 2 * k2 + 2 * k3 + k4);
            t += h;
            if (++steps > ctl.max_steps)
                throw StepFailure("evolve: explicit step budget exhausted");
        }
        out.data = x;
        return out;
    }

    TrapStepper full(m), half(m);
    const double scale = std::max(m.max_abs_entry, 1e-12);
    double h = ctl.h0 > 0 ? ctl.h0 : std::min(t_end, 0.1 / scale);
    Eigen::VectorXd x = out.data;
    double t = 0;
    long steps = 0;
    int rejects = 0;
    while (t < t_end) {
        h = std::min(h, t_end - t);
        Eigen::VectorXd one = full.step(h, x);
        Eigen::VectorXd two = half.step(h / 2, half.step(h / 2, x));
        const double err = (two - one).cwiseAbs().maxCoeff() / 3.0;
        const double tol = ctl.atol + ctl.rtol * two.cwiseAbs().maxCoeff();
        if (err <= tol) {
            x = two;
            t += h;
            rejects = 0;
        } else if (++rejects > ctl.max_rejects) {
            throw StepFailure("evolve: too many consecutive step rejections");
        }
        const double grow =
            err > 0 ? 0.9 * std::cbrt(tol / err) : 5.0;
        h *= std::clamp(grow, 0.2, 5.0);
        if (++steps > ctl.max_steps)
            throw StepFailure("evolve: step budget exhausted");
    }
    out.data = x;
    return out;
}

} // namespace lambdaosc
