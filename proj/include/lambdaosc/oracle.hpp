#pragma once

#include <complex>
#include <stdexcept>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "lambdaosc/block_vector.hpp"
#include "lambdaosc/params.hpp"
#include "lambdaosc/rates.hpp"

namespace lambdaosc {

struct DegenerateNullSpace : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A projected component that should be purely real (after absorbing the i
// factors) carried a significant imaginary part: transcription defect.
struct ImaginaryResidue : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Cplx = std::complex<double>;
using ComplexSparse = Eigen::SparseMatrix<Cplx>;
using ComplexDense = Eigen::MatrixXcd;

// Full density matrix over {level} x {fock}, level-major:
// index(level, n) = level*(n_max+1) + n, level in 0..2.
struct DenseDensityMatrix {
    int n_max = 0;
    ComplexDense rho;

    int ladder() const { return n_max + 1; }
    int dim() const { return 3 * ladder(); }
    Cplx block(int level_row, int level_col, int n, int m) const {
        return rho(level_row * ladder() + n, level_col * ladder() + m);
    }
};

// Liouvillian acting on column-major vectorized density matrices.
struct SuperOperator {
    int n_max = 0;
    ComplexSparse L; // (3(n_max+1))^2 square

    int hdim() const { return 3 * (n_max + 1); }
};

// Operator-level master equation in the dressed basis, secular form, with
// the case-resolved effective Hamiltonian. Every damping term enters
// literally as -c [A, B rho] + H.c.
SuperOperator build_secular_liouvillian(const PhysicalParams& p,
                                        const DressedParams& d,
                                        const BaseRates& rates, Case which,
                                        int n_max);

// Full bare-basis master equation (rotating frame), including the static
// coupling the secular treatment drops.
SuperOperator build_bare_liouvillian(const PhysicalParams& p, int n_max);

// Null vector of the vectorized generator, normalized to unit trace.
// check_uniqueness solves twice with different trace-row placements and
// rejects disagreement as a degenerate null space.
DenseDensityMatrix oracle_steady(const SuperOperator& s,
                                 bool check_uniqueness = false);

// Evaluate the 7/17 operator combinations on Fock diagonals; components of
// anti-Hermitian combinations are returned as their imaginary parts.
// Throws ImaginaryResidue if any residue exceeds 1e-8.
BlockVector project_to_blocks(const DenseDensityMatrix& rho, Case which);

// Oscillator observables straight from a density matrix (any basis).
void density_observables(const DenseDensityMatrix& rho, double& mean_n,
                         double& g2);

// d(vec rho)/dt = L vec(rho) applied to a density matrix.
DenseDensityMatrix apply_superop(const SuperOperator& s,
                                 const DenseDensityMatrix& rho);

} // namespace lambdaosc
