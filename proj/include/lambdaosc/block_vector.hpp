#pragma once

#include <Eigen/Dense>

namespace lambdaosc {

// Resonance regime: I couples the oscillator at twice the dressed
// splitting, II at the splitting itself.
enum class Case { I = 1, II = 2 };

constexpr int block_count(Case c) { return c == Case::I ? 7 : 17; }

// Stacked projected variables s^(i)_n on a truncated Fock ladder,
// block-major: index(i, n) = i*(n_max+1) + n. Blocks corresponding to
// anti-Hermitian operator combinations store the imaginary part (the i
// factor absorbed), so all entries are real.
struct BlockVector {
    Case which = Case::I;
    int n_max = 0;
    Eigen::VectorXd data;

    BlockVector() = default;
    BlockVector(Case c, int nmax)
        : which(c), n_max(nmax),
          data(Eigen::VectorXd::Zero(block_count(c) * (nmax + 1))) {}

    int ladder() const { return n_max + 1; }
    int size() const { return static_cast<int>(data.size()); }
    int index(int block, int n) const { return block * ladder() + n; }

    double& at(int block, int n) { return data[index(block, n)]; }
    double at(int block, int n) const { return data[index(block, n)]; }

    // Sum over the Fock ladder of one block.
    double block_sum(int block) const {
        return data.segment(block * ladder(), ladder()).sum();
    }

    // Normalize so the probability block sums to exactly 1.
    void normalize() { data /= block_sum(0); }
};

} // namespace lambdaosc
