#pragma once

#include <matchbox/errors.hpp>
#include <matchbox/matrix.hpp>

#include <vector>

namespace matchbox {

// Eventually periodic chain of n x n covering matrices, each with |det| >= 2
// so every stage is a proper covering of the n-torus.
class MatrixChain {
public:
    MatrixChain(std::size_t n, std::vector<IntMatrix> prefix, std::vector<IntMatrix> period);

    std::size_t n() const noexcept { return n_; }
    const std::vector<IntMatrix>& prefix() const noexcept { return prefix_; }
    const std::vector<IntMatrix>& period() const noexcept { return period_; }

    // M_j, 1-based
    const IntMatrix& entry(std::size_t j) const;

    // M_1 * M_2 * ... * M_k; identity for k = 0
    IntMatrix cumulative(std::size_t k) const;

    MatrixChain without_prefix() const { return MatrixChain(n_, {}, period_); }

private:
    std::size_t n_;
    std::vector<IntMatrix> prefix_;
    std::vector<IntMatrix> period_;
};

// Invariant factors > 1 of Z^n / (M_1...M_k Z^n), one tuple per k = 1..depth.
// Ascending within each tuple, by the divisibility chain of the Smith form.
std::vector<std::vector<Int>> quotient_invariants(const MatrixChain& c, int depth);

// Shape of Z^n modulo a sublattice: free rank n - r, torsion generated by
// the invariant factors > 1.  Always 0 <= torsion_rank <= rank <= n.
struct LatticeInvariants {
    std::size_t rank;                    // r, rank of the sublattice
    std::vector<Int> invariant_factors;  // ascending divisibility chain
    std::size_t torsion_rank;            // d, number of factors > 1
};

// columns of `generators` span the sublattice; the matrix may be non-square
LatticeInvariants lattice_invariants(const IntMatrix& generators);

// Hermite basis of the depth-k sublattice L_k = M_1...M_k Z^n.  The family
// shrinks as k grows and its member at any fixed depth only over-approximates
// the intersection over all k, the kernel lattice of the limiting action.
IntMatrix kernel_lattice_at_depth(const MatrixChain& c, int depth);

// Every invariant factor of L_{depth + period length} strictly exceeds the
// matching factor of L_depth: evidence that the limiting kernel is trivial.
bool strict_shrinkage(const MatrixChain& c, int depth);

struct ToralVerdict {
    enum class Kind { Refuted, ConsistentAtDepth };
    Kind kind;
    int depth;
    std::string witness;  // for refutations, the factor tuple with no partner
};

// Depth-bounded screen matching interleaving_consistent, lifted to rank n:
// after deleting prefixes, each quotient Z^n / L^a_j with j <= depth must be
// a quotient of some Z^n / L^b_i with i <= horizon_factor * depth, tested by
// factor-wise divisibility aligned from the largest factor, and symmetrically.
// Throws DimensionMismatchError when the chains have different n.
ToralVerdict toral_consistency(const MatrixChain& a, const MatrixChain& b, int depth,
                               int horizon_factor = 2);

}  // namespace matchbox
