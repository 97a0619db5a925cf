#pragma once

#include <matchbox/errors.hpp>
#include <matchbox/odometer.hpp>

namespace matchbox {

// The stabilizer {t : W + t = W} inside Z is the subgroup generated by the
// smallest positive period of the window; its index in Z equals that
// generator.  When the window tiles the fiber, index * |W| = M_depth.
struct IsotropyDescriptor {
    Int generator;
    Int index;
};

// The translation action of Z on a truncated fiber, restricted to a clopen
// window.
class RestrictedAction {
public:
    explicit RestrictedAction(ClopenSet window);

    const ClopenSet& window() const noexcept { return window_; }
    const TowerRef& tower() const noexcept { return window_.tower(); }

    // Whether the distinct translates of the window tile the fiber, i.e. are
    // pairwise disjoint and cover it.  Decided by the coset test: a subset of
    // a cyclic group tiles it exactly when the subset is a coset of a
    // subgroup.
    bool is_collapsible() const;

    // The tiling W, W+1, ..., W+d-1 in shift order.  Throws
    // NotCollapsibleError when the translates overlap.
    std::vector<ClopenSet> translates_partition() const;

    IsotropyDescriptor isotropy() const;

    // A collapsible clopen subset of the window: the full-depth cylinder
    // through its smallest residue.  Cylinders are cosets, hence always
    // collapsible.
    ClopenSet collapsible_refinement() const;

private:
    ClopenSet window_;
};

// Depth-bounded compatibility screen between the periodic tails of two
// bonding sequences.  After deleting the prefixes, every cumulative modulus
// M^a_j with j <= depth must divide some M^b_i with i <= horizon_factor *
// depth, and symmetrically.  A false answer refutes return equivalence of
// the truncated data; a true answer is consistency at this depth only.  The
// default horizon matches geometric modulus growth and can be widened for
// lopsided exponent patterns.
bool interleaving_consistent(const BondingSequence& a, const BondingSequence& b,
                             int depth, int horizon_factor = 2);

}  // namespace matchbox
