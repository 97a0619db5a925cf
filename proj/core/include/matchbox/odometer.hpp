#pragma once

#include <matchbox/supernatural.hpp>

#include <memory>
#include <vector>

namespace matchbox {

// The first k stages of the inverse limit over a bonding sequence:
//   Z/M_0 <- Z/M_1 <- ... <- Z/M_k,  M_j = m_1 * ... * m_j,  M_0 = 1.
// Immutable after construction; shared by the points and clopen sets living
// on it.
class TruncatedTower {
public:
    TruncatedTower(BondingSequence seq, int depth);

    int depth() const noexcept { return depth_; }
    const BondingSequence& sequence() const noexcept { return seq_; }

    // m_j for 1 <= j <= depth
    std::int64_t entry(int j) const;

    // M_level for 0 <= level <= depth
    const Int& modulus(int level) const;

    // M_depth, the modulus of the deepest fiber
    const Int& fiber_modulus() const { return moduli_.back(); }

    friend bool operator==(const TruncatedTower&, const TruncatedTower&) = default;

private:
    BondingSequence seq_;
    int depth_;
    std::vector<Int> moduli_;
};

using TowerRef = std::shared_ptr<const TruncatedTower>;

TowerRef make_tower(BondingSequence seq, int depth);

// A point of the depth-k fiber, i.e. a residue in [0, M_k).  Its reductions
// x_j = residue mod M_j are coherent across levels by construction.
class TowerPoint {
public:
    // residue must already lie in [0, M_k)
    TowerPoint(TowerRef tower, Int residue);

    // reduce an arbitrary integer, the dense embedding of Z into the fiber
    static TowerPoint from_integer(TowerRef tower, const Int& z);

    const TowerRef& tower() const noexcept { return tower_; }
    const Int& residue() const noexcept { return residue_; }

    // x_j for 0 <= j <= depth
    Int residue_at(int level) const;

    friend bool operator==(const TowerPoint& a, const TowerPoint& b) {
        return a.residue_ == b.residue_ && *a.tower_ == *b.tower_;
    }

private:
    TowerRef tower_;
    Int residue_;
};

// the odometer step: +1 mod M_k
TowerPoint add_one(const TowerPoint& p);

// t-fold odometer step, t of any sign
TowerPoint advance(const TowerPoint& p, const Int& t);

// The full cycle through p: p, p+1, ..., p + M_k - 1.  Every residue appears
// exactly once; intended for shallow towers.
std::vector<TowerPoint> orbit(const TowerPoint& p);

// reduction onto the depth-`level` truncation of the same sequence
TowerPoint project(const TowerPoint& p, int level);

// A nonempty union of level-j cylinders: the set of fiber points whose
// reduction mod M_j lies in `residues`.  Always stores residues sorted and
// deduplicated.  The canonical flag records that no smaller level represents
// the same set, i.e. the set is not a full preimage from further up.
class ClopenSet {
public:
    ClopenSet(TowerRef tower, int level, std::vector<Int> residues);

    static ClopenSet full(TowerRef tower);
    static ClopenSet cylinder(TowerRef tower, int level, Int residue);

    const TowerRef& tower() const noexcept { return tower_; }
    int level() const noexcept { return level_; }
    const std::vector<Int>& residues() const noexcept { return residues_; }
    bool is_canonical() const noexcept { return canonical_; }

    // membership of the class of an arbitrary integer
    bool contains(const Int& z) const;

    // number of residues the set hits at a level >= level()
    Int count_at(int level) const;

    // the same set written at the smallest possible level
    ClopenSet canonicalize() const;

    // the set shifted by t mod M_level, re-canonicalized
    ClopenSet translate(const Int& t) const;

    // the same set written at a deeper level
    ClopenSet refine_to(int level) const;

    // Ultrametric diameter 2^(-j*), where j* is the largest level at which
    // all members of the set agree.  A singleton residue at the full depth
    // has diameter 2^(-depth) by convention.
    Rational diameter() const;

    // same members, regardless of representation level
    friend bool operator==(const ClopenSet& a, const ClopenSet& b);

private:
    TowerRef tower_;
    int level_;
    std::vector<Int> residues_;
    bool canonical_ = false;
};

}  // namespace matchbox
