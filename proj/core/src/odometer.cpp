#include <matchbox/odometer.hpp>

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace matchbox {

TruncatedTower::TruncatedTower(BondingSequence seq, int depth)
    : seq_(std::move(seq)), depth_(depth) {
    if (depth < 1) {
        throw std::invalid_argument("TruncatedTower: depth must be >= 1");
    }
    moduli_.reserve(static_cast<std::size_t>(depth) + 1);
    moduli_.emplace_back(1);
    for (int j = 1; j <= depth; ++j) {
        moduli_.push_back(moduli_.back() * seq_.entry(static_cast<std::size_t>(j)));
    }
}

std::int64_t TruncatedTower::entry(int j) const {
    if (j < 1 || j > depth_) {
        throw std::out_of_range("TruncatedTower::entry: index out of range");
    }
    return seq_.entry(static_cast<std::size_t>(j));
}

const Int& TruncatedTower::modulus(int level) const {
    if (level < 0 || level > depth_) {
        throw std::out_of_range("TruncatedTower::modulus: level out of range");
    }
    return moduli_[static_cast<std::size_t>(level)];
}

TowerRef make_tower(BondingSequence seq, int depth) {
    return std::make_shared<const TruncatedTower>(std::move(seq), depth);
}

TowerPoint::TowerPoint(TowerRef tower, Int residue)
    : tower_(std::move(tower)), residue_(std::move(residue)) {
    if (!tower_) {
        throw std::invalid_argument("TowerPoint: null tower");
    }
    if (residue_ < 0 || residue_ >= tower_->fiber_modulus()) {
        throw std::invalid_argument("TowerPoint: residue out of range [0, M_k)");
    }
}

TowerPoint TowerPoint::from_integer(TowerRef tower, const Int& z) {
    if (!tower) {
        throw std::invalid_argument("TowerPoint: null tower");
    }
    Int r = mod_floor(z, tower->fiber_modulus());
    return TowerPoint(std::move(tower), std::move(r));
}

Int TowerPoint::residue_at(int level) const {
    return mod_floor(residue_, tower_->modulus(level));
}

TowerPoint add_one(const TowerPoint& p) {
    Int r = p.residue() + 1;
    if (r == p.tower()->fiber_modulus()) {
        r = 0;
    }
    return TowerPoint(p.tower(), std::move(r));
}

TowerPoint advance(const TowerPoint& p, const Int& t) {
    return TowerPoint(p.tower(), mod_floor(p.residue() + t, p.tower()->fiber_modulus()));
}

std::vector<TowerPoint> orbit(const TowerPoint& p) {
    const Int& m = p.tower()->fiber_modulus();
    std::vector<TowerPoint> cycle;
    cycle.reserve(static_cast<std::size_t>(m));
    cycle.push_back(p);
    for (Int i = 1; i < m; ++i) {
        cycle.push_back(add_one(cycle.back()));
    }
    return cycle;
}

TowerPoint project(const TowerPoint& p, int level) {
    TowerRef shallow = make_tower(p.tower()->sequence(), level);
    return TowerPoint(std::move(shallow), p.residue_at(level));
}

ClopenSet::ClopenSet(TowerRef tower, int level, std::vector<Int> residues)
    : tower_(std::move(tower)), level_(level), residues_(std::move(residues)) {
    if (!tower_) {
        throw std::invalid_argument("ClopenSet: null tower");
    }
    if (level_ < 0 || level_ > tower_->depth()) {
        throw std::invalid_argument("ClopenSet: level out of range");
    }
    if (residues_.empty()) {
        throw std::invalid_argument("ClopenSet: clopen sets here are nonempty");
    }
    const Int& m = tower_->modulus(level_);
    for (const Int& r : residues_) {
        if (r < 0 || r >= m) {
            throw std::invalid_argument("ClopenSet: residue out of range [0, M_level)");
        }
    }
    std::sort(residues_.begin(), residues_.end());
    residues_.erase(std::unique(residues_.begin(), residues_.end()), residues_.end());
    // the whole fiber is the only clopen set at level 0, nothing above it
    canonical_ = (level_ == 0);
}

ClopenSet ClopenSet::full(TowerRef tower) {
    return ClopenSet(std::move(tower), 0, {Int(0)});
}

ClopenSet ClopenSet::cylinder(TowerRef tower, int level, Int residue) {
    std::vector<Int> rs;
    rs.push_back(std::move(residue));
    return ClopenSet(std::move(tower), level, std::move(rs));
}

bool ClopenSet::contains(const Int& z) const {
    return std::binary_search(residues_.begin(), residues_.end(),
                              mod_floor(z, tower_->modulus(level_)));
}

Int ClopenSet::count_at(int level) const {
    if (level < level_ || level > tower_->depth()) {
        throw std::out_of_range("ClopenSet::count_at: level out of range");
    }
    return Int(residues_.size()) * (tower_->modulus(level) / tower_->modulus(level_));
}

ClopenSet ClopenSet::canonicalize() const {
    int level = level_;
    std::vector<Int> rs = residues_;
    // Drop one level at a time: the set is a full preimage from level - 1
    // exactly when every residue class mod M_{level-1} it meets is hit by all
    // m_level of its lifts.
    while (level > 0) {
        const Int& below = tower_->modulus(level - 1);
        const std::int64_t lifts = tower_->entry(level);
        std::map<Int, std::int64_t> hits;
        for (const Int& r : rs) {
            ++hits[r % below];
        }
        if (rs.size() != hits.size() * static_cast<std::size_t>(lifts)) {
            break;
        }
        bool pullback = true;
        for (const auto& [r, n] : hits) {
            if (n != lifts) {
                pullback = false;
                break;
            }
        }
        if (!pullback) {
            break;
        }
        rs.clear();
        rs.reserve(hits.size());
        for (const auto& [r, n] : hits) {
            rs.push_back(r);
        }
        --level;
    }
    ClopenSet out(tower_, level, std::move(rs));
    out.canonical_ = true;
    return out;
}

ClopenSet ClopenSet::translate(const Int& t) const {
    const Int& m = tower_->modulus(level_);
    std::vector<Int> rs;
    rs.reserve(residues_.size());
    for (const Int& r : residues_) {
        rs.push_back(mod_floor(r + t, m));
    }
    return ClopenSet(tower_, level_, std::move(rs)).canonicalize();
}

ClopenSet ClopenSet::refine_to(int level) const {
    if (level < level_ || level > tower_->depth()) {
        throw std::out_of_range("ClopenSet::refine_to: level out of range");
    }
    const Int& here = tower_->modulus(level_);
    Int lifts = tower_->modulus(level) / here;
    std::vector<Int> rs;
    rs.reserve(residues_.size() * static_cast<std::size_t>(lifts));
    for (const Int& r : residues_) {
        for (Int i = 0; i < lifts; ++i) {
            rs.push_back(r + i * here);
        }
    }
    return ClopenSet(tower_, level, std::move(rs));
}

Rational ClopenSet::diameter() const {
    // Members of a singleton residue at level j < depth still spread over all
    // its lifts, so only a singleton at the full depth is a genuine point.
    int agree = level_;
    if (residues_.size() > 1) {
        Int g = 0;
        for (const Int& r : residues_) {
            g = gcd(g, r - residues_.front());
        }
        agree = level_ - 1;
        while (g % tower_->modulus(agree) != 0) {
            --agree;  // terminates: M_0 = 1
        }
    }
    return Rational(Int(1), Int(1) << agree);
}

bool operator==(const ClopenSet& a, const ClopenSet& b) {
    if (!(*a.tower_ == *b.tower_)) {
        return false;
    }
    ClopenSet ca = a.canonical_ ? a : a.canonicalize();
    ClopenSet cb = b.canonical_ ? b : b.canonicalize();
    return ca.level_ == cb.level_ && ca.residues_ == cb.residues_;
}

}  // namespace matchbox
