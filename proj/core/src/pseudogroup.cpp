#include <matchbox/pseudogroup.hpp>

#include <stdexcept>
#include <utility>

namespace matchbox {

RestrictedAction::RestrictedAction(ClopenSet window) : window_(std::move(window)) {}

// Translation by t permutes the residue classes at the window's own level,
// and pulling a tiling back along the bundle projection keeps it a tiling,
// so everything below is decided at that level.

bool RestrictedAction::is_collapsible() const {
    const Int& m = tower()->modulus(window_.level());
    const auto& rs = window_.residues();
    const Int count(rs.size());
    if (m % count != 0) {
        return false;
    }
    // coset test: sorted residues form an arithmetic progression with step
    // m / |W| starting at the least residue
    Int step = m / count;
    for (std::size_t i = 0; i < rs.size(); ++i) {
        if (rs[i] != rs.front() + step * Int(i)) {
            return false;
        }
    }
    return true;
}

std::vector<ClopenSet> RestrictedAction::translates_partition() const {
    if (!is_collapsible()) {
        throw NotCollapsibleError("translates_partition: window translates overlap");
    }
    Int d = isotropy().generator;
    std::vector<ClopenSet> parts;
    parts.reserve(static_cast<std::size_t>(d));
    for (Int t = 0; t < d; ++t) {
        parts.push_back(window_.translate(t));
    }
    return parts;
}

IsotropyDescriptor RestrictedAction::isotropy() const {
    const Int& m = tower()->modulus(window_.level());
    // The stabilizer is a subgroup of Z/M_level, so its least positive
    // element divides M_level; scan the divisors in increasing order.
    Int d = m;
    for (Int t = 1; t * t <= m; ++t) {
        if (m % t != 0) {
            continue;
        }
        if (window_ == window_.translate(t)) {
            d = t;
            break;
        }
        Int s = m / t;
        if (s < d && window_ == window_.translate(s)) {
            d = s;  // keep scanning: a smaller cofactor may still appear
        }
    }
    return IsotropyDescriptor{d, d};
}

ClopenSet RestrictedAction::collapsible_refinement() const {
    return ClopenSet::cylinder(tower(), tower()->depth(), window_.residues().front());
}

bool interleaving_consistent(const BondingSequence& a, const BondingSequence& b,
                             int depth, int horizon_factor) {
    if (depth < 1) {
        throw std::invalid_argument("interleaving_consistent: depth must be >= 1");
    }
    if (horizon_factor < 1) {
        throw std::invalid_argument("interleaving_consistent: horizon_factor must be >= 1");
    }
    const BondingSequence ta = a.without_prefix();
    const BondingSequence tb = b.without_prefix();
    const int horizon = horizon_factor * depth;

    auto cumulative = [](const BondingSequence& s, int upto) {
        std::vector<Int> m;
        m.reserve(static_cast<std::size_t>(upto));
        Int acc = 1;
        for (int j = 1; j <= upto; ++j) {
            acc *= s.entry(static_cast<std::size_t>(j));
            m.push_back(acc);
        }
        return m;
    };
    const std::vector<Int> ma = cumulative(ta, horizon);
    const std::vector<Int> mb = cumulative(tb, horizon);

    auto interleaves = [&](const std::vector<Int>& x, const std::vector<Int>& y) {
        for (int j = 0; j < depth; ++j) {
            bool found = false;
            for (int i = 0; i < horizon; ++i) {
                if (y[static_cast<std::size_t>(i)] % x[static_cast<std::size_t>(j)] == 0) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                return false;
            }
        }
        return true;
    };
    return interleaves(ma, mb) && interleaves(mb, ma);
}

}  // namespace matchbox
