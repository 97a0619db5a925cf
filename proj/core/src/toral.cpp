#include <matchbox/toral.hpp>

#include <sstream>
#include <stdexcept>
#include <utility>

namespace matchbox {

namespace {

void check_stage(const IntMatrix& m, std::size_t n, const char* which) {
    if (m.rows() != n || m.cols() != n) {
        throw std::invalid_argument(std::string("MatrixChain: ") + which +
                                    " stage is not n x n");
    }
    Int det = determinant(m);
    if (det > -2 && det < 2) {
        throw std::invalid_argument(std::string("MatrixChain: ") + which +
                                    " stage must have |det| >= 2");
    }
}

}  // namespace

MatrixChain::MatrixChain(std::size_t n, std::vector<IntMatrix> prefix,
                         std::vector<IntMatrix> period)
    : n_(n), prefix_(std::move(prefix)), period_(std::move(period)) {
    if (n_ == 0) {
        throw std::invalid_argument("MatrixChain: dimension must be >= 1");
    }
    if (period_.empty()) {
        throw std::invalid_argument("MatrixChain: period must be nonempty");
    }
    for (const IntMatrix& m : prefix_) {
        check_stage(m, n_, "prefix");
    }
    for (const IntMatrix& m : period_) {
        check_stage(m, n_, "period");
    }
}

const IntMatrix& MatrixChain::entry(std::size_t j) const {
    if (j == 0) {
        throw std::invalid_argument("MatrixChain::entry: index is 1-based");
    }
    if (j <= prefix_.size()) {
        return prefix_[j - 1];
    }
    return period_[(j - prefix_.size() - 1) % period_.size()];
}

IntMatrix MatrixChain::cumulative(std::size_t k) const {
    IntMatrix acc = IntMatrix::identity(n_);
    for (std::size_t j = 1; j <= k; ++j) {
        acc = acc * entry(j);
    }
    return acc;
}

namespace {

std::vector<Int> factors_above_one(const std::vector<Int>& diag) {
    std::vector<Int> out;
    for (const Int& d : diag) {
        if (d > 1) {
            out.push_back(d);
        }
    }
    return out;
}

}  // namespace

std::vector<std::vector<Int>> quotient_invariants(const MatrixChain& c, int depth) {
    if (depth < 1) {
        throw std::invalid_argument("quotient_invariants: depth must be >= 1");
    }
    std::vector<std::vector<Int>> out;
    out.reserve(static_cast<std::size_t>(depth));
    IntMatrix acc = IntMatrix::identity(c.n());
    for (int k = 1; k <= depth; ++k) {
        acc = acc * c.entry(static_cast<std::size_t>(k));
        out.push_back(factors_above_one(smith_diagonal(acc)));
    }
    return out;
}

LatticeInvariants lattice_invariants(const IntMatrix& generators) {
    std::vector<Int> diag = smith_diagonal(generators);
    LatticeInvariants inv;
    inv.rank = 0;
    for (const Int& d : diag) {
        if (d != 0) {
            ++inv.rank;
        }
    }
    inv.invariant_factors = factors_above_one(diag);
    inv.torsion_rank = inv.invariant_factors.size();
    return inv;
}

IntMatrix kernel_lattice_at_depth(const MatrixChain& c, int depth) {
    if (depth < 1) {
        throw std::invalid_argument("kernel_lattice_at_depth: depth must be >= 1");
    }
    return hermite_column_basis(c.cumulative(static_cast<std::size_t>(depth)));
}

bool strict_shrinkage(const MatrixChain& c, int depth) {
    if (depth < 1) {
        throw std::invalid_argument("strict_shrinkage: depth must be >= 1");
    }
    const std::size_t k = static_cast<std::size_t>(depth);
    // full Smith diagonals: the chains are nonsingular, so no zeros
    std::vector<Int> now = smith_diagonal(c.cumulative(k));
    std::vector<Int> later = smith_diagonal(c.cumulative(k + c.period().size()));
    for (std::size_t i = 0; i < now.size(); ++i) {
        if (later[i] <= now[i]) {
            return false;
        }
    }
    return true;
}

namespace {

// whether a group with invariant factors f is a quotient of one with factors
// g: align from the largest factor and ask for divisibility
bool quotient_of(const std::vector<Int>& f, const std::vector<Int>& g) {
    if (f.size() > g.size()) {
        return false;
    }
    for (std::size_t u = 0; u < f.size(); ++u) {
        if (g[g.size() - 1 - u] % f[f.size() - 1 - u] != 0) {
            return false;
        }
    }
    return true;
}

std::string tuple_text(const char* side, int j, const std::vector<Int>& f) {
    std::ostringstream out;
    out << side << " factors at step " << j << ": (";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) {
            out << ",";
        }
        out << f[i];
    }
    out << ") divide into no partner tuple within the horizon";
    return out.str();
}

}  // namespace

ToralVerdict toral_consistency(const MatrixChain& a, const MatrixChain& b, int depth,
                               int horizon_factor) {
    if (a.n() != b.n()) {
        std::ostringstream out;
        out << "toral chains have different dimensions (n = " << a.n() << " vs n = " << b.n()
            << ")";
        throw DimensionMismatchError(out.str());
    }
    if (depth < 1) {
        throw std::invalid_argument("toral_consistency: depth must be >= 1");
    }
    if (horizon_factor < 1) {
        throw std::invalid_argument("toral_consistency: horizon_factor must be >= 1");
    }
    const int horizon = horizon_factor * depth;
    const std::vector<std::vector<Int>> fa = quotient_invariants(a.without_prefix(), horizon);
    const std::vector<std::vector<Int>> fb = quotient_invariants(b.without_prefix(), horizon);

    auto embeds = [&](const std::vector<std::vector<Int>>& x,
                      const std::vector<std::vector<Int>>& y, const char* side,
                      std::string& witness) {
        for (int j = 0; j < depth; ++j) {
            bool found = false;
            for (int i = 0; i < horizon; ++i) {
                if (quotient_of(x[static_cast<std::size_t>(j)], y[static_cast<std::size_t>(i)])) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                witness = tuple_text(side, j + 1, x[static_cast<std::size_t>(j)]);
                return false;
            }
        }
        return true;
    };

    std::string witness;
    if (!embeds(fa, fb, "left", witness) || !embeds(fb, fa, "right", witness)) {
        return ToralVerdict{ToralVerdict::Kind::Refuted, depth, std::move(witness)};
    }
    return ToralVerdict{ToralVerdict::Kind::ConsistentAtDepth, depth, ""};
}

}  // namespace matchbox
