#include <matchbox/bundles.hpp>

#include <stdexcept>
#include <utility>

namespace matchbox {

SurfaceGroupWord::SurfaceGroupWord(int genus, std::vector<SurfaceLetter> letters)
    : genus_(genus), letters_(std::move(letters)) {
    if (genus_ < 1) {
        throw std::invalid_argument("SurfaceGroupWord: genus must be >= 1");
    }
    for (const SurfaceLetter& l : letters_) {
        if (l.index < 1 || l.index > genus_) {
            throw std::invalid_argument("SurfaceGroupWord: generator index out of range");
        }
        if (l.exponent == 0) {
            throw std::invalid_argument("SurfaceGroupWord: zero exponent letter");
        }
    }
}

SurfaceGroupWord operator*(const SurfaceGroupWord& a, const SurfaceGroupWord& b) {
    if (a.genus_ != b.genus_) {
        throw std::invalid_argument("SurfaceGroupWord: concatenating words of different genus");
    }
    std::vector<SurfaceLetter> letters = a.letters_;
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    return SurfaceGroupWord(a.genus_, std::move(letters));
}

SurfaceLetter alpha(int index, std::int64_t exponent) {
    return SurfaceLetter{SurfaceGenerator::Alpha, index, exponent};
}

SurfaceLetter beta(int index, std::int64_t exponent) {
    return SurfaceLetter{SurfaceGenerator::Beta, index, exponent};
}

std::int64_t winding_number(const SurfaceGroupWord& w) {
    std::int64_t sum = 0;
    for (const SurfaceLetter& l : w.letters()) {
        if (l.kind == SurfaceGenerator::Alpha && l.index == 1) {
            sum += l.exponent;
        }
    }
    return sum;
}

SurfaceGroupWord surface_relator(int genus) {
    std::vector<SurfaceLetter> letters;
    letters.reserve(static_cast<std::size_t>(genus) * 4);
    for (int i = 1; i <= genus; ++i) {
        letters.push_back(alpha(i));
        letters.push_back(beta(i));
        letters.push_back(alpha(i, -1));
        letters.push_back(beta(i, -1));
    }
    return SurfaceGroupWord(genus, std::move(letters));
}

std::int64_t euler_characteristic(int genus) {
    if (genus < 1) {
        throw std::invalid_argument("euler_characteristic: genus must be >= 1");
    }
    return 2 - 2 * static_cast<std::int64_t>(genus);
}

CoveringDatum cover_of(int base_genus, std::int64_t degree) {
    if (base_genus < 1) {
        throw std::invalid_argument("cover_of: base genus must be >= 1");
    }
    if (degree < 1) {
        throw std::invalid_argument("cover_of: degree must be >= 1");
    }
    CoveringDatum c;
    c.base_genus = base_genus;
    c.degree = degree;
    c.euler_base = euler_characteristic(base_genus);
    c.euler_cover = degree * c.euler_base;
    // chi = 2 - 2g applied to the cover
    c.cover_genus = degree * (static_cast<std::int64_t>(base_genus) - 1) + 1;
    return c;
}

TowerPoint holonomy(const SurfaceGroupWord& w, const TowerPoint& p) {
    return advance(p, Int(winding_number(w)));
}

std::vector<TowerPoint> suspension_orbit(const std::vector<SurfaceGroupWord>& words,
                                         const TowerPoint& start) {
    std::vector<TowerPoint> visited;
    visited.reserve(words.size());
    TowerPoint p = start;
    for (const SurfaceGroupWord& w : words) {
        p = holonomy(w, p);
        visited.push_back(p);
    }
    return visited;
}

AdicSurface::AdicSurface(int genus, BondingSequence seq)
    : genus_(genus), seq_(std::move(seq)) {
    if (genus_ < 1) {
        throw std::invalid_argument("AdicSurface: genus must be >= 1");
    }
}

}  // namespace matchbox
