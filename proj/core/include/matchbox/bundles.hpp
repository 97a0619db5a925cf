#pragma once

#include <matchbox/odometer.hpp>

#include <vector>

namespace matchbox {

// Standard generators of the fundamental group of a closed orientable
// surface: one alpha/beta pair per handle.
enum class SurfaceGenerator { Alpha, Beta };

struct SurfaceLetter {
    SurfaceGenerator kind;
    int index;              // handle, 1-based
    std::int64_t exponent;  // nonzero

    friend bool operator==(const SurfaceLetter&, const SurfaceLetter&) = default;
};

class SurfaceGroupWord {
public:
    SurfaceGroupWord(int genus, std::vector<SurfaceLetter> letters);

    int genus() const noexcept { return genus_; }
    const std::vector<SurfaceLetter>& letters() const noexcept { return letters_; }

    friend SurfaceGroupWord operator*(const SurfaceGroupWord& a, const SurfaceGroupWord& b);

private:
    int genus_;
    std::vector<SurfaceLetter> letters_;
};

// convenience letters: alpha(i)^e, beta(i)^e
SurfaceLetter alpha(int index, std::int64_t exponent = 1);
SurfaceLetter beta(int index, std::int64_t exponent = 1);

// The exponent sum of the first alpha generator: the homomorphism onto Z
// that kills every other generator.  It factors through first homology, so
// it vanishes on commutators and in particular on the surface relator.
std::int64_t winding_number(const SurfaceGroupWord& w);

// [a_1, b_1] [a_2, b_2] ... [a_g, b_g]
SurfaceGroupWord surface_relator(int genus);

// 2 - 2 * genus; rejects genus < 1
std::int64_t euler_characteristic(int genus);

// A degree-d covering of a genus-g surface.  The Euler characteristic is
// multiplicative, which forces the genus of the total space.
struct CoveringDatum {
    int base_genus;
    std::int64_t degree;
    std::int64_t cover_genus;
    std::int64_t euler_base;
    std::int64_t euler_cover;
};

CoveringDatum cover_of(int base_genus, std::int64_t degree);

// The deck transformation a word induces on the truncated fiber: step the
// odometer winding_number(w) times (backwards for negative values).
TowerPoint holonomy(const SurfaceGroupWord& w, const TowerPoint& p);

// Apply a path of words in order, recording the fiber point after each one.
std::vector<TowerPoint> suspension_orbit(const std::vector<SurfaceGroupWord>& words,
                                         const TowerPoint& start);

// A fiber bundle over a genus-g surface with totally disconnected fiber,
// presented by the bonding sequence of its fiberwise tower.
class AdicSurface {
public:
    AdicSurface(int genus, BondingSequence seq);

    int genus() const noexcept { return genus_; }
    const BondingSequence& sequence() const noexcept { return seq_; }

    friend bool operator==(const AdicSurface&, const AdicSurface&) = default;

private:
    int genus_;
    BondingSequence seq_;
};

}  // namespace matchbox
