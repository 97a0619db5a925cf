#pragma once

#include <matchbox/bundles.hpp>
#include <matchbox/toral.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>

namespace matchbox::cli {

// Input file did not parse or validate; the message carries the file name
// plus a line or field diagnostic.
class PresentationError : public std::runtime_error {
public:
    explicit PresentationError(const std::string& what) : std::runtime_error(what) {}
};

struct VietorisPresentation {
    BondingSequence seq;
};

struct AdicSurfacePresentation {
    AdicSurface surface;
};

struct ToralPresentation {
    MatrixChain chain;
};

using Presentation =
    std::variant<VietorisPresentation, AdicSurfacePresentation, ToralPresentation>;

inline constexpr int kFormatVersion = 1;

// Strict loader: unknown kind, unknown keys, missing keys, non-integer
// entries, bad arity all raise PresentationError.
Presentation load_presentation(const std::filesystem::path& file);

void save_presentation(const std::filesystem::path& file, const AdicSurfacePresentation& p);

const char* kind_name(const Presentation& p);

}  // namespace matchbox::cli
