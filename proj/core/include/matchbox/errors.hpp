#pragma once

#include <stdexcept>
#include <string>

namespace matchbox {

// Requested a tiling by translates of a window that does not tile.
class NotCollapsibleError : public std::domain_error {
public:
    explicit NotCollapsibleError(const std::string& what) : std::domain_error(what) {}
};

// Two matrix chains of different ambient dimension were compared.
class DimensionMismatchError : public std::invalid_argument {
public:
    explicit DimensionMismatchError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace matchbox
