#include "presentation.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

namespace matchbox::cli {

namespace {

using json = nlohmann::ordered_json;

[[noreturn]] void fail(const std::filesystem::path& file, const std::string& message) {
    throw PresentationError(file.string() + ": " + message);
}

[[noreturn]] void fail_field(const std::filesystem::path& file, const std::string& field,
                             const std::string& message) {
    fail(file, "field '" + field + "': " + message);
}

std::int64_t integer_in(const std::filesystem::path& file, const json& j,
                        const std::string& field) {
    if (!j.is_number_integer()) {
        fail_field(file, field, "expected an integer");
    }
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() >
            static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
        fail_field(file, field, "integer out of range");
    }
    return j.get<std::int64_t>();
}

std::vector<std::int64_t> entry_list(const std::filesystem::path& file, const json& j,
                                     const std::string& field) {
    if (!j.is_array()) {
        fail_field(file, field, "expected an array of integers");
    }
    std::vector<std::int64_t> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string at = field + "[" + std::to_string(i) + "]";
        std::int64_t m = integer_in(file, j[i], at);
        if (m < 2) {
            fail_field(file, at, "covering degree must be >= 2");
        }
        out.push_back(m);
    }
    return out;
}

IntMatrix matrix_in(const std::filesystem::path& file, const json& j, std::size_t n,
                    const std::string& field) {
    if (!j.is_array() || j.size() != n) {
        fail_field(file, field, "expected " + std::to_string(n) + " rows");
    }
    IntMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        const json& row = j[r];
        std::string at = field + "[" + std::to_string(r) + "]";
        if (!row.is_array() || row.size() != n) {
            fail_field(file, at, "expected a row of " + std::to_string(n) + " integers");
        }
        for (std::size_t c = 0; c < n; ++c) {
            m(r, c) = integer_in(file, row[c], at + "[" + std::to_string(c) + "]");
        }
    }
    return m;
}

std::vector<IntMatrix> matrix_list(const std::filesystem::path& file, const json& j,
                                   std::size_t n, const std::string& field) {
    if (!j.is_array()) {
        fail_field(file, field, "expected an array of matrices");
    }
    std::vector<IntMatrix> out;
    out.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        out.push_back(matrix_in(file, j[i], n, field + "[" + std::to_string(i) + "]"));
    }
    return out;
}

const json& require(const std::filesystem::path& file, const json& doc,
                    const std::string& field) {
    auto it = doc.find(field);
    if (it == doc.end()) {
        fail_field(file, field, "missing");
    }
    return *it;
}

void reject_unknown_keys(const std::filesystem::path& file, const json& doc,
                         const std::set<std::string>& known) {
    for (const auto& [key, value] : doc.items()) {
        if (!known.count(key)) {
            fail_field(file, key, "unknown key");
        }
    }
}

json entries_json(const std::vector<std::int64_t>& entries) {
    return json(entries);
}

}  // namespace

Presentation load_presentation(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) {
        fail(file, "cannot open file");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    json doc;
    try {
        doc = json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
            }
        }
        fail(file, "line " + std::to_string(line) + ": malformed JSON: " + e.what());
    }
    if (!doc.is_object()) {
        fail(file, "top level must be an object");
    }

    if (integer_in(file, require(file, doc, "format_version"), "format_version") !=
        kFormatVersion) {
        fail_field(file, "format_version", "unsupported version, expected 1");
    }
    const json& jkind = require(file, doc, "kind");
    if (!jkind.is_string()) {
        fail_field(file, "kind", "expected a string");
    }
    const std::string kind = jkind.get<std::string>();

    try {
        if (kind == "vietoris") {
            reject_unknown_keys(file, doc, {"format_version", "kind", "prefix", "period"});
            BondingSequence seq(entry_list(file, require(file, doc, "prefix"), "prefix"),
                                entry_list(file, require(file, doc, "period"), "period"));
            return VietorisPresentation{std::move(seq)};
        }
        if (kind == "adic-surface") {
            reject_unknown_keys(file, doc,
                                {"format_version", "kind", "genus", "prefix", "period"});
            std::int64_t genus = integer_in(file, require(file, doc, "genus"), "genus");
            if (genus < 1 || genus > std::numeric_limits<int>::max()) {
                fail_field(file, "genus", "must be an integer >= 1");
            }
            BondingSequence seq(entry_list(file, require(file, doc, "prefix"), "prefix"),
                                entry_list(file, require(file, doc, "period"), "period"));
            return AdicSurfacePresentation{
                AdicSurface(static_cast<int>(genus), std::move(seq))};
        }
        if (kind == "toral") {
            reject_unknown_keys(file, doc, {"format_version", "kind", "n", "prefix", "period"});
            std::int64_t n = integer_in(file, require(file, doc, "n"), "n");
            if (n < 1 || n > 64) {
                fail_field(file, "n", "must be an integer in [1, 64]");
            }
            std::size_t dim = static_cast<std::size_t>(n);
            MatrixChain chain(dim, matrix_list(file, require(file, doc, "prefix"), dim, "prefix"),
                              matrix_list(file, require(file, doc, "period"), dim, "period"));
            return ToralPresentation{std::move(chain)};
        }
    } catch (const std::invalid_argument& e) {
        fail(file, e.what());  // arity and degree checks from the core constructors
    }
    fail_field(file, "kind", "unknown kind '" + kind +
                                 "', expected vietoris, adic-surface, or toral");
}

void save_presentation(const std::filesystem::path& file, const AdicSurfacePresentation& p) {
    json doc;
    doc["format_version"] = kFormatVersion;
    doc["kind"] = "adic-surface";
    doc["genus"] = p.surface.genus();
    doc["prefix"] = entries_json(p.surface.sequence().prefix());
    doc["period"] = entries_json(p.surface.sequence().period());
    std::ofstream out(file);
    if (!out) {
        throw PresentationError(file.string() + ": cannot open for writing");
    }
    out << doc.dump(2) << "\n";
}

const char* kind_name(const Presentation& p) {
    if (std::holds_alternative<VietorisPresentation>(p)) {
        return "vietoris";
    }
    if (std::holds_alternative<AdicSurfacePresentation>(p)) {
        return "adic-surface";
    }
    return "toral";
}

}  // namespace matchbox::cli
