#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sdaree/codec.hpp"
#include "sdaree/pipeline.hpp"

namespace sdaree {

/// One known-answer case. A passing case satisfies
/// ct == sd_aree_encrypt(pt, key, wrap).
struct KatCase {
    std::uint64_t count = 0;
    std::vector<std::uint8_t> key;
    WrapMode wrap = WrapMode::ByteMod256;
    std::vector<std::uint8_t> pt;
    std::vector<std::uint8_t> ct;
};

class KatParseError : public std::runtime_error {
public:
    KatParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Parses the line-oriented KAT format: blank-line separated blocks of
///
///   COUNT = n
///   KEY = <hex>
///   WRAP = byte|paper
///   PT = <hex>
///   CT = <hex>
///
/// Lines starting with '#' are comments. PT and CT may be empty; KEY may not.
inline std::vector<KatCase> parse_kat(std::istream& in) {
    static constexpr std::string_view field_names[] = {"COUNT", "KEY", "WRAP", "PT", "CT"};

    std::vector<KatCase> cases;
    KatCase current;
    std::size_t next_field = 0;
    std::size_t line_no = 0;
    std::string line;

    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
            s.remove_prefix(1);
        }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
            s.remove_suffix(1);
        }
        return s;
    };

    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#') continue;

        const std::size_t eq = text.find('=');
        if (eq == std::string_view::npos) {
            throw KatParseError(line_no, "expected 'NAME = value'");
        }
        const std::string_view name = trim(text.substr(0, eq));
        const std::string_view value = trim(text.substr(eq + 1));

        if (name != field_names[next_field]) {
            throw KatParseError(line_no, "expected field " + std::string(field_names[next_field]) +
                                             ", got " + std::string(name));
        }

        try {
            switch (next_field) {
                case 0:
                    current.count = std::stoull(std::string(value));
                    break;
                case 1:
                    current.key = hex_decode(value);
                    if (current.key.empty()) throw std::invalid_argument("empty key");
                    break;
                case 2:
                    if (value == "byte") {
                        current.wrap = WrapMode::ByteMod256;
                    } else if (value == "paper") {
                        current.wrap = WrapMode::Paper255;
                    } else {
                        throw std::invalid_argument("wrap must be 'byte' or 'paper'");
                    }
                    break;
                case 3:
                    current.pt = hex_decode(value);
                    break;
                case 4:
                    current.ct = hex_decode(value);
                    break;
            }
        } catch (const std::exception& e) {
            throw KatParseError(line_no, std::string(name) + ": " + e.what());
        }

        if (++next_field == 5) {
            cases.push_back(std::move(current));
            current = KatCase{};
            next_field = 0;
        }
    }

    if (next_field != 0) {
        throw KatParseError(line_no, "truncated block, next expected field " +
                                         std::string(field_names[next_field]));
    }
    return cases;
}

struct KatResult {
    std::size_t total = 0;
    std::vector<std::uint64_t> failed_counts;

    bool all_passed() const { return failed_counts.empty(); }
};

/// Recompute every case and collect the COUNTs whose ciphertext mismatches.
inline KatResult run_kat_cases(std::span<const KatCase> cases) {
    KatResult result;
    result.total = cases.size();
    for (const KatCase& c : cases) {
        const auto ct = sd_aree_encrypt(c.pt, KeyMaterial{c.key}, c.wrap);
        if (ct != c.ct) result.failed_counts.push_back(c.count);
    }
    return result;
}

}  // namespace sdaree
