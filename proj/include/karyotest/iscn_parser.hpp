// iscn_parser.hpp -- recursive-descent parser for an ISCN karyotype subset

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "karyotest/karyotype.hpp"

namespace karyotest::iscn {

/// Parse failure: byte offset of the first position where no grammar rule
/// could continue, what was expected there, and the offending lexeme.
struct ParseError {
    std::size_t position = 0;
    std::string expected;
    std::string found;

    std::string describe() const;
    bool operator==(const ParseError&) const = default;
};

using ParseResult = std::variant<Karyotype, ParseError>;

/// Accepted subset:
///   karyotype := count "," sex ("," event)*
///   sex       := (X|Y|N)+
///   event     := "+"chr | "-"chr
///              | "t("chr";"chr")("band";"band")"
///              | "del("chr")("band [band]")"
///              | "inv("chr")("band band")"
///              | "dup("chr")("band band")"
/// Case-sensitive, no internal whitespace. Never throws: any byte string
/// yields either a Karyotype or a positioned ParseError.
ParseResult parse(std::string_view text);

inline const Karyotype* get_karyotype(const ParseResult& r) {
    return std::get_if<Karyotype>(&r);
}
inline const ParseError* get_error(const ParseResult& r) {
    return std::get_if<ParseError>(&r);
}

/// Size bounds for random_karyotype.
struct RandomConfig {
    int max_events = 4;      // events per karyotype
    int max_extra_sex = 2;   // sex symbols beyond the first
};

/// Deterministic generator for the property suite: equal seeds give equal
/// karyotypes and every output satisfies the Karyotype invariants.
Karyotype random_karyotype(std::uint64_t seed, const RandomConfig& config = {});

/// Loads a karyotype corpus: one string per line, '#' comments and blank
/// lines ignored.
std::vector<std::string> load_corpus(const std::string& path);

}  // namespace karyotest::iscn
