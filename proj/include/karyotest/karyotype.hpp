// karyotype.hpp -- structured ISCN karyotypes: chromosomes, bands, events

#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace karyotest::iscn {

/// One of the 24 human chromosomes: autosomes 1-22 plus X and Y.
class Chromosome {
public:
    static std::optional<Chromosome> from_string(std::string_view text);
    static Chromosome autosome(int number);
    static Chromosome x() { return Chromosome(23); }
    static Chromosome y() { return Chromosome(24); }

    bool is_sex() const { return code_ >= 23; }
    bool is_x() const { return code_ == 23; }
    bool is_y() const { return code_ == 24; }
    std::string str() const;

    auto operator<=>(const Chromosome&) const = default;

private:
    explicit Chromosome(std::uint8_t code) : code_(code) {}
    std::uint8_t code_;  // 1..22 autosome, 23 = X, 24 = Y
};

enum class SexSymbol : char { X = 'X', Y = 'Y', N = 'N' };

inline char to_char(SexSymbol s) { return static_cast<char>(s); }

/// A band location on a chromosome arm, e.g. "p22" or "q13.1".
struct Band {
    char arm = 'p';      // 'p' or 'q'
    std::string digits;  // main band digits
    std::string sub;     // sub-band digits after '.', empty when absent

    std::string str() const;
    auto operator<=>(const Band&) const = default;
};

struct Breakpoint {
    Chromosome chromosome;
    Band band;

    std::string str() const;  // "1p22"
    auto operator<=>(const Breakpoint&) const = default;
};

struct Gain {
    Chromosome chromosome;
    auto operator<=>(const Gain&) const = default;
};

struct Loss {
    Chromosome chromosome;
    auto operator<=>(const Loss&) const = default;
};

struct Translocation {
    Breakpoint from, to;
    auto operator<=>(const Translocation&) const = default;
};

/// Terminal deletion carries one band, interstitial deletion two.
struct Deletion {
    Chromosome chromosome;
    Band first;
    std::optional<Band> second;
    auto operator<=>(const Deletion&) const = default;
};

struct Inversion {
    Chromosome chromosome;
    Band first, second;
    auto operator<=>(const Inversion&) const = default;
};

struct Duplication {
    Chromosome chromosome;
    Band first, second;
    auto operator<=>(const Duplication&) const = default;
};

using Event = std::variant<Gain, Loss, Translocation, Deletion, Inversion, Duplication>;

/// A parsed karyotype: total chromosome count, sex complement, and the
/// alteration events in source order. N marks an unspecified sex chromosome.
struct Karyotype {
    int total = 46;
    std::vector<SexSymbol> sex;
    std::vector<Event> events;

    bool operator==(const Karyotype&) const = default;
};

std::string render(const Event& event);

/// Canonical ISCN-subset text: count, comma, sex symbols, comma-separated
/// events in stored order, no whitespace.
std::string render(const Karyotype& k);

}  // namespace karyotest::iscn
