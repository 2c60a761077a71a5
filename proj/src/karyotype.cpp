// karyotype.cpp -- rendering of karyotypes back to canonical ISCN text

#include "karyotest/karyotype.hpp"

#include <sstream>

namespace karyotest::iscn {

std::optional<Chromosome> Chromosome::from_string(std::string_view text) {
    if (text == "X") return x();
    if (text == "Y") return y();
    if (text.empty() || text.size() > 2 || text[0] == '0') return std::nullopt;
    int value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
        value = value * 10 + (c - '0');
    }
    if (value < 1 || value > 22) return std::nullopt;
    return Chromosome(static_cast<std::uint8_t>(value));
}

Chromosome Chromosome::autosome(int number) {
    return Chromosome(static_cast<std::uint8_t>(number));
}

std::string Chromosome::str() const {
    if (code_ == 23) return "X";
    if (code_ == 24) return "Y";
    return std::to_string(code_);
}

std::string Band::str() const {
    std::string out(1, arm);
    out += digits;
    if (!sub.empty()) {
        out += '.';
        out += sub;
    }
    return out;
}

std::string Breakpoint::str() const { return chromosome.str() + band.str(); }

namespace {

struct EventRenderer {
    std::string operator()(const Gain& e) const { return "+" + e.chromosome.str(); }
    std::string operator()(const Loss& e) const { return "-" + e.chromosome.str(); }
    std::string operator()(const Translocation& e) const {
        return "t(" + e.from.chromosome.str() + ";" + e.to.chromosome.str() +
               ")(" + e.from.band.str() + ";" + e.to.band.str() + ")";
    }
    std::string operator()(const Deletion& e) const {
        std::string out = "del(" + e.chromosome.str() + ")(" + e.first.str();
        if (e.second) out += e.second->str();
        return out + ")";
    }
    std::string operator()(const Inversion& e) const {
        return "inv(" + e.chromosome.str() + ")(" + e.first.str() +
               e.second.str() + ")";
    }
    std::string operator()(const Duplication& e) const {
        return "dup(" + e.chromosome.str() + ")(" + e.first.str() +
               e.second.str() + ")";
    }
};

}  // namespace

std::string render(const Event& event) { return std::visit(EventRenderer{}, event); }

std::string render(const Karyotype& k) {
    std::string out = std::to_string(k.total);
    out += ',';
    for (SexSymbol s : k.sex) out += to_char(s);
    for (const Event& e : k.events) {
        out += ',';
        out += render(e);
    }
    return out;
}

}  // namespace karyotest::iscn
