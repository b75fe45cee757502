#pragma once

#include <cstdint>
#include <vector>

namespace fsc {

// A letter is an index into the ambient alphabet.
using Symbol = std::uint32_t;
using Word = std::vector<Symbol>;

// Shortlex: shorter words first, ties broken lexicographically.
struct ShortlexLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size())
            return a.size() < b.size();
        return a < b;
    }
};

// Letter-count vector (Parikh image) of w over an alphabet of the given size.
inline std::vector<std::uint32_t> parikh(const Word& w, std::size_t alphabetSize) {
    std::vector<std::uint32_t> counts(alphabetSize, 0);
    for (Symbol a : w)
        counts.at(a) += 1;
    return counts;
}

inline Word concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

} // namespace fsc
