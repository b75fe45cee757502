#pragma once

#include "parse.hpp"

#include <sstream>
#include <string>

namespace fsc {

inline const char* modeName(ProductMode m) {
    switch (m) {
        case ProductMode::hadamard: return "hadamard";
        case ProductMode::shuffle: return "shuffle";
        case ProductMode::infiltration: return "infiltration";
    }
    return "?";
}

// Canonical text form of a definition; printing and re-parsing yields the
// same definition.
inline std::string printAutomaton(const AutomatonDecl& d) {
    std::ostringstream os;
    os << "automaton " << d.name << " {\n";
    os << "  alphabet { ";
    for (std::size_t a = 0; a < d.letters.size(); ++a) {
        if (a) os << ", ";
        os << d.letters[a] << ": " << modeName(d.automaton.modes[a]);
    }
    os << " }\n";
    os << "  nonterminals { ";
    for (std::size_t i = 0; i < d.nonterminals.size(); ++i) {
        if (i) os << ", ";
        os << d.nonterminals[i];
    }
    os << " }\n";
    os << "  output { ";
    for (std::size_t i = 0; i < d.nonterminals.size(); ++i) {
        if (i) os << ", ";
        os << d.nonterminals[i] << " = " << d.automaton.output[i].toString();
    }
    os << " }\n";
    for (std::size_t a = 0; a < d.letters.size(); ++a)
        for (std::size_t i = 0; i < d.nonterminals.size(); ++i)
            os << "  delta " << d.letters[a] << " " << d.nonterminals[i] << " = "
               << d.automaton.delta[a][i].toString(d.nonterminals) << "\n";
    os << "}\n";
    return os.str();
}

inline std::string printSystem(const SystemDecl& d) {
    std::ostringstream os;
    os << (d.isCda ? "cda " : "polyrec ") << d.name << " {\n";
    os << "  dims " << d.system.dims << "\n";
    os << "  unknowns { ";
    for (std::size_t i = 0; i < d.unknowns.size(); ++i) {
        if (i) os << ", ";
        os << d.unknowns[i];
    }
    os << " }\n";
    os << "  init { ";
    for (std::size_t i = 0; i < d.unknowns.size(); ++i) {
        if (i) os << ", ";
        os << d.unknowns[i] << " = " << d.system.init[i].toString();
    }
    os << " }\n";
    const char* stmt = d.isCda ? "d" : "shift";
    for (std::size_t j = 0; j < d.system.dims; ++j)
        for (std::size_t i = 0; i < d.unknowns.size(); ++i)
            os << "  " << stmt << " " << (j + 1) << " " << d.unknowns[i] << " = "
               << d.system.shifts[j][i].toString(d.unknowns) << "\n";
    os << "}\n";
    return os.str();
}

inline std::string printDocument(const Document& doc) {
    std::string out;
    bool first = true;
    for (const AutomatonDecl& a : doc.automata) {
        if (!first) out += "\n";
        out += printAutomaton(a);
        first = false;
    }
    for (const SystemDecl& s : doc.systems) {
        if (!first) out += "\n";
        out += printSystem(s);
        first = false;
    }
    return out;
}

} // namespace fsc
