#pragma once

#include "systems.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fsc {

struct SourceSpan {
    std::size_t line = 1;
    std::size_t column = 1;
};

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line_(line), column_(column) {}
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

// A named automaton definition: display names for letters (index = Symbol)
// and nonterminals (index = polynomial variable), plus the machine itself.
struct AutomatonDecl {
    std::string name;
    std::vector<std::string> letters;
    std::vector<std::string> nonterminals;
    MixedAutomaton automaton;
    SourceSpan span;
};

// A named difference (polyrec) or differential (cda) system definition.
struct SystemDecl {
    bool isCda = false;
    std::string name;
    std::vector<std::string> unknowns;
    PolyrecSystem system;  // CDA systems share the shape; see asCda()
    SourceSpan span;

    CDASystem asCda() const {
        return CDASystem{system.dims, system.unknowns, system.shifts, system.init};
    }
};

struct Document {
    std::vector<AutomatonDecl> automata;
    std::vector<SystemDecl> systems;
};

namespace detail {

enum class Tok {
    ident,
    integer,
    lbrace,
    rbrace,
    lparen,
    rparen,
    comma,
    colon,
    equals,
    caret,
    plus,
    minus,
    star,
    slash,
    end
};

struct Token {
    Tok kind = Tok::end;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

inline std::vector<Token> tokenize(std::string_view src) {
    std::vector<Token> out;
    std::size_t line = 1, col = 1;
    std::size_t i = 0;
    auto bump = [&](char c) {
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {  // line comment
            while (i < src.size() && src[i] != '\n')
                bump(src[i++]);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            bump(c);
            ++i;
            continue;
        }
        Token t;
        t.line = line;
        t.column = col;
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            t.kind = Tok::ident;
            t.text = std::string(src.substr(i, j - i));
            while (i < j)
                bump(src[i++]);
            out.push_back(std::move(t));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
                ++j;
            t.kind = Tok::integer;
            t.text = std::string(src.substr(i, j - i));
            while (i < j)
                bump(src[i++]);
            out.push_back(std::move(t));
            continue;
        }
        switch (c) {
            case '{': t.kind = Tok::lbrace; break;
            case '}': t.kind = Tok::rbrace; break;
            case '(': t.kind = Tok::lparen; break;
            case ')': t.kind = Tok::rparen; break;
            case ',': t.kind = Tok::comma; break;
            case ':': t.kind = Tok::colon; break;
            case '=': t.kind = Tok::equals; break;
            case '^': t.kind = Tok::caret; break;
            case '+': t.kind = Tok::plus; break;
            case '-': t.kind = Tok::minus; break;
            case '*': t.kind = Tok::star; break;
            case '/': t.kind = Tok::slash; break;
            default:
                throw ParseError(line, col, std::string("unexpected character '") + c + "'");
        }
        t.text = std::string(1, c);
        bump(c);
        ++i;
        out.push_back(std::move(t));
    }
    out.push_back(Token{Tok::end, "", line, col});
    return out;
}

inline const std::set<std::string>& reservedWords() {
    static const std::set<std::string> words{
        "automaton", "polyrec", "cda",  "alphabet", "nonterminals", "output",
        "delta",     "mode",    "dims", "unknowns", "init",         "shift",
        "d",         "var",     "hadamard", "shuffle", "infiltration"};
    return words;
}

class Parser {
public:
    explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

    Document parseDocument() {
        Document doc;
        std::set<std::string> names;
        while (peek().kind != Tok::end) {
            const Token& kw = expect(Tok::ident, "'automaton', 'polyrec', or 'cda'");
            SourceSpan span{kw.line, kw.column};
            std::string declName;
            if (kw.text == "automaton") {
                AutomatonDecl a = parseAutomaton();
                a.span = span;
                declName = a.name;
                doc.automata.push_back(std::move(a));
            } else if (kw.text == "polyrec" || kw.text == "cda") {
                SystemDecl s = parseSystem(kw.text == "cda");
                s.span = span;
                declName = s.name;
                doc.systems.push_back(std::move(s));
            } else {
                throw ParseError(kw.line, kw.column,
                                 "expected 'automaton', 'polyrec', or 'cda', found '" + kw.text + "'");
            }
            if (!names.insert(declName).second)
                throw ParseError(span.line, span.column, "duplicate definition of '" + declName + "'");
        }
        return doc;
    }

    // standalone polynomial over the given variable names
    Polynomial parseExpression(const std::vector<std::string>& names) {
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < names.size(); ++i)
            index.emplace(names[i], i);
        Polynomial p = parsePoly(index, names.size());
        const Token& t = peek();
        if (t.kind != Tok::end)
            throw ParseError(t.line, t.column, "unexpected '" + t.text + "' after expression");
        return p;
    }

private:
    const Token& peek(std::size_t ahead = 0) const {
        return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
    }
    const Token& advance() { return toks_[std::min(pos_++, toks_.size() - 1)]; }
    const Token& expect(Tok kind, const std::string& what) {
        const Token& t = advance();
        if (t.kind != kind)
            throw ParseError(t.line, t.column,
                             "expected " + what + ", found '" + (t.kind == Tok::end ? "end of input" : t.text) + "'");
        return t;
    }
    const Token& expectKeyword(const std::string& word) {
        const Token& t = advance();
        if (t.kind != Tok::ident || t.text != word)
            throw ParseError(t.line, t.column,
                             "expected '" + word + "', found '" + (t.kind == Tok::end ? "end of input" : t.text) + "'");
        return t;
    }
    bool peekKeyword(const std::string& word) const {
        return peek().kind == Tok::ident && peek().text == word;
    }

    std::string parseName(const std::string& what) {
        const Token& t = expect(Tok::ident, what);
        if (reservedWords().count(t.text))
            throw ParseError(t.line, t.column, "'" + t.text + "' is a reserved word");
        return t.text;
    }

    // { name, name, ... }  or  { name: annot, ... } (annotations handed to the callback)
    std::vector<std::string> parseNameList(const std::string& what,
                                           const std::function<void(const Token&, const std::string&)>* onAnnotation = nullptr) {
        expect(Tok::lbrace, "'{'");
        std::vector<std::string> names;
        std::set<std::string> seen;
        if (peek().kind != Tok::rbrace) {
            while (true) {
                const Token& at = peek();
                std::string n = parseName(what);
                if (!seen.insert(n).second)
                    throw ParseError(at.line, at.column, "duplicate " + what + " '" + n + "'");
                names.push_back(n);
                if (peek().kind == Tok::colon) {
                    advance();
                    const Token& annot = expect(Tok::ident, "a mode annotation");
                    if (!onAnnotation)
                        throw ParseError(annot.line, annot.column, "annotation not allowed here");
                    (*onAnnotation)(annot, names.back());
                } else if (onAnnotation) {
                    (*onAnnotation)(Token{Tok::end, "", at.line, at.column}, names.back());
                }
                if (peek().kind == Tok::comma) {
                    advance();
                    continue;
                }
                break;
            }
        }
        expect(Tok::rbrace, "'}'");
        return names;
    }

    static std::optional<ProductMode> modeFromName(const std::string& s) {
        if (s == "hadamard") return ProductMode::hadamard;
        if (s == "shuffle") return ProductMode::shuffle;
        if (s == "infiltration") return ProductMode::infiltration;
        return std::nullopt;
    }

    Rational parseConstant(const std::map<std::string, std::size_t>& index, std::size_t arity,
                           const std::string& what) {
        const Token& at = peek();
        Polynomial p = parsePoly(index, arity);
        if (!p.isConstant())
            throw ParseError(at.line, at.column, what + " must be a rational constant");
        return p.constantTerm();
    }

    AutomatonDecl parseAutomaton() {
        AutomatonDecl decl;
        decl.name = parseName("definition name");
        expect(Tok::lbrace, "'{'");

        std::optional<ProductMode> uniform;
        if (peekKeyword("mode")) {
            advance();
            const Token& m = expect(Tok::ident, "a mode name");
            auto pm = modeFromName(m.text);
            if (!pm)
                throw ParseError(m.line, m.column,
                                 "unknown mode '" + m.text + "' (expected hadamard, shuffle, or infiltration)");
            uniform = *pm;
        }

        expectKeyword("alphabet");
        std::vector<ProductMode> modes;
        std::function<void(const Token&, const std::string&)> onAnnot =
            [&](const Token& annot, const std::string& letter) {
                if (annot.kind == Tok::end) {  // bare letter
                    if (!uniform)
                        throw ParseError(annot.line, annot.column,
                                         "letter '" + letter +
                                             "' needs a mode annotation (or declare a uniform 'mode' first)");
                    modes.push_back(*uniform);
                    return;
                }
                if (uniform)
                    throw ParseError(annot.line, annot.column,
                                     "per-letter annotations are not allowed together with a uniform 'mode'");
                auto pm = modeFromName(annot.text);
                if (!pm)
                    throw ParseError(annot.line, annot.column,
                                     "unknown mode '" + annot.text +
                                         "' (expected hadamard, shuffle, or infiltration)");
                modes.push_back(*pm);
            };
        decl.letters = parseNameList("letter", &onAnnot);

        expectKeyword("nonterminals");
        decl.nonterminals = parseNameList("nonterminal");
        for (const std::string& n : decl.nonterminals)
            for (const std::string& l : decl.letters)
                if (n == l)
                    throw ParseError(decl.span.line, decl.span.column,
                                     "'" + n + "' is used for both a letter and a nonterminal");

        const std::size_t k = decl.nonterminals.size();
        std::map<std::string, std::size_t> nt;
        for (std::size_t i = 0; i < k; ++i)
            nt.emplace(decl.nonterminals[i], i);
        std::map<std::string, std::size_t> letterIndex;
        for (std::size_t a = 0; a < decl.letters.size(); ++a)
            letterIndex.emplace(decl.letters[a], a);

        // output { A = rat, ... } — one entry per nonterminal
        const Token& outKw = expectKeyword("output");
        expect(Tok::lbrace, "'{'");
        std::map<std::size_t, Rational> outputs;
        if (peek().kind != Tok::rbrace) {
            while (true) {
                const Token& at = peek();
                std::string n = parseName("nonterminal");
                auto it = nt.find(n);
                if (it == nt.end())
                    throw ParseError(at.line, at.column, "undeclared nonterminal '" + n + "'");
                expect(Tok::equals, "'='");
                Rational val = parseConstant(nt, k, "output value");
                if (!outputs.emplace(it->second, val).second)
                    throw ParseError(at.line, at.column, "duplicate output for '" + n + "'");
                if (peek().kind == Tok::comma) {
                    advance();
                    continue;
                }
                break;
            }
        }
        expect(Tok::rbrace, "'}'");
        if (outputs.size() != k)
            for (std::size_t i = 0; i < k; ++i)
                if (!outputs.count(i))
                    throw ParseError(outKw.line, outKw.column,
                                     "missing output for nonterminal '" + decl.nonterminals[i] + "'");

        // delta LETTER NT = POLY ...
        std::map<std::pair<std::size_t, std::size_t>, Polynomial> deltas;
        while (peekKeyword("delta")) {
            advance();
            const Token& lt = expect(Tok::ident, "a letter");
            auto li = letterIndex.find(lt.text);
            if (li == letterIndex.end())
                throw ParseError(lt.line, lt.column, "undeclared letter '" + lt.text + "'");
            const Token& ntTok = expect(Tok::ident, "a nonterminal");
            auto ni = nt.find(ntTok.text);
            if (ni == nt.end())
                throw ParseError(ntTok.line, ntTok.column, "undeclared nonterminal '" + ntTok.text + "'");
            expect(Tok::equals, "'='");
            Polynomial p = parsePoly(nt, k);
            if (!deltas.emplace(std::make_pair(li->second, ni->second), std::move(p)).second)
                throw ParseError(lt.line, lt.column,
                                 "duplicate delta for (" + lt.text + ", " + ntTok.text + ")");
        }
        const Token& close = expect(Tok::rbrace, "'}' or 'delta'");
        for (std::size_t a = 0; a < decl.letters.size(); ++a)
            for (std::size_t i = 0; i < k; ++i)
                if (!deltas.count({a, i}))
                    throw ParseError(close.line, close.column,
                                     "missing delta for (" + decl.letters[a] + ", " +
                                         decl.nonterminals[i] + ")");

        decl.automaton.modes = std::move(modes);
        decl.automaton.k = k;
        decl.automaton.delta.resize(decl.letters.size());
        for (std::size_t a = 0; a < decl.letters.size(); ++a) {
            decl.automaton.delta[a].reserve(k);
            for (std::size_t i = 0; i < k; ++i)
                decl.automaton.delta[a].push_back(deltas.at({a, i}));
        }
        decl.automaton.output.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
            decl.automaton.output.push_back(outputs.at(i));
        decl.automaton.validate();
        return decl;
    }

    SystemDecl parseSystem(bool isCda) {
        SystemDecl decl;
        decl.isCda = isCda;
        decl.name = parseName("definition name");
        expect(Tok::lbrace, "'{'");

        expectKeyword("dims");
        const Token& dimTok = expect(Tok::integer, "a dimension count");
        const std::size_t dims = static_cast<std::size_t>(std::stoull(dimTok.text));

        expectKeyword("unknowns");
        decl.unknowns = parseNameList("unknown");

        // non-autonomous sugar: `var x1` adjoins an unknown tracking the
        // coordinate named by its trailing digits (derivative 1 along that
        // coordinate, 0 along the others, initial value 0)
        std::map<std::size_t, std::size_t> varCoord;  // unknown index -> coordinate
        while (peekKeyword("var")) {
            const Token& kw = advance();
            if (!isCda)
                throw ParseError(kw.line, kw.column, "'var' is only available in cda definitions");
            const Token& vt = peek();
            std::string vn = parseName("coordinate variable");
            std::size_t digits = 0;
            while (digits < vn.size() &&
                   std::isdigit(static_cast<unsigned char>(vn[vn.size() - 1 - digits])))
                ++digits;
            if (digits == 0)
                throw ParseError(vt.line, vt.column,
                                 "coordinate variable '" + vn +
                                     "' must end in the coordinate number (e.g. x1)");
            const std::size_t coord = std::stoull(vn.substr(vn.size() - digits));
            if (coord < 1 || coord > dims)
                throw ParseError(vt.line, vt.column,
                                 "coordinate variable '" + vn + "' names coordinate " +
                                     std::to_string(coord) + ", but dims is " + std::to_string(dims));
            for (const std::string& u : decl.unknowns)
                if (u == vn)
                    throw ParseError(vt.line, vt.column, "'" + vn + "' is already an unknown");
            varCoord.emplace(decl.unknowns.size(), coord - 1);
            decl.unknowns.push_back(vn);
        }

        const std::size_t k = decl.unknowns.size();
        std::map<std::string, std::size_t> idx;
        for (std::size_t i = 0; i < k; ++i)
            idx.emplace(decl.unknowns[i], i);

        const Token& initKw = expectKeyword("init");
        expect(Tok::lbrace, "'{'");
        std::map<std::size_t, Rational> inits;
        if (peek().kind != Tok::rbrace) {
            while (true) {
                const Token& at = peek();
                std::string n = parseName("unknown");
                auto it = idx.find(n);
                if (it == idx.end())
                    throw ParseError(at.line, at.column, "undeclared unknown '" + n + "'");
                if (varCoord.count(it->second))
                    throw ParseError(at.line, at.column,
                                     "the initial value of coordinate variable '" + n + "' is fixed to 0");
                expect(Tok::equals, "'='");
                Rational val = parseConstant(idx, k, "initial value");
                if (!inits.emplace(it->second, val).second)
                    throw ParseError(at.line, at.column, "duplicate initial value for '" + n + "'");
                if (peek().kind == Tok::comma) {
                    advance();
                    continue;
                }
                break;
            }
        }
        expect(Tok::rbrace, "'}'");
        for (std::size_t i = 0; i < k; ++i)
            if (!varCoord.count(i) && !inits.count(i))
                throw ParseError(initKw.line, initKw.column,
                                 "missing initial value for unknown '" + decl.unknowns[i] + "'");

        // shift j f = POLY   (polyrec)       d j f = POLY   (cda)
        const std::string stmt = isCda ? "d" : "shift";
        std::map<std::pair<std::size_t, std::size_t>, Polynomial> shifts;
        while (peekKeyword(stmt)) {
            advance();
            const Token& jt = expect(Tok::integer, "a coordinate number");
            const std::size_t j = static_cast<std::size_t>(std::stoull(jt.text));
            if (j < 1 || j > dims)
                throw ParseError(jt.line, jt.column,
                                 "coordinate " + jt.text + " out of range 1.." + std::to_string(dims));
            const Token& ut = expect(Tok::ident, "an unknown");
            auto ui = idx.find(ut.text);
            if (ui == idx.end())
                throw ParseError(ut.line, ut.column, "undeclared unknown '" + ut.text + "'");
            if (varCoord.count(ui->second))
                throw ParseError(ut.line, ut.column,
                                 "the equations of coordinate variable '" + ut.text + "' are implicit");
            expect(Tok::equals, "'='");
            Polynomial p = parsePoly(idx, k);
            if (!shifts.emplace(std::make_pair(j - 1, ui->second), std::move(p)).second)
                throw ParseError(jt.line, jt.column,
                                 "duplicate equation for (" + jt.text + ", " + ut.text + ")");
        }
        const Token& close = expect(Tok::rbrace, isCda ? "'}' or 'd'" : "'}' or 'shift'");
        for (std::size_t j = 0; j < dims; ++j)
            for (std::size_t i = 0; i < k; ++i) {
                if (varCoord.count(i)) continue;
                if (!shifts.count({j, i}))
                    throw ParseError(close.line, close.column,
                                     "missing equation for (" + std::to_string(j + 1) + ", " +
                                         decl.unknowns[i] + ")");
            }

        decl.system.dims = dims;
        decl.system.unknowns = k;
        decl.system.shifts.resize(dims);
        for (std::size_t j = 0; j < dims; ++j) {
            decl.system.shifts[j].reserve(k);
            for (std::size_t i = 0; i < k; ++i) {
                auto vc = varCoord.find(i);
                if (vc != varCoord.end())
                    decl.system.shifts[j].push_back(
                        Polynomial::constant(j == vc->second ? 1 : 0, k));
                else
                    decl.system.shifts[j].push_back(shifts.at({j, i}));
            }
        }
        decl.system.init.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
            decl.system.init.push_back(varCoord.count(i) ? Rational(0) : inits.at(i));
        decl.system.validate();
        return decl;
    }

    // poly := term (('+'|'-') term)* ; term := factor ('*' factor)* ;
    // factor := '-' factor | base ('^' INT)? ; base := NUMBER | IDENT | '(' poly ')'
    Polynomial parsePoly(const std::map<std::string, std::size_t>& index, std::size_t arity) {
        Polynomial acc = parseTerm(index, arity);
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            bool minus = advance().kind == Tok::minus;
            Polynomial rhs = parseTerm(index, arity);
            acc = minus ? acc - rhs : acc + rhs;
        }
        return acc;
    }

    Polynomial parseTerm(const std::map<std::string, std::size_t>& index, std::size_t arity) {
        Polynomial acc = parseFactor(index, arity);
        while (peek().kind == Tok::star) {
            advance();
            acc = acc * parseFactor(index, arity);
        }
        return acc;
    }

    Polynomial parseFactor(const std::map<std::string, std::size_t>& index, std::size_t arity) {
        if (peek().kind == Tok::minus) {
            advance();
            return -parseFactor(index, arity);
        }
        Polynomial base = parseBase(index, arity);
        if (peek().kind == Tok::caret) {
            advance();
            const Token& e = advance();
            if (e.kind != Tok::integer)
                throw ParseError(e.line, e.column,
                                 "exponent must be a nonnegative integer literal");
            unsigned long long n = 0;
            try {
                n = std::stoull(e.text);
            } catch (const std::exception&) {
                throw ParseError(e.line, e.column, "exponent '" + e.text + "' is too large");
            }
            if (n > 1000000ULL)
                throw ParseError(e.line, e.column, "exponent '" + e.text + "' is too large");
            return base.pow(n);
        }
        return base;
    }

    Polynomial parseBase(const std::map<std::string, std::size_t>& index, std::size_t arity) {
        const Token& t = advance();
        switch (t.kind) {
            case Tok::integer: {
                std::string text = t.text;
                if (peek().kind == Tok::slash) {
                    advance();
                    const Token& den = expect(Tok::integer, "a denominator");
                    if (Rational::fromString(den.text).isZero())
                        throw ParseError(den.line, den.column, "denominator must be nonzero");
                    text += "/" + den.text;
                }
                return Polynomial::constant(Rational::fromString(text), arity);
            }
            case Tok::ident: {
                auto it = index.find(t.text);
                if (it == index.end())
                    throw ParseError(t.line, t.column, "undeclared symbol '" + t.text + "'");
                return Polynomial::variable(it->second, arity);
            }
            case Tok::lparen: {
                Polynomial p = parsePoly(index, arity);
                expect(Tok::rparen, "')'");
                return p;
            }
            default:
                throw ParseError(t.line, t.column,
                                 "expected a number, a symbol, or '(', found '" +
                                     (t.kind == Tok::end ? "end of input" : t.text) + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline Document parse(const std::string& text) {
    return detail::Parser(text).parseDocument();
}

// Polynomial over the given variable names, using the same grammar as the
// file format (used for --config command-line expressions).
inline Polynomial parsePolynomial(const std::string& text, const std::vector<std::string>& names) {
    return detail::Parser(text).parseExpression(names);
}

// Comma-separated letter names resolved against an alphabet, e.g. "a1,a2".
inline Word parseWord(const std::string& text, const std::vector<std::string>& letters) {
    Word w;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        // trim
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.erase(item.begin());
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.pop_back();
        if (!item.empty()) {
            auto it = std::find(letters.begin(), letters.end(), item);
            if (it == letters.end())
                throw std::runtime_error("unknown letter '" + item + "' in word");
            w.push_back(static_cast<Symbol>(it - letters.begin()));
        } else if (!text.empty() && !(start == 0 && comma == std::string::npos)) {
            throw std::runtime_error("empty letter in word '" + text + "'");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return w;
}

// Comma-separated nonnegative integers, e.g. "3,2".
inline std::vector<unsigned long long> parsePoint(const std::string& text) {
    std::vector<unsigned long long> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.erase(item.begin());
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.pop_back();
        if (item.empty())
            throw std::runtime_error("empty entry in point '" + text + "'");
        // std::stoull alone would accept sign prefixes (wrapping negatives) and
        // silently drop trailing characters such as "/2"; require plain digits.
        bool digitsOnly = true;
        for (char ch : item)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                digitsOnly = false;
        try {
            if (!digitsOnly)
                throw std::runtime_error("not a nonnegative integer");
            out.push_back(std::stoull(item));
        } catch (const std::exception&) {
            throw std::runtime_error("invalid coordinate '" + item + "' in point");
        }
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

// Comma-separated rationals, e.g. "-1,5/2".
inline std::vector<Rational> parseRationalList(const std::string& text) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string item = text.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.erase(item.begin());
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.pop_back();
        if (item.empty())
            throw std::runtime_error("empty entry in list '" + text + "'");
        out.push_back(Rational::fromString(item));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

// Definition lookup: an explicit name must exist; an empty name requires the
// document to contain exactly one definition of the requested kind.
inline const AutomatonDecl& resolveAutomaton(const Document& doc, const std::string& name) {
    if (name.empty()) {
        if (doc.automata.size() == 1)
            return doc.automata.front();
        throw std::runtime_error(doc.automata.empty()
                                     ? "no automaton definition in file"
                                     : "several automaton definitions; pick one with --name");
    }
    for (const AutomatonDecl& a : doc.automata)
        if (a.name == name)
            return a;
    throw std::runtime_error("no automaton named '" + name + "'");
}

inline const SystemDecl& resolveSystem(const Document& doc, const std::string& name, bool wantCda) {
    const char* kind = wantCda ? "cda" : "polyrec";
    std::vector<const SystemDecl*> matches;
    for (const SystemDecl& s : doc.systems)
        if (s.isCda == wantCda)
            matches.push_back(&s);
    if (name.empty()) {
        if (matches.size() == 1)
            return *matches.front();
        throw std::runtime_error(matches.empty()
                                     ? std::string("no ") + kind + " definition in file"
                                     : std::string("several ") + kind +
                                           " definitions; pick one with --name");
    }
    for (const SystemDecl* s : matches)
        if (s->name == name)
            return *s;
    throw std::runtime_error(std::string("no ") + kind + " definition named '" + name + "'");
}

} // namespace fsc
