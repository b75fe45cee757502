// Command-line front end: parses the automaton/polyrec/cda text format and
// dispatches to the decision procedures.  Exit codes: 0 = property holds
// (or informational command succeeded), 1 = property fails (witness
// printed), 2 = error, 3 = unknown (variety depth budget exhausted).

#include <fsc/fsc.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using json = nlohmann::json;
using namespace fsc;

namespace {

struct Options {
    std::string file;
    std::string name;
    std::string name2;
    std::string config;
    std::string config2;
    std::string word;
    std::string point;
    std::string unknown;
    std::string varietyMode;
    std::string outputValues;
    std::string convertTarget;
    std::size_t len = 0;
    std::size_t depth = 6;
    std::size_t coord = 0;
    std::size_t coord2 = 0;
    unsigned long long value = 0;
    bool allowInconsistentEval = false;
    bool jsonOut = false;
};

std::string readFile(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string wordToText(const Word& w, const std::vector<std::string>& letters) {
    if (w.empty())
        return "eps";
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) s += " ";
        s += letters[w[i]];
    }
    return s;
}

json wordToJson(const Word& w, const std::vector<std::string>& letters) {
    json arr = json::array();
    for (Symbol a : w)
        arr.push_back(letters[a]);
    return arr;
}

json witnessToJson(const DecisionWitness& w, const std::vector<std::string>& letters) {
    return json{{"left", wordToJson(w.left, letters)},
                {"right", wordToJson(w.right, letters)},
                {"leftValue", w.leftValue.toString()},
                {"rightValue", w.rightValue.toString()}};
}

std::string witnessToText(const DecisionWitness& w, const std::vector<std::string>& letters) {
    return wordToText(w.left, letters) + " -> " + w.leftValue.toString() + ", " +
           wordToText(w.right, letters) + " -> " + w.rightValue.toString();
}

std::vector<std::string> coordinateLetters(std::size_t dims) {
    std::vector<std::string> names;
    names.reserve(dims);
    for (std::size_t j = 1; j <= dims; ++j)
        names.push_back("a" + std::to_string(j));
    return names;
}

Polynomial configOf(const AutomatonDecl& decl, const std::string& text) {
    if (text.empty()) {
        if (decl.nonterminals.empty())
            throw std::runtime_error("automaton has no nonterminals; pass --config");
        return Polynomial::variable(0, decl.automaton.k);
    }
    return parsePolynomial(text, decl.nonterminals);
}

class Reporter {
public:
    Reporter(std::string command, bool jsonOut) : jsonOut_(jsonOut) {
        doc_["command"] = std::move(command);
        start_ = std::chrono::steady_clock::now();
    }

    void name(const std::string& n) { doc_["name"] = n; }
    void set(const std::string& key, json v) { doc_[key] = std::move(v); }

    void line(const std::string& text) {
        if (!jsonOut_)
            std::cout << text << "\n";
    }
    // payload lines are emitted even in text mode when timing is suppressed
    void payload(const std::string& text) {
        if (!jsonOut_)
            std::cout << text;
    }

    int finish(int code, bool withTimeLine = true) {
        auto elapsed = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start_)
                           .count();
        doc_["timeMs"] = elapsed;
        if (jsonOut_) {
            std::cout << doc_.dump(2) << "\n";
        } else if (withTimeLine) {
            std::cout << "time: " << elapsed << " ms\n";
        }
        return code;
    }

private:
    json doc_ = json::object();
    bool jsonOut_ = false;
    std::chrono::steady_clock::time_point start_;
};

int reportVerdict(Reporter& rep, const Verdict& v, const std::vector<std::string>& letters,
                  const std::string& holdsText, const std::string& failsText) {
    rep.set("verdict", v.holds ? "holds" : "fails");
    rep.set("stabilizationIndex", v.stabilizationIndex);
    rep.line("verdict: " + (v.holds ? holdsText : failsText));
    if (v.witness) {
        rep.set("witness", witnessToJson(*v.witness, letters));
        rep.line("witness: " + witnessToText(*v.witness, letters));
    }
    rep.line("stabilization index: " + std::to_string(v.stabilizationIndex));
    return rep.finish(v.holds ? 0 : 1);
}

int cmdCheckZero(const Options& opt) {
    Reporter rep("check-zero", opt.jsonOut);
    Document doc = parse(readFile(opt.file));
    const AutomatonDecl& a = resolveAutomaton(doc, opt.name);
    rep.name(a.name);
    Verdict v = zeroness(a.automaton, configOf(a, opt.config));
    return reportVerdict(rep, v, a.letters, "zero", "nonzero");
}

int cmdCheckEqual(const Options& opt) {
    Reporter rep("check-equal", opt.jsonOut);
    Document doc = parse(readFile(opt.file));
    const AutomatonDecl& a = resolveAutomaton(doc, opt.name);
    const AutomatonDecl& b = resolveAutomaton(doc, opt.name2.empty() ? a.name : opt.name2);
    rep.name(a.name);
    Verdict v = equality(a.automaton, configOf(a, opt.config), b.automaton,
                         configOf(b, opt.config2));
    return reportVerdict(rep, v, a.letters, "equal", "not equal");
}

int cmdCheckCommutative(const Options& opt) {
    Reporter rep("check-commutative", opt.jsonOut);
    Document doc = parse(readFile(opt.file));
    const AutomatonDecl& a = resolveAutomaton(doc, opt.name);
    rep.name(a.name);
    Verdict v = commutativity(a.automaton, configOf(a, opt.config));
    return reportVerdict(rep, v, a.letters, "commutative", "not commutative");
}

int cmdCoeff(const Options& opt) {
    Reporter rep("coeff", opt.jsonOut);
    Document doc = parse(readFile(opt.file));
    const AutomatonDecl& a = resolveAutomaton(doc, opt.name);
    rep.name(a.name);
    Word w = parseWord(opt.word, a.letters);
    Rational c = coefficient(a.automaton, configOf(a, opt.config), w);
    rep.set("value", c.toString());
    rep.line(wordToText(w, a.letters) + " -> " + c.toString());
    return rep.finish(0);
}

int cmdTruncate(const Options& opt) {
    Reporter rep("truncate", opt.jsonOut);
    Document doc = parse(readFile(opt.file));
    const AutomatonDecl& a = resolveAutomaton(doc, opt.name);
    rep.name(a.name);
    TruncatedSeries t = truncate(a.automaton, configOf(a, opt.config), opt.len);
    json arr = json::array();
    for (const auto& [w, c] : t.entries()) {
        arr.push_back(json{{"word", wordToJson(w, a.letters)}, {"value", c.toString()}});
        rep.line(wordToText(w, a.letters) + " -> " + c.toString());
    }
    if (t.entries().empty())
        rep.line("all coefficients up to length " + std::to_string(opt.len) + " are 0");
    rep.set("coefficients", arr);
    return rep.finish(0);
}

int reportSystemVerdict(Reporter& rep, const SystemVerdict& v,
                        const std::vector<std::string>& unknowns, std::size_t dims,
                        const std::string& holdsText, const std::string& failsText) {
    rep.set("verdict", v.holds ? "holds" : "fails");
    rep.set("stabilizationIndex", v.stabilizationIndex);
    rep.line("verdict: " + (v.holds ? holdsText : failsText));
    if (v.failingUnknown) {
        rep.set("failingUnknown", unknowns[*v.failingUnknown]);
        rep.line("failing unknown: " + unknowns[*v.failingUnknown]);
    }
    if (v.witness) {
        const std::vector<std::string> letters = coordinateLetters(dims);
        rep.set("witness", witnessToJson(*v.witness, letters));
        rep.line("witness paths: " + witnessToText(*v.witness, letters));
    }
    rep.line("stabilization index: " + std::to_string(v.stabilizationIndex));
    return rep.finish(v.holds ? 0 : 1);
}

int cmdPolyrecConsistent(const Options& opt) {
    Reporter rep("polyrec-consistent", opt.jsonOut);
    Document doc = parse(readFile(opt.file));
    const SystemDecl& s = resolveSystem(doc, opt.name, /*wantCda=*/false);
    rep.name(s.name);
    SystemVerdict v = polyrecConsistent(s.system);
    return reportSystemVerdict(rep, v, s.unknowns, s.system.dims, "consistent", "inconsistent");
}

int cmdCdaSolvable(const Options& opt) {
    Reporter rep("cda-solvable", opt.jsonOut);
    Document doc = parse(readFile(opt.file));
    const SystemDecl& s = resolveSystem(doc, opt.name, /*wantCda=*/true);
    rep.name(s.name);
    SystemVerdict v = cdaSolvable(s.asCda());
    return reportSystemVerdict(rep, v, s.unknowns, s.system.dims, "solvable", "unsolvable");
}

const SystemDecl& resolveAnySystem(const Document& doc, const std::string& name) {
    if (name.empty()) {
        if (doc.systems.size() == 1)
            return doc.systems.front();
        throw std::runtime_error(doc.systems.empty()
                                     ? "no system definition in file"
                                     : "several system definitions; pick one with --name");
    }
    for (const SystemDecl& s : doc.systems)
        if (s.name == name)
            return s;
    throw std::runtime_error("no system named '" + name + "'");
}

int cmdEval(const Options& opt) {
    Reporter rep("eval", opt.jsonOut);
    Document doc = parse(readFile(opt.file));
    const SystemDecl& s = resolveAnySystem(doc, opt.name);
    rep.name(s.name);
    std::size_t unknown = 0;
    if (!opt.unknown.empty()) {
        auto it = std::find(s.unknowns.begin(), s.unknowns.end(), opt.unknown);
        if (it == s.unknowns.end())
            throw std::runtime_error("no unknown named '" + opt.unknown + "'");
        unknown = static_cast<std::size_t>(it - s.unknowns.begin());
    }
    std::vector<unsigned long long> point = parsePoint(opt.point);
    Rational v = s.isCda
                     ? taylorCoefficient(s.asCda(), point, unknown, opt.allowInconsistentEval)
                     : evaluatePoint(s.system, point, unknown, opt.allowInconsistentEval);
    rep.set("value", v.toString());
    std::string pt;
    for (std::size_t i = 0; i < point.size(); ++i)
        pt += (i ? "," : "") + std::to_string(point[i]);
    rep.line(s.unknowns[unknown] + "(" + pt + ") = " + v.toString() +
             (s.isCda ? "   (divided-power Taylor coefficient)" : ""));
    return rep.finish(0);
}

int cmdSection(const Options& opt) {
    Reporter rep("section", opt.jsonOut);
    Document doc = parse(readFile(opt.file));
    const SystemDecl& s = resolveSystem(doc, opt.name, /*wantCda=*/false);
    rep.name(s.name);
    if (opt.coord < 1 || opt.coord > s.system.dims)
        throw std::runtime_error("--coord out of range 1.." + std::to_string(s.system.dims));
    SystemDecl out;
    out.isCda = false;
    out.name = s.name + "_section";
    out.unknowns = s.unknowns;
    out.system = section(s.system, opt.coord - 1, opt.value);
    std::string text = printSystem(out);
    rep.set("text", text);
    rep.payload(text);
    return rep.finish(0, /*withTimeLine=*/false);
}

int cmdDiagonal(const Options& opt) {
    Reporter rep("diagonal", opt.jsonOut);
    Document doc = parse(readFile(opt.file));
    const SystemDecl& s = resolveSystem(doc, opt.name, /*wantCda=*/false);
    rep.name(s.name);
    if (opt.coord < 1 || opt.coord > s.system.dims || opt.coord2 < 1 ||
        opt.coord2 > s.system.dims)
        throw std::runtime_error("--coord/--coord2 out of range 1.." +
                                 std::to_string(s.system.dims));
    SystemDecl out;
    out.isCda = false;
    out.name = s.name + "_diagonal";
    out.unknowns = s.unknowns;
    out.system = diagonal(s.system, opt.coord - 1, opt.coord2 - 1);
    std::string text = printSystem(out);
    rep.set("text", text);
    rep.payload(text);
    return rep.finish(0, /*withTimeLine=*/false);
}

int cmdVariety(const Options& opt) {
    Reporter rep("variety", opt.jsonOut);
    Document doc = parse(readFile(opt.file));
    const AutomatonDecl& a = resolveAutomaton(doc, opt.name);
    rep.name(a.name);
    Polynomial cfg = configOf(a, opt.config);

    Tri t;
    if (opt.varietyMode == "exists") {
        t = existsCommutativeOutput(a.automaton, cfg, opt.depth);
    } else if (opt.varietyMode == "forall") {
        t = allOutputsCommutative(a.automaton, cfg, opt.depth);
    } else if (opt.varietyMode == "member") {
        if (opt.outputValues.empty())
            throw std::runtime_error("--mode member requires --output with one rational per nonterminal");
        t = outputMembership(a.automaton, cfg, parseRationalList(opt.outputValues), opt.depth);
    } else {
        throw std::runtime_error("--mode must be exists, forall, or member");
    }

    StabilizationResult sr = stabilize(a.automaton, cfg, opt.depth);
    json basis = json::array();
    for (const Polynomial& g : sr.ideal.gb.generators)
        basis.push_back(g.toString(a.nonterminals));
    rep.set("basis", basis);
    rep.set("depth", sr.index);
    rep.set("verdict", t == Tri::yes ? "holds" : t == Tri::no ? "fails" : "unknown");
    rep.set("stabilizationIndex", sr.index);

    rep.line("verdict: " + std::string(t == Tri::yes ? "yes" : t == Tri::no ? "no" : "unknown"));
    rep.line(sr.stabilized ? "stabilization index: " + std::to_string(sr.index)
                           : "not stabilized within depth " + std::to_string(opt.depth));
    std::string basisText = "constraint basis:";
    if (sr.ideal.gb.generators.empty())
        basisText += " (zero ideal)";
    for (const Polynomial& g : sr.ideal.gb.generators)
        basisText += " " + g.toString(a.nonterminals) + ";";
    rep.line(basisText);
    return rep.finish(t == Tri::yes ? 0 : t == Tri::no ? 1 : 3);
}

int cmdConvert(const Options& opt) {
    Reporter rep("convert", opt.jsonOut);
    if (opt.convertTarget != "polynomial-automaton")
        throw std::runtime_error("--to must be polynomial-automaton");
    Document doc = parse(readFile(opt.file));
    const AutomatonDecl& a = resolveAutomaton(doc, opt.name);
    rep.name(a.name);
    PolynomialAutomaton P = toPolynomialAutomaton(a.automaton, configOf(a, opt.config));
    std::ostringstream os;
    os << "polynomial-automaton " << a.name << " {\n";
    os << "  registers { ";
    for (std::size_t i = 0; i < a.nonterminals.size(); ++i)
        os << (i ? ", " : "") << a.nonterminals[i];
    os << " }\n  initial { ";
    for (std::size_t i = 0; i < a.nonterminals.size(); ++i)
        os << (i ? ", " : "") << a.nonterminals[i] << " = " << P.initial[i].toString();
    os << " }\n";
    for (std::size_t l = 0; l < a.letters.size(); ++l)
        for (std::size_t i = 0; i < a.nonterminals.size(); ++i)
            os << "  update " << a.letters[l] << " " << a.nonterminals[i] << " = "
               << P.updates[l][i].toString(a.nonterminals) << "\n";
    os << "  output = " << P.outputPoly.toString(a.nonterminals) << "\n";
    os << "}\n";
    os << "# value on a word equals the original coefficient at the reversed word\n";
    std::string text = os.str();
    rep.set("text", text);
    rep.payload(text);
    return rep.finish(0, /*withTimeLine=*/false);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact decision procedures for formal power series presented by "
                 "polynomial automata (Hadamard / shuffle / infiltration letters), "
                 "with applications to difference and differential systems"};
    app.require_subcommand(1);

    Options opt;
    int (*handler)(const Options&) = nullptr;

    auto common = [&](CLI::App* sub, bool withConfig = true) {
        sub->add_option("file", opt.file, "input definition file")->required();
        sub->add_option("--name", opt.name, "definition to use (default: the only one)");
        if (withConfig)
            sub->add_option("--config", opt.config,
                            "configuration polynomial over the nonterminals "
                            "(default: the first nonterminal)");
        sub->add_flag("--json", opt.jsonOut, "machine-readable output");
    };

    auto* zero = app.add_subcommand("check-zero", "is the configured series zero?");
    common(zero);
    zero->callback([&] { handler = cmdCheckZero; });

    auto* equal = app.add_subcommand("check-equal", "are two configured series equal?");
    common(equal);
    equal->add_option("--name2", opt.name2, "second automaton (default: same as --name)");
    equal->add_option("--config2", opt.config2, "second configuration polynomial");
    equal->callback([&] { handler = cmdCheckEqual; });

    auto* comm = app.add_subcommand("check-commutative", "is the configured series commutative?");
    common(comm);
    comm->callback([&] { handler = cmdCheckCommutative; });

    auto* coeff = app.add_subcommand("coeff", "coefficient of one word");
    common(coeff);
    coeff->add_option("--word", opt.word, "comma-separated letters, e.g. a1,a2 (empty = eps)")
        ->required();
    coeff->callback([&] { handler = cmdCoeff; });

    auto* trunc = app.add_subcommand("truncate", "all nonzero coefficients up to a length");
    common(trunc);
    trunc->add_option("--len", opt.len, "maximum word length")->required();
    trunc->callback([&] { handler = cmdTruncate; });

    auto* pc = app.add_subcommand("polyrec-consistent",
                                  "does the difference system extend to a solution?");
    common(pc, /*withConfig=*/false);
    pc->callback([&] { handler = cmdPolyrecConsistent; });

    auto* cs = app.add_subcommand("cda-solvable",
                                  "does the differential system have a power-series solution?");
    common(cs, /*withConfig=*/false);
    cs->callback([&] { handler = cmdCdaSolvable; });

    auto* ev = app.add_subcommand("eval",
                                  "value (polyrec) or divided-power Taylor coefficient (cda) "
                                  "at a lattice point");
    common(ev, /*withConfig=*/false);
    ev->add_option("--point", opt.point, "comma-separated coordinates, e.g. 2,2")->required();
    ev->add_option("--unknown", opt.unknown, "unknown to evaluate (default: the first)");
    ev->add_flag("--allow-inconsistent-eval", opt.allowInconsistentEval,
                 "evaluate along the canonical path even if the system is inconsistent");
    ev->callback([&] { handler = cmdEval; });

    auto* sec = app.add_subcommand("section", "fix one coordinate of a polyrec system");
    common(sec, /*withConfig=*/false);
    sec->add_option("--coord", opt.coord, "coordinate to fix (1-based)")->required();
    sec->add_option("--value", opt.value, "value to fix it to")->required();
    sec->callback([&] { handler = cmdSection; });

    auto* diag = app.add_subcommand("diagonal", "identify two coordinates of a polyrec system");
    common(diag, /*withConfig=*/false);
    diag->add_option("--coord", opt.coord, "first coordinate (1-based)")->required();
    diag->add_option("--coord2", opt.coord2, "second coordinate (must be larger)")->required();
    diag->callback([&] { handler = cmdDiagonal; });

    auto* var = app.add_subcommand("variety",
                                   "commutativity constraints with the output left symbolic");
    common(var);
    var->add_option("--mode", opt.varietyMode, "exists | forall | member")->required();
    var->add_option("--depth", opt.depth, "stabilization depth budget (default 6)");
    var->add_option("--output", opt.outputValues,
                    "rational output vector for --mode member, e.g. -1 or 0,1");
    var->callback([&] { handler = cmdVariety; });

    auto* conv = app.add_subcommand("convert", "re-present as a register machine");
    common(conv);
    conv->add_option("--to", opt.convertTarget, "target: polynomial-automaton")->required();
    conv->callback([&] { handler = cmdConvert; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        return handler(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
