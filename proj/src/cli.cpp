#include "magari4/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "magari4/algebra.hpp"
#include "magari4/closure.hpp"
#include "magari4/constants_engine.hpp"
#include "magari4/errors.hpp"
#include "magari4/formula.hpp"
#include "magari4/preservation.hpp"
#include "magari4/synthesis.hpp"
#include "magari4/system_io.hpp"

namespace magari4::cli {

namespace {

using json = nlohmann::json;

constexpr std::size_t kSynthesisArityCap = 4;
constexpr std::size_t kMaxPrintedTerm = 1'000'000;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

Valuation parse_env(const std::string& text) {
    Valuation v;
    for (const auto& binding : split(text, ',')) {
        const auto eq = binding.find('=');
        if (eq == std::string::npos) throw UsageError("--env expects name=value, got '" + binding + "'");
        const auto name = binding.substr(0, eq);
        if (name == "rho" || name == "sigma")
            throw UsageError("'" + name + "' is a reserved word, not a variable");
        if (!is_variable_name(name)) throw UsageError("not a variable name: '" + name + "'");
        v[name] = parse_element(binding.substr(eq + 1));
    }
    return v;
}

std::vector<std::string> sorted_vars(const Formula& f) {
    const auto vars = free_variables(f);
    return {vars.begin(), vars.end()};
}

/// A table argument (`1:ss11`) or a formula over its sorted free variables.
FuncTable table_argument(const std::string& text) {
    if (looks_like_table(text)) return FuncTable::parse(text);
    return truth_table(parse(text));
}

json table_json(const FuncTable& t) {
    return {{"arity", t.arity()}, {"entries", to_string(t.entries())}};
}

std::string valuation_text(const Valuation& v) {
    std::string out;
    for (const auto& [name, value] : v) {
        if (!out.empty()) out += ",";
        out += name + "=" + to_char(value);
    }
    return out;
}

std::string columns_text(const std::vector<Column>& cols) {
    std::string out;
    for (const auto& c : cols) {
        if (!out.empty()) out += " ";
        out += "(" + to_string(c) + ")";
    }
    return out;
}

struct Options {
    bool json = false;
    std::string formula;
    std::string formula2;
    std::string env;
    std::string vars;
    std::string table;
    std::string relation;
    std::string sigma;
    std::size_t arity = 1;
    bool simplify = false;
    bool no_expand = false;
};

CommandOutcome emit(const Options& o, const std::string& text, const json& j, int code = kSuccess) {
    return {code, (o.json ? j.dump() : text) + "\n", {}};
}

CommandOutcome cmd_eval(const Options& o) {
    const auto f = parse(o.formula);
    const auto v = evaluate(f, parse_env(o.env));
    return emit(o, to_string(v), {{"value", to_string(v)}});
}

CommandOutcome cmd_table(const Options& o) {
    const auto f = parse(o.formula);
    const auto vars = o.vars.empty() ? sorted_vars(f) : split(o.vars, ',');
    const auto t = truth_table(f, vars);
    return emit(o, t.to_string(), table_json(t));
}

CommandOutcome cmd_equiv(const Options& o) {
    const auto f = parse(o.formula);
    const auto g = parse(o.formula2);
    const auto v = distinguishing_valuation(f, g);
    if (!v) return emit(o, "equivalent", {{"equivalent", true}});
    const auto a = evaluate(f, *v);
    const auto b = evaluate(g, *v);
    json jv = json::object();
    for (const auto& [name, value] : *v) jv[name] = to_string(value);
    return emit(o,
                "not equivalent: " + valuation_text(*v) + " gives " + to_string(a) + " vs " +
                    to_string(b),
                {{"equivalent", false}, {"valuation", jv}, {"left", to_string(a)},
                 {"right", to_string(b)}},
                kNegative);
}

CommandOutcome cmd_classify(const Options& o) {
    const auto t = table_argument(o.formula);
    const auto classes = classify(t);
    const bool pairing = preserves_delta_pairing(t);
    std::string text = "preserves:";
    for (int i : classes) text += " R" + std::to_string(i);
    if (classes.empty()) text += " none";
    text += "\ndelta-pairing: ";
    text += pairing ? "yes" : "no";
    json j{{"table", t.to_string()}, {"preserves", classes}, {"delta_pairing", pairing}};
    if (auto idx = i_op_index(t)) {
        text += "\nI" + std::to_string(idx->i) + std::to_string(idx->j);
        j["i_op"] = {idx->i, idx->j};
    }
    return emit(o, text, j);
}

CommandOutcome cmd_violations(const Options& o) {
    const auto t = table_argument(o.formula);
    std::vector<RelationMatrix> relations;
    if (o.relation.empty()) {
        for (int i = 1; i <= 12; ++i) relations.push_back(builtin_relation(i));
    } else {
        relations.push_back(RelationMatrix::parse(o.relation));
    }
    std::string text;
    json arr = json::array();
    bool any = false;
    for (const auto& r : relations) {
        const std::string name = r.name().empty() ? r.to_string() : r.name();
        const auto w = find_violation(t, r);
        if (!text.empty()) text += "\n";
        if (w) {
            any = true;
            text += name + ": violated by " + columns_text(w->selected_columns) + " -> (" +
                    to_string(w->image) + ")";
            json cols = json::array();
            for (const auto& c : w->selected_columns) cols.push_back(to_string(c));
            arr.push_back({{"relation", name}, {"preserved", false}, {"columns", cols},
                           {"image", to_string(w->image)}});
        } else {
            text += name + ": preserved";
            arr.push_back({{"relation", name}, {"preserved", true}});
        }
    }
    return emit(o, text, {{"table", t.to_string()}, {"relations", arr}},
                any ? kNegative : kSuccess);
}

CommandOutcome cmd_synthesize(const Options& o) {
    const auto t = FuncTable::parse(o.table);
    if (t.arity() > kSynthesisArityCap)
        throw UsageError("synthesize is limited to arity " + std::to_string(kSynthesisArityCap));
    const auto vars = o.vars.empty() ? default_variables(t.arity()) : split(o.vars, ',');
    const auto f = synthesize(t, vars, {o.simplify});
    if (truth_table(f, vars) != t)
        throw InternalProofCheckFailed("synthesized formula does not realize " + t.to_string());
    const auto text = print(f);
    return emit(o, text, {{"formula", text}, {"table", table_json(t)}});
}

CommandOutcome cmd_closure(const Options& o) {
    const auto lines = parse_system(read_file(o.sigma));
    const auto sigma = to_sigma(lines);
    const auto fragment = closure_fragment(sigma, o.arity);
    const auto unary = o.arity == 1 ? fragment : closure_fragment(sigma, 1);
    json constants = json::array();
    for (Element c : kElements)
        if (unary.contains(FuncTable::constant(1, c))) constants.push_back(to_string(c));
    json j{{"arity", o.arity}, {"size", fragment.size()}, {"constants", constants}};
    return {kSuccess, j.dump() + "\n", {}};
}

json derivation_json(Element c, const Derivation& d, const TwelveSystem& sys, bool expand_term) {
    json trace = json::array();
    for (const auto& s : d.trace) trace.push_back({{"step", s.label}, {"claim", s.claim}});
    json j{{"constant", to_string(c)}};
    const auto expanded = expand(d.term, sys.formulas(), sys.variable_lists());
    if (expand_term && tree_size(expanded) <= kMaxPrintedTerm) {
        j["term"] = print(expanded);
    } else {
        j["term"] = nullptr;
    }
    j["composition"] = to_string(d.term, sys.labels());
    j["table"] = d.realized.to_string();
    j["verified"] = verify_derivation(d, sys);
    j["trace"] = trace;
    return j;
}

CommandOutcome cmd_derive_constants(const Options& o) {
    const auto sys = to_twelve_system(parse_system(read_file(o.sigma)));
    const auto derived = derive_all_constants(sys);
    json arr = json::array();
    bool ok = true;
    for (const auto& [c, d] : derived) {
        auto j = derivation_json(c, d, sys, !o.no_expand);
        ok = ok && j["verified"].get<bool>() && d.realized == FuncTable::constant(1, c);
        arr.push_back(std::move(j));
    }
    json oracle = json::array();
    for (Element c : expressible_constants(sys.sigma())) oracle.push_back(to_string(c));
    ok = ok && oracle.size() == 4;
    json out{{"constants", arr}, {"oracle", oracle}};
    return {ok ? kSuccess : kInternal, out.dump() + "\n", ok ? "" : "verification failed\n"};
}

struct Check {
    std::string name;
    bool ok;
};

std::vector<Check> selftest_checks() {
    std::vector<Check> out;
    auto add = [&](std::string name, auto&& fn) {
        bool ok = false;
        try {
            ok = fn();
        } catch (const std::exception&) {
            ok = false;
        }
        out.push_back({std::move(name), ok});
    };

    for (const auto& id : magari_identity_report())
        out.push_back({"Magari identity " + id.name, id.holds});
    for (const auto& ax : gl_axiom_report())
        out.push_back({"valid on the algebra: " + ax.name, ax.holds});
    add("GL4 axiom as a parsed formula is 1 on all 16 valuations", [] {
        const auto f = parse("##0 & (#(#p -> q) | #(#q -> p))");
        return truth_table(f, {"p", "q"}) == FuncTable::constant(2, Element::One);
    });

    add("exactly 64 of 256 unary tables preserve Delta x = Delta y", [] {
        int count = 0;
        for (std::size_t r = 0; r < 256; ++r) {
            auto t = FuncTable(1, tuple_of(r, 4));
            count += preserves_delta_pairing(t);
        }
        return count == 64;
    });
    add("the 64 synthesized unary formulas realize their tables and are pairwise inequivalent",
        [] {
            std::vector<Formula> fs;
            bool ok = true;
            for_each_delta_pairing_table(1, [&](const FuncTable& t) {
                auto f = synthesize(t, std::vector<std::string>{"p"});
                ok = ok && truth_table(f, std::vector<std::string>{"p"}) == t;
                fs.push_back(f);
            });
            for (std::size_t i = 0; i < fs.size(); ++i)
                for (std::size_t j = i + 1; j < fs.size(); ++j) ok = ok && !equivalent(fs[i], fs[j]);
            return ok && fs.size() == 64;
        });
    add("unary tables that break Delta x = Delta y are rejected by synthesis", [] {
        int rejected = 0;
        for (std::size_t r = 0; r < 256; ++r) {
            auto t = FuncTable(1, tuple_of(r, 4));
            if (preserves_delta_pairing(t)) continue;
            try {
                (void)synthesize(t);
            } catch (const NotRepresentable&) {
                ++rejected;
            }
        }
        return rejected == 192;
    });
    add("fixed points of I15 I18 I45 I48 I25 I28 I16 I46 are R3..R10, graph of I37 is R11", [] {
        const std::array<UnaryOpIndex, 8> ops{{{1, 5}, {1, 8}, {4, 5}, {4, 8}, {2, 5}, {2, 8}, {1, 6}, {4, 6}}};
        bool ok = true;
        for (std::size_t k = 0; k < ops.size(); ++k) {
            const auto t = i_op(ops[k]);
            std::vector<Column> fixed;
            for (Element x : kElements)
                if (t[code(x)] == x) fixed.push_back({x});
            const auto& r = builtin_relation(static_cast<int>(k) + 3);
            ok = ok && fixed.size() == r.columns().size();
            for (const auto& c : fixed) ok = ok && r.contains(c);
        }
        const auto i37 = i_op({3, 7});
        const auto& r11 = builtin_relation(11);
        for (Element x : kElements) ok = ok && r11.contains(std::vector<Element>{x, i37[code(x)]});
        return ok && r11.columns().size() == 4;
    });
    add("constants 0, r, s, 1 derived from the canned twelve-system and confirmed by closure", [] {
        const auto sys = to_twelve_system(parse_system(canned_system_text()));
        const auto derived = derive_all_constants(sys);
        bool ok = derived.size() == 4;
        for (const auto& [c, d] : derived)
            ok = ok && d.realized == FuncTable::constant(1, c) && verify_derivation(d, sys);
        return ok && expressible_constants(sys.sigma()).size() == 4;
    });
    return out;
}

CommandOutcome cmd_selftest(const Options& o) {
    const auto checks = selftest_checks();
    bool ok = true;
    std::string text;
    json arr = json::array();
    for (const auto& c : checks) {
        ok = ok && c.ok;
        text += std::string(c.ok ? "[ok]   " : "[FAIL] ") + c.name + "\n";
        arr.push_back({{"check", c.name}, {"ok", c.ok}});
    }
    text += ok ? "all checks passed" : "some checks FAILED";
    return emit(o, text, {{"checks", arr}, {"ok", ok}}, ok ? kSuccess : kInternal);
}

}  // namespace

std::string canned_system_text() {
    return "F1: #p\n"
           "F2: ~p\n"
           "F3: ~p\n"
           "F4: #p\n"
           "F5: p & q\n"
           "F6: ~#p\n"
           "F7: p -> q\n"
           "F8: #p | q\n"
           "F9: ~p\n"
           "F10: p & q\n"
           "F11: p & q\n"
           "F12: #p <-> #q\n";
}

CommandOutcome run(const std::vector<std::string>& args) {
    CLI::App app{"Formulas, tables and relations over the four-element Magari algebra", "magari4"};
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.json, "Print JSON instead of text");

    auto* eval = app.add_subcommand("eval", "Evaluate a formula under a valuation");
    eval->add_option("formula", o.formula)->required();
    eval->add_option("--env", o.env, "Valuation, e.g. p=0,q=s");

    auto* table = app.add_subcommand("table", "Truth table of a formula");
    table->add_option("formula", o.formula)->required();
    table->add_option("--vars", o.vars, "Variable order, e.g. p,q (default: sorted)");

    auto* eq = app.add_subcommand("equiv", "Decide equivalence of two formulas");
    eq->add_option("left", o.formula)->required();
    eq->add_option("right", o.formula2)->required();

    auto* cls = app.add_subcommand("classify", "Built-in relations preserved by a table or formula");
    cls->add_option("function", o.formula)->required();

    auto* vio = app.add_subcommand("violations", "Violation witnesses for built-in or given relations");
    vio->add_option("function", o.formula)->required();
    vio->add_option("--relation", o.relation, "R1..R12 or a matrix such as 0rs1;r01s");

    auto* syn = app.add_subcommand("synthesize", "A formula realizing a table");
    syn->add_option("--table", o.table, "Table, e.g. 1:ss11")->required();
    syn->add_option("--vars", o.vars, "Variable names, e.g. p,q");
    syn->add_flag("--simplify", o.simplify, "Leave out disjuncts whose value is 0");

    auto* clo = app.add_subcommand("closure", "Closure fragment of a system");
    clo->add_option("--sigma", o.sigma, "System file")->required();
    clo->add_option("--arity", o.arity, "Fragment arity 1..3")->check(CLI::Range(1, 3));

    auto* der = app.add_subcommand("derive-constants", "Derive 0, r, s, 1 from F1..F12");
    der->add_option("--sigma", o.sigma, "File with lines F1: <formula> ... F12: <formula>")->required();
    der->add_flag("--no-expand", o.no_expand, "Omit the expanded formula of each derivation");

    auto* self = app.add_subcommand("selftest", "Re-check the algebra's documented properties");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        return {kSuccess, app.help(), {}};
    } catch (const CLI::ParseError& e) {
        return {kUsage, {}, std::string(e.what()) + "\n" + app.help()};
    }

    try {
        if (eval->parsed()) return cmd_eval(o);
        if (table->parsed()) return cmd_table(o);
        if (eq->parsed()) return cmd_equiv(o);
        if (cls->parsed()) return cmd_classify(o);
        if (vio->parsed()) return cmd_violations(o);
        if (syn->parsed()) return cmd_synthesize(o);
        if (clo->parsed()) return cmd_closure(o);
        if (der->parsed()) return cmd_derive_constants(o);
        if (self->parsed()) return cmd_selftest(o);
    } catch (const NotRepresentable& e) {
        return {kNegative, {}, std::string("not representable: ") + e.what() + "\n"};
    } catch (const PreconditionViolated& e) {
        return {kNegative, {}, std::string("precondition violated: ") + e.what() + "\n"};
    } catch (const InternalProofCheckFailed& e) {
        return {kInternal, {}, std::string("internal check failed: ") + e.what() + "\n"};
    } catch (const std::exception& e) {
        return {kUsage, {}, std::string("error: ") + e.what() + "\n"};
    }
    return {kUsage, {}, app.help()};
}

}  // namespace magari4::cli
