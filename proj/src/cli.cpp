#include "diffalg/cli.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "diffalg/amalgam.hpp"
#include "diffalg/parser.hpp"
#include "diffalg/reduction.hpp"

namespace diffalg {

namespace {

std::string trim(std::string_view s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

bool skippable(const std::string& line) {
    std::string t = trim(line);
    return t.empty() || t[0] == '#';
}

Endomorphism parse_pair_line(const CliConfig& cfg, const std::string& line, size_t lineno) {
    std::string t = trim(line);
    auto describe = [&](const std::string& what) {
        return "line " + std::to_string(lineno) + ": " + what;
    };
    if (t.rfind("fx=", 0) != 0) throw ParameterError(describe("expected 'fx=<expr> fy=<expr>'"));
    size_t fy = t.find("fy=", 3);
    if (fy == std::string::npos) throw ParameterError(describe("missing 'fy='"));
    Ambient amb{2, cfg.m};
    try {
        DiffPolynomial px = parse_expression(trim(t.substr(3, fy - 3)), amb);
        DiffPolynomial py = parse_expression(trim(t.substr(fy + 3)), amb);
        return Endomorphism(std::move(px), std::move(py));
    } catch (const ParseError& e) {
        throw ParameterError(describe(e.what()));
    }
}

ElementaryAuto parse_elementary_line(const CliConfig& cfg, const std::string& line,
                                     size_t lineno) {
    std::string t = trim(line);
    auto describe = [&](const std::string& what) {
        return "line " + std::to_string(lineno) + ": " + what;
    };
    int axis;
    if (t.rfind("E1", 0) == 0) axis = 1;
    else if (t.rfind("E2", 0) == 0) axis = 2;
    else throw ParameterError(describe("expected 'E1 a=<rat> f=<expr>' or 'E2 a=<rat> g=<expr>'"));

    size_t apos = t.find("a=");
    if (apos == std::string::npos) throw ParameterError(describe("missing 'a='"));
    const char* shift_key = axis == 1 ? "f=" : "g=";
    size_t spos = t.find(shift_key, apos);
    if (spos == std::string::npos)
        throw ParameterError(describe(std::string("missing '") + shift_key + "'"));

    Rational a = Rational::parse(trim(t.substr(apos + 2, spos - apos - 2)));
    std::vector<std::string> name{axis == 1 ? "y" : "x"};
    try {
        DiffPolynomial shift =
            parse_expression(trim(t.substr(spos + 2)), Ambient{1, cfg.m}, name);
        return ElementaryAuto(axis, std::move(a), std::move(shift));
    } catch (const ParseError& e) {
        throw ParameterError(describe(e.what()));
    }
}

std::string print_pair(const Endomorphism& e) {
    return "fx=" + to_string(e.fx()) + "\nfy=" + to_string(e.fy()) + "\n";
}

}  // namespace

std::string cmd_eval(const CliConfig& cfg, std::string_view expr) {
    Ambient amb{2, cfg.m};
    DiffPolynomial p = parse_expression(expr, amb, default_names(amb), cfg.limits());
    return to_string(p) + "\n";
}

std::string cmd_compose(const CliConfig& cfg, std::istream& pairs) {
    Limits lim = cfg.limits();
    Endomorphism acc = Endomorphism::identity(cfg.m);
    std::string line;
    size_t lineno = 0;
    while (std::getline(pairs, line)) {
        ++lineno;
        if (skippable(line)) continue;
        acc = compose(acc, parse_pair_line(cfg, line, lineno), lim);
    }
    return print_pair(acc);
}

std::string cmd_normalize(const CliConfig& cfg, std::istream& word) {
    Limits lim = cfg.limits();
    ElementaryWord w;
    std::string line;
    size_t lineno = 0;
    while (std::getline(word, line)) {
        ++lineno;
        if (skippable(line)) continue;
        w.push_back(parse_elementary_line(cfg, line, lineno));
    }

    std::string out;
    if (cfg.verbose) {
        for (size_t i = 1; i <= w.size(); ++i) {
            ElementaryWord prefix(w.begin(), w.begin() + static_cast<long>(i));
            out += "-- after factor " + std::to_string(i) + " --\n";
            out += dump(normalize(prefix, cfg.m, lim));
        }
    }

    NormalForm nf = normalize(w, cfg.m, lim);
    Endomorphism value = evaluate(nf, lim);
    if (!(value == compose_word(w, cfg.m, lim)))
        throw Error("normal form evaluation disagrees with direct composition");
    out += dump(nf);
    out += print_pair(value);
    return out;
}

std::string cmd_reduce(const CliConfig& cfg, std::string_view fx, std::string_view fy) {
    Limits lim = cfg.limits();
    Ambient amb{2, cfg.m};
    Endomorphism phi(parse_expression(fx, amb), parse_expression(fy, amb));
    if (phi.fx().is_zero() || phi.fy().is_zero())
        throw ParameterError("components must be nonzero");

    TamenessVerdict v = decide_tame(phi, lim);
    std::string out;
    switch (v.kind) {
        case Tameness::affine:
            out += "verdict: AFFINE\n";
            break;
        case Tameness::tame: {
            out += "verdict: TAME\n";
            Endomorphism cur = phi;
            for (const auto& s : v.steps) {
                out += "step axis=" + std::to_string(s.axis) + " degree " +
                       std::to_string(s.degree_before) + " -> " +
                       std::to_string(s.degree_after) + " G=" + to_string(s.g) + "\n";
                if (cfg.verbose) {
                    const DiffPolynomial& fj = s.axis == 1 ? cur.fy() : cur.fx();
                    DiffPolynomial fi = s.axis == 1 ? cur.fx() : cur.fy();
                    fi = sub(fi, substitute(s.g, {fj}, lim));
                    cur = s.axis == 1 ? Endomorphism(fi, cur.fy()) : Endomorphism(cur.fx(), fi);
                    out += print_pair(cur);
                }
            }
            break;
        }
        case Tameness::irreducible: {
            out += "verdict: IRREDUCIBLE\n";
            out += "stuck fx=" + to_string(v.stuck->fx()) + "\n";
            out += "stuck fy=" + to_string(v.stuck->fy()) + "\n";
            for (const auto& q : v.failed_queries)
                out += "query axis=" + std::to_string(q.axis) + " u=" + to_string(q.u) +
                       " h=" + to_string(q.h) + " -> " + (q.found ? "FOUND" : "ABSENT") + "\n";
            break;
        }
    }
    out += std::string("automorphism_status: ") +
           (v.status == AutoStatus::verified ? "verified" : "unverified") + "\n";
    return out;
}

std::string cmd_membership(const CliConfig& cfg, std::string_view u, std::string_view h) {
    Limits lim = cfg.limits();
    Ambient amb{2, cfg.m};
    MembershipSolution sol =
        hom_membership(parse_expression(u, amb), parse_expression(h, amb), lim);
    if (!sol.found()) return "ABSENT\n";
    return to_string(*sol.g) + "\n";
}

std::string cmd_anick(const CliConfig& cfg) {
    Limits lim = cfg.limits();
    WildCertificate cert = certify_wild_anick(cfg.m, lim);
    return to_text(cert) + "WILD (certified)\n";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computation in the differential polynomial algebra k{x,y}"};
    app.require_subcommand(1);

    CliConfig cfg;
    app.add_option("-m,--derivations", cfg.m, "number of commuting derivations")
        ->envname("DIFFAUTO_M")
        ->capture_default_str();
    app.add_option("--max-degree", cfg.max_degree, "degree cap on products and substitutions")
        ->capture_default_str();
    app.add_option("--max-candidates", cfg.max_candidates,
                   "cap on membership candidate monomials")
        ->capture_default_str();
    app.add_flag("--verbose", cfg.verbose, "print intermediate states");

    std::string expr, fx, fy, u, h, path;
    auto* c_eval = app.add_subcommand("eval", "canonical form of an expression");
    c_eval->add_option("expr", expr, "expression")->required();
    auto* c_compose = app.add_subcommand("compose", "compose a file of endomorphism pairs");
    c_compose->add_option("file", path, "file of 'fx=<expr> fy=<expr>' lines")->required();
    auto* c_normalize =
        app.add_subcommand("normalize", "normal form of an elementary word file");
    c_normalize->add_option("file", path, "file of 'E1 a=.. f=..' / 'E2 a=.. g=..' lines")
        ->required();
    auto* c_reduce = app.add_subcommand("reduce", "elementary reduction verdict for a pair");
    c_reduce->add_option("fx", fx, "image of x")->required();
    c_reduce->add_option("fy", fy, "image of y")->required();
    auto* c_membership =
        app.add_subcommand("membership", "certificate for u in the subalgebra generated by h");
    c_membership->add_option("u", u, "homogeneous element")->required();
    c_membership->add_option("h", h, "homogeneous generator")->required();
    auto* c_anick = app.add_subcommand("anick", "construct and certify the wild candidate pair");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (c_eval->parsed()) {
            out << cmd_eval(cfg, expr);
        } else if (c_compose->parsed() || c_normalize->parsed()) {
            std::ifstream file(path);
            if (!file) throw ParameterError("cannot open input file '" + path + "'");
            out << (c_compose->parsed() ? cmd_compose(cfg, file) : cmd_normalize(cfg, file));
        } else if (c_reduce->parsed()) {
            out << cmd_reduce(cfg, fx, fy);
        } else if (c_membership->parsed()) {
            out << cmd_membership(cfg, u, h);
        } else if (c_anick->parsed()) {
            out << cmd_anick(cfg);
        }
        return 0;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CertificationError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.push_back("diffauto");
    for (const auto& a : args) argv.push_back(a.c_str());
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace diffalg
