#include "diffalg/parser.hpp"

#include <cctype>

namespace diffalg {

std::vector<std::string> default_names(const Ambient& amb) {
    if (amb.n == 1) return {"z"};
    if (amb.n == 2) return {"x", "y"};
    std::vector<std::string> names;
    for (uint32_t i = 1; i <= amb.n; ++i) names.push_back("z" + std::to_string(i));
    return names;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const Ambient& amb, const std::vector<std::string>& names,
           const Limits& lim)
        : text_(text), amb_(amb), names_(names), lim_(lim) {}

    DiffPolynomial run() {
        DiffPolynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return p;
    }

private:
    std::string_view text_;
    Ambient amb_;
    const std::vector<std::string>& names_;
    Limits lim_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    unsigned long long nat() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            fail("expected a number");
        unsigned long long v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = v * 10 + static_cast<unsigned long long>(text_[pos_] - '0');
            if (v > (1ull << 40)) fail("number too large");
            ++pos_;
        }
        return v;
    }

    DiffPolynomial expr() {
        bool negate = eat('-');
        DiffPolynomial p = term();
        if (negate) p = neg(p);
        while (true) {
            if (eat('+')) p = add(p, term());
            else if (eat('-')) p = sub(p, term());
            else break;
        }
        return p;
    }

    DiffPolynomial term() {
        bool negate = eat('-');
        DiffPolynomial p = factor();
        while (eat('*')) p = mul(p, factor(), lim_);
        return negate ? neg(p) : p;
    }

    DiffPolynomial factor() {
        DiffPolynomial p = primary();
        while (eat('^')) {
            unsigned long long e = nat();
            DiffPolynomial pow = DiffPolynomial::constant(amb_, Rational(1));
            for (unsigned long long k = 0; k < e; ++k) pow = mul(pow, p, lim_);
            p = pow;
        }
        return p;
    }

    DiffPolynomial primary() {
        char c = peek();
        if (c == '(') {
            eat('(');
            DiffPolynomial p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational();
        if (std::isalpha(static_cast<unsigned char>(c))) return var();
        fail("expected a rational, a variable or '('");
    }

    DiffPolynomial rational() {
        unsigned long long num = nat();
        std::string lit = std::to_string(num);
        {
            // Only a '/' directly forming a rational literal, e.g. "3/4".
            size_t save = pos_;
            if (eat('/')) {
                skip_ws();
                if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    unsigned long long den = nat();
                    if (den == 0) fail("zero denominator");
                    lit += "/" + std::to_string(den);
                } else {
                    pos_ = save;
                }
            }
        }
        return DiffPolynomial::constant(amb_, Rational::parse(lit));
    }

    DiffPolynomial var() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])))) ++pos_;
        std::string name(text_.substr(start, pos_ - start));
        uint32_t index = amb_.n;
        for (uint32_t i = 0; i < names_.size(); ++i)
            if (names_[i] == name) { index = i; break; }
        if (index >= amb_.n) {
            pos_ = start;
            fail("unknown variable '" + name + "'");
        }

        MultiIndex op(amb_.m);
        size_t save = pos_;
        if (eat('_')) {
            if (!eat('(')) { pos_ = save; fail("expected '(' after '_'"); }
            std::vector<uint32_t> entries;
            entries.push_back(static_cast<uint32_t>(nat()));
            while (eat(',')) entries.push_back(static_cast<uint32_t>(nat()));
            if (!eat(')')) fail("expected ')'");
            if (entries.size() != amb_.m)
                fail("multi-index has " + std::to_string(entries.size()) +
                     " entries, expected " + std::to_string(amb_.m));
            MultiIndex built(amb_.m);
            for (uint32_t i = 0; i < entries.size(); ++i)
                for (uint32_t k = 0; k < entries[i]; ++k) built = built.bumped(i);
            op = built;
        }
        return DiffPolynomial::generator(amb_, index, op);
    }
};

std::string multiindex_suffix(const MultiIndex& op) {
    if (op.is_zero()) return "";
    std::string s = "_(";
    for (uint32_t i = 0; i < op.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(op[i]);
    }
    s += ")";
    return s;
}

}  // namespace

DiffPolynomial parse_expression(std::string_view text, const Ambient& amb) {
    return parse_expression(text, amb, default_names(amb));
}

DiffPolynomial parse_expression(std::string_view text, const Ambient& amb,
                                const std::vector<std::string>& names,
                                const Limits& lim) {
    if (names.size() != amb.n) throw ParameterError("name table length mismatch");
    return Parser(text, amb, names, lim).run();
}

std::string to_string(const Monomial& mono, const std::vector<std::string>& names) {
    if (mono.is_unit()) return "1";
    std::string s;
    bool first = true;
    for (const auto& [v, e] : mono.factors()) {
        if (!first) s += "*";
        first = false;
        s += names.at(v.var) + multiindex_suffix(v.op);
        if (e > 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::string to_string(const DiffPolynomial& p, const std::vector<std::string>& names) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) s += "-";
        } else {
            s += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        if (mono.is_unit()) {
            s += a.str();
        } else {
            if (!a.is_one()) s += a.str() + "*";
            s += to_string(mono, names);
        }
    }
    return s;
}

std::string to_string(const DiffPolynomial& p) {
    return to_string(p, default_names(p.ambient()));
}

}  // namespace diffalg
