#include "nok/expr.hpp"

#include <cctype>
#include <sstream>

#include "nok/errors.hpp"

namespace nok {

namespace {

struct Parser {
    std::string_view text;
    std::string_view param;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw ParseError(std::string("expected ") + what, pos);
    }

    BigInt integer() {
        skip_ws();
        std::size_t begin = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == begin) throw ParseError("expected an integer", pos);
        return BigInt(std::string(text.substr(begin, pos - begin)));
    }

    std::string identifier() {
        skip_ws();
        std::size_t begin = pos;
        while (pos < text.size() &&
               (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
            ++pos;
        return std::string(text.substr(begin, pos - begin));
    }

    ParamPolynomial expr() {
        bool negate = accept('-');
        ParamPolynomial acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    ParamPolynomial term() {
        ParamPolynomial acc = factor();
        for (;;) {
            if (accept('*')) {
                acc *= factor();
            } else if (accept('/')) {
                std::size_t at = pos;
                BigInt d = integer();
                if (d == 0) throw ParseError("division by zero", at);
                acc = acc / Rational(d);
            } else {
                return acc;
            }
        }
    }

    ParamPolynomial factor() {
        ParamPolynomial b = base();
        if (accept('^')) {
            skip_ws();
            if (pos < text.size() && text[pos] == '-')
                throw ParseError("negative exponents are not allowed", pos);
            std::size_t at = pos;
            BigInt e = integer();
            if (e > 64) throw ParseError("exponent too large", at);
            return b.pow(e.convert_to<unsigned>());
        }
        return b;
    }

    ParamPolynomial base() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of expression", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            ParamPolynomial inner = expr();
            expect(')', "')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return ParamPolynomial::constant(Rational(integer()));
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t at = pos;
            std::string name = identifier();
            if (name == "t") return ParamPolynomial::t();
            if (name == param) return ParamPolynomial::param();
            throw ParseError("unknown identifier '" + name + "'", at);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos);
    }
};

void append_monomial(std::ostringstream& out, bool& first, const Rational& c, int s_deg,
                     int t_deg, std::string_view param) {
    Rational a = c.abs();
    if (first) {
        if (c.sign() < 0) out << '-';
        first = false;
    } else {
        out << (c.sign() < 0 ? " - " : " + ");
    }
    bool unit = (a == Rational(1));
    bool bare = (s_deg == 0 && t_deg == 0);
    if (!unit || bare) out << a.str();
    bool need_star = !unit || bare;
    if (s_deg > 0) {
        if (need_star) out << '*';
        out << param;
        if (s_deg > 1) out << '^' << s_deg;
        need_star = true;
    }
    if (t_deg > 0) {
        if (need_star) out << '*';
        out << 't';
        if (t_deg > 1) out << '^' << t_deg;
    }
}

} // namespace

ParamPolynomial parse_expr(std::string_view text, std::string_view param_name) {
    Parser p{text, param_name};
    ParamPolynomial result = p.expr();
    if (!p.at_end()) throw ParseError("trailing characters in expression", p.pos);
    return result;
}

std::string expr_to_string(const ParamPolynomial& p, std::string_view param_name) {
    if (p.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = p.degree_t(); k >= 0; --k) {
        const Polynomial& coeff = p.coeff(static_cast<std::size_t>(k));
        for (int j = coeff.degree(); j >= 0; --j) {
            const Rational& c = coeff.coeff(static_cast<std::size_t>(j));
            if (c.is_zero()) continue;
            append_monomial(out, first, c, j, k, param_name);
        }
    }
    return out.str();
}

} // namespace nok
