#include "parse.hpp"
#include "errors.hpp"

#include <cctype>

namespace stubborn {

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    const std::vector<std::string>& vars;
    int nv;

    Parser(const std::string& text, const std::vector<std::string>& v)
        : s(text), vars(v), nv(int(v.size())) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }

    bool accept(char c) {
        if (peek(c)) { ++pos; return true; }
        return false;
    }

    void expect(char c) {
        if (!accept(c))
            fail(ErrCode::syntax_error, std::string("expected '") + c + "'", pos);
    }

    MPoly parse_expr() {
        skip_ws();
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        MPoly acc = parse_term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            if (accept('+')) acc += parse_term();
            else if (accept('-')) acc -= parse_term();
            else break;
        }
        return acc;
    }

    MPoly parse_term() {
        MPoly acc = parse_factor();
        while (accept('*')) acc *= parse_factor();
        return acc;
    }

    MPoly parse_factor() {
        MPoly b = parse_base();
        if (accept('^')) {
            unsigned e = parse_uint();
            b = b.pow(e);
        }
        return b;
    }

    unsigned parse_uint() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail(ErrCode::syntax_error, "expected unsigned integer", pos);
        unsigned long v = std::stoul(s.substr(start, pos - start));
        if (v > 1000) fail(ErrCode::syntax_error, "exponent too large", start);
        return unsigned(v);
    }

    MPoly parse_base() {
        skip_ws();
        if (pos >= s.size()) fail(ErrCode::syntax_error, "unexpected end of input", pos);
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
        if (c == '(') {
            ++pos;
            MPoly e = parse_expr();
            expect(')');
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos;
            while (pos < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
                ++pos;
            std::string id = s.substr(start, pos - start);
            if (id == "sqrt") {
                expect('(');
                MPoly arg = parse_expr();
                expect(')');
                if (!arg.is_constant())
                    fail(ErrCode::syntax_error, "sqrt argument must be constant", start);
                FieldElem root = sqrt_field(arg.constant_value());
                return MPoly::constant(nv, root);
            }
            for (int i = 0; i < nv; ++i)
                if (vars[size_t(i)] == id) return MPoly::var(nv, i);
            fail(ErrCode::syntax_error, "unknown identifier '" + id + "'", start);
        }
        fail(ErrCode::syntax_error, std::string("unexpected character '") + c + "'", pos);
    }

    MPoly parse_rational() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        Z num(s.substr(start, pos - start));
        Z den(1);
        size_t save = pos;
        skip_ws();
        if (pos < s.size() && s[pos] == '/') {
            ++pos;
            skip_ws();
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) fail(ErrCode::syntax_error, "expected denominator", pos);
            den = Z(s.substr(dstart, pos - dstart));
            if (den == 0) fail(ErrCode::syntax_error, "zero denominator", dstart);
        } else {
            pos = save;
        }
        Q q(num, den);
        q.canonicalize();
        return MPoly::constant(nv, FieldElem(q));
    }
};

} // namespace

MPoly parse_poly(const std::string& text, const std::vector<std::string>& var_names) {
    Parser p(text, var_names);
    MPoly r = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size())
        fail(ErrCode::syntax_error, "trailing input", p.pos);
    return r;
}

std::string print_poly(const MPoly& p, const std::vector<std::string>& var_names) {
    return p.str(var_names);
}

} // namespace stubborn
