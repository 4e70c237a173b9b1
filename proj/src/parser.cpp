#include "pvkit/parser.hpp"

#include <cctype>

namespace pvkit {

namespace {

class Parser {
public:
    Parser(const std::string& s, const std::vector<std::string>& names) : s_(s), names_(names) {}

    LaurentPoly parse_all() {
        LaurentPoly v = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return v;
    }

private:
    const std::string& s_;
    const std::vector<std::string>& names_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }

    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }

    std::size_t nv() const { return names_.size(); }

    LaurentPoly expr() {
        LaurentPoly v = term();
        while (true) {
            if (eat('+')) v = v + term();
            else if (eat('-')) v = v - term();
            else return v;
        }
    }

    LaurentPoly term() {
        LaurentPoly v = unary();
        while (true) {
            if (eat('*')) {
                v = v * unary();
            } else {
                skip();
                std::size_t at = i_;
                if (!eat('/')) return v;
                LaurentPoly d = unary();
                v = v * invert(d, at);
            }
        }
    }

    LaurentPoly invert(const LaurentPoly& d, std::size_t at) const {
        if (d.is_zero()) throw Error(ErrorCode::DivisionByZeroExpression, "division by zero at position " + std::to_string(at));
        if (!d.is_monomial()) throw ParseError("division by a non-monomial", at);
        const auto& [e, c] = d.leading();
        IVec ne = e;
        for (auto& x : ne) x = -x;
        return LaurentPoly::monomial(nv(), ne, c.inverse());
    }

    LaurentPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    LaurentPoly power() {
        LaurentPoly base = atom();
        skip();
        std::size_t at = i_;
        if (!eat('^')) return base;
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        long e = integer();
        if (e > 10000) throw ParseError("exponent too large", at);
        if (!neg) return base.pow(unsigned(e));
        return invert(base, at).pow(unsigned(e));
    }

    long integer() {
        skip();
        std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_) fail("expected an integer");
        if (i_ - start > 9) throw ParseError("integer too large", start);
        return std::stol(s_.substr(start, i_ - start));
    }

    LaurentPoly atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
            BigRational v(BigInt(s_.substr(start, i_ - start)));
            return LaurentPoly(nv(), RatFunc(CycloNum(v)));
        }
        if (c == '(') {
            ++i_;
            LaurentPoly v = expr();
            expect(')');
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i_;
            while (i_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[i_]))) ++i_;
            std::string id = s_.substr(start, i_ - start);
            if (id == "x") return LaurentPoly(nv(), RatFunc::x());
            if (id == "zeta") {
                expect('(');
                long n = integer();
                if (n < 1) throw ParseError("zeta needs a positive order", start);
                expect(')');
                return LaurentPoly(nv(), RatFunc(CycloNum::zeta(unsigned(n))));
            }
            for (std::size_t k = 0; k < names_.size(); ++k)
                if (names_[k] == id) return LaurentPoly::var(nv(), k);
            throw ParseError("unknown identifier '" + id + "'", start);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }
};

std::vector<std::string> split_args(const std::string& s, std::size_t offset) {
    std::vector<std::string> out;
    int depth = 0;
    std::string cur;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth < 0) throw ParseError("unbalanced parentheses", offset + i);
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (depth != 0) throw ParseError("unbalanced parentheses", offset + s.size());
    out.push_back(cur);
    return out;
}

}  // namespace

LaurentPoly parse_laurent(const std::string& text, const std::vector<std::string>& names) {
    return Parser(text, names).parse_all();
}

RatFunc parse_expression(const std::string& text) {
    static const std::vector<std::string> none;
    return Parser(text, none).parse_all().constant_term();
}

CycloNum parse_constant(const std::string& text) {
    RatFunc f = parse_expression(text);
    if (!f.is_constant()) throw Error(ErrorCode::InvalidArgument, "'" + text + "' is not a constant");
    return f.constant_value();
}

DiffSystem parse_system(const std::string& text, const DiffField& k) {
    std::size_t open = text.find('('), close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
        throw ParseError("expected scalar(...), diag(...) or unipotent(...)", 0);
    for (std::size_t i = close + 1; i < text.size(); ++i)
        if (!std::isspace(static_cast<unsigned char>(text[i]))) throw ParseError("trailing input", i);
    std::string head = text.substr(0, open);
    head.erase(0, head.find_first_not_of(" \t"));
    head.erase(head.find_last_not_of(" \t") + 1);
    auto args = split_args(text.substr(open + 1, close - open - 1), open + 1);
    std::vector<RatFunc> vals;
    for (const auto& a : args) vals.push_back(parse_expression(a));
    auto k2 = k;
    for (const auto& v : vals) k2.constants_conductor = lcm_u(k2.constants_conductor, v.conductor());
    if (head == "scalar" || head == "unipotent") {
        if (vals.size() != 1) throw ParseError(head + " takes exactly one entry", open);
        return head == "scalar" ? DiffSystem::scalar(k2, vals[0]) : DiffSystem::unipotent(k2, vals[0]);
    }
    if (head == "diag") return DiffSystem::diagonal(k2, vals);
    throw ParseError("unknown system kind '" + head + "'", 0);
}

}  // namespace pvkit
