#include "modloci/poly_parser.hpp"

#include <cctype>

#include "modloci/errors.hpp"

namespace modloci {
namespace {

class Parser {
public:
    Parser(const std::string& text, const std::vector<std::string>& vars)
        : text_(text), vars_(vars) {}

    Polynomial parse() {
        Polynomial p = expression();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

private:
    Polynomial expression() {
        skip_ws();
        bool neg = false;
        if (peek() == '+' || peek() == '-') neg = (get() == '-');
        Polynomial acc = product();
        if (neg) acc = -acc;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Polynomial t = product();
            acc = (c == '+') ? acc + t : acc - t;
        }
        return acc;
    }

    Polynomial product() {
        Polynomial acc = power();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            get();
            acc = acc * power();
        }
        return acc;
    }

    Polynomial power() {
        Polynomial base = primary();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            bool neg = false;
            if (peek() == '-') {
                get();
                neg = true;
            }
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent expected");
            long e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) e = e * 10 + (get() - '0');
            if (neg) throw NegativeExponent("in expression");
            return base.pow(static_cast<int>(e));
        }
        return base;
    }

    Polynomial primary() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            Polynomial p = expression();
            skip_ws();
            if (peek() != ')') fail("')' expected");
            get();
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
        fail("term expected");
        return Polynomial();  // unreachable
    }

    Polynomial number() {
        std::string num = digits();
        skip_ws();
        if (peek() == '/') {
            get();
            skip_ws();
            std::string den = digits();
            if (den.empty()) fail("denominator expected");
            return Polynomial::constant(vars_.size(), rat_from_string(num + "/" + den));
        }
        return Polynomial::constant(vars_.size(), rat_from_string(num));
    }

    Polynomial variable() {
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            name.push_back(get());
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return Polynomial::variable(vars_.size(), i);
        throw UnknownVariable(name);
    }

    std::string digits() {
        std::string s;
        while (std::isdigit(static_cast<unsigned char>(peek()))) s.push_back(get());
        if (s.empty()) fail("digit expected");
        return s;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return text_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(0, msg + " near position " + std::to_string(pos_) + " in '" + text_ + "'");
    }

    const std::string& text_;
    const std::vector<std::string>& vars_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& vars) {
    return Parser(text, vars).parse();
}

std::vector<Polynomial> parse_polynomial_list(const std::string& text,
                                              const std::vector<std::string>& vars) {
    std::vector<Polynomial> out;
    std::size_t start = 0;
    int depth = 0;
    auto flush = [&](std::size_t end) {
        std::string piece = text.substr(start, end - start);
        bool blank = true;
        for (char c : piece)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) out.push_back(parse_polynomial(piece, vars));
    };
    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            flush(i);
            start = i + 1;
        }
    }
    flush(text.size());
    return out;
}

}  // namespace modloci
