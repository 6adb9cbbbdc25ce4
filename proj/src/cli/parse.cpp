#include "smallpoint/cli/parse.hpp"

#include <cctype>
#include <map>

namespace smallpoint {

namespace {

struct Token {
    enum Kind { num, var, op, end } kind;
    std::string text;
    std::size_t pos;
    std::size_t index = 0; // variable index, 1-based
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::num, s.substr(i, j - i), i});
            i = j;
            continue;
        }
        if (ch == 'x' || ch == 'X') {
            std::size_t j = i + 1;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            Token t{Token::var, s.substr(i, j - i), i};
            if (j == i + 1) {
                t.index = 1;
            } else {
                std::string digits = s.substr(i + 1, j - i - 1);
                if (digits.size() > 6 || std::stoul(digits) == 0)
                    throw input_error("bad variable '" + t.text + "' at position " + std::to_string(i));
                t.index = std::stoul(digits);
            }
            out.push_back(t);
            i = j;
            continue;
        }
        if (std::string("+-*^/()").find(ch) != std::string::npos) {
            out.push_back({Token::op, std::string(1, ch), i});
            ++i;
            continue;
        }
        // name the whole unexpected word, not just its first character
        std::size_t j = i;
        while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])) &&
               std::string("+-*^/()").find(s[j]) == std::string::npos)
            ++j;
        throw input_error("unexpected token '" + s.substr(i, std::max<std::size_t>(j - i, 1)) + "' at position " +
                          std::to_string(i));
    }
    out.push_back({Token::end, "", s.size()});
    return out;
}

class Parser {
public:
    Parser(const std::vector<Token>& toks, std::size_t nvars) : t_(toks), n_(nvars) {}

    QPolyN parse() {
        QPolyN r = expr();
        if (peek().kind != Token::end) fail(peek());
        return r;
    }

private:
    const Token& peek() const { return t_[k_]; }
    bool accept(const char* op) {
        if (peek().kind == Token::op && peek().text == op) {
            ++k_;
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const Token& t) const {
        if (t.kind == Token::end) throw input_error("unexpected end of input at position " + std::to_string(t.pos));
        throw input_error("unexpected token '" + t.text + "' at position " + std::to_string(t.pos));
    }

    QPolyN expr() {
        QPolyN r = term();
        while (true) {
            if (accept("+")) r = r + term();
            else if (accept("-")) r = r - term();
            else return r;
        }
    }
    QPolyN term() {
        QPolyN r = unary();
        while (accept("*")) r = r * unary();
        return r;
    }
    QPolyN unary() {
        if (accept("-")) return -unary();
        if (accept("+")) return unary();
        return power();
    }
    QPolyN power() {
        QPolyN base = atom();
        if (accept("^")) {
            const Token& e = peek();
            if (e.kind != Token::num || e.text.size() > 4) fail(e);
            ++k_;
            return base.pow(unsigned(std::stoul(e.text)));
        }
        return base;
    }
    QPolyN atom() {
        const Token& t = peek();
        if (t.kind == Token::num) {
            ++k_;
            Rat v(Int(t.text, 10));
            if (accept("/")) {
                const Token& d = peek();
                if (d.kind != Token::num) fail(d);
                ++k_;
                Int den(d.text, 10);
                if (den == 0) throw input_error("zero denominator at position " + std::to_string(d.pos));
                v = Rat(Int(t.text, 10), den);
                v.canonicalize();
            }
            return QPolyN::constant(n_, v);
        }
        if (t.kind == Token::var) {
            ++k_;
            return QPolyN::variable(n_, t.index - 1);
        }
        if (accept("(")) {
            QPolyN r = expr();
            if (!accept(")")) fail(peek());
            return r;
        }
        fail(t);
    }

    const std::vector<Token>& t_;
    std::size_t n_;
    std::size_t k_ = 0;
};

} // namespace

std::size_t max_variable_index(const std::string& text) {
    std::size_t m = 0;
    for (const auto& t : tokenize(text))
        if (t.kind == Token::var) m = std::max(m, t.index);
    return m;
}

QPolyN parse_polynomial(const std::string& text, std::size_t nvars) {
    auto toks = tokenize(text);
    std::size_t m = 1;
    for (const auto& t : toks)
        if (t.kind == Token::var) m = std::max(m, t.index);
    if (nvars != 0 && m > nvars)
        throw input_error("variable x" + std::to_string(m) + " exceeds the declared count " + std::to_string(nvars));
    return Parser(toks, std::max(m, nvars)).parse();
}

std::vector<QPolyN> parse_system(const std::vector<std::string>& texts, std::size_t nvars) {
    std::size_t m = std::max<std::size_t>(nvars, 1);
    for (const auto& s : texts) m = std::max(m, max_variable_index(s));
    std::vector<QPolyN> out;
    for (const auto& s : texts) out.push_back(parse_polynomial(s, m));
    return out;
}

} // namespace smallpoint
