#include "qgalois/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "qgalois/cyclotomic.hpp"
#include "qgalois/errors.hpp"

namespace qg {

namespace {

struct Token {
    enum Kind { Number, Ident, Op, End } kind;
    std::string text;
};

std::vector<Token> tokenize(const std::string& s) {
    std::vector<Token> out;
    size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t j = i;
            while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
            out.push_back({Token::Number, s.substr(i, j - i)});
            i = j;
        } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t j = i;
            while (j < s.size() &&
                   (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_'))
                ++j;
            out.push_back({Token::Ident, s.substr(i, j - i)});
            i = j;
        } else if (std::string("+-*/^()").find(c) != std::string::npos) {
            out.push_back({Token::Op, std::string(1, c)});
            ++i;
        } else {
            throw ParseError("unexpected character '" + std::string(1, c) + "'");
        }
    }
    out.push_back({Token::End, ""});
    return out;
}

bool is_scalar_ident(const std::string& name) {
    if (name == "q") return true;
    if (name.size() >= 2 && (name[0] == 'q' || name[0] == 'z')) {
        for (size_t i = 1; i < name.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
        return true;
    }
    return false;
}

RatFunc scalar_ident_value(const std::string& name) {
    if (name[0] == 'z') return RatFunc(Cyclotomic::root(std::stol(name.substr(1))));
    return RatFunc::variable(name);
}

// a word whose scalar value is tracked when it has no letters
struct Value {
    Word word;
    std::optional<RatFunc> scalar;

    static Value from_scalar(const RatFunc& c) { return {Word::scalar(c), c}; }
};

class Parser {
public:
    explicit Parser(const std::string& s) : toks_(tokenize(s)) {}

    Word run() {
        Value v = expr();
        expect(Token::End, "");
        return v.word;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    bool accept_op(const std::string& op) {
        if (peek().kind == Token::Op && peek().text == op) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(Token::Kind k, const std::string& text) {
        if (peek().kind != k || (!text.empty() && peek().text != text))
            throw ParseError("unexpected token '" + peek().text + "'");
        ++pos_;
    }

    Value expr() {
        Value v = term();
        while (true) {
            if (accept_op("+")) {
                Value r = term();
                v.word += r.word;
                if (v.scalar && r.scalar)
                    v.scalar = *v.scalar + *r.scalar;
                else
                    v.scalar.reset();
            } else if (accept_op("-")) {
                Value r = term();
                v.word -= r.word;
                if (v.scalar && r.scalar)
                    v.scalar = *v.scalar - *r.scalar;
                else
                    v.scalar.reset();
            } else {
                return v;
            }
        }
    }

    Value term() {
        Value v = factor();
        while (true) {
            if (accept_op("*")) {
                Value r = factor();
                v.word *= r.word;
                if (v.scalar && r.scalar)
                    v.scalar = *v.scalar * *r.scalar;
                else
                    v.scalar.reset();
            } else if (accept_op("/")) {
                Value r = factor();
                if (!r.scalar) throw ParseError("division requires a scalar divisor");
                if (r.scalar->is_zero()) throw ParseError("division by zero");
                v.word = v.word.scaled(RatFunc(1) / *r.scalar);
                if (v.scalar) v.scalar = *v.scalar / *r.scalar;
            } else {
                return v;
            }
        }
    }

    Value factor() {
        if (accept_op("-")) {
            Value v = factor();
            v.word = -v.word;
            if (v.scalar) v.scalar = -*v.scalar;
            return v;
        }
        Value v = base();
        if (accept_op("^")) {
            long e = exponent();
            if (e >= 0) {
                Word p = v.word.pow(e);
                v = {p, v.scalar ? std::optional<RatFunc>(v.scalar->pow(e)) : std::nullopt};
            } else if (v.scalar) {
                v = Value::from_scalar(v.scalar->pow(e));
            } else if (v.word.terms().size() == 1 && v.word.terms()[0].letters.size() == 1 &&
                       v.word.terms()[0].coeff == RatFunc(1)) {
                v = {Word::gen(v.word.terms()[0].letters[0] + "^-1").pow(-e), std::nullopt};
            } else {
                throw ParseError("negative exponent requires a scalar or a single generator");
            }
        }
        return v;
    }

    long exponent() {
        bool neg = accept_op("-");
        if (peek().kind != Token::Number) throw ParseError("expected an integer exponent");
        long v = std::stol(take().text);
        return neg ? -v : v;
    }

    Value base() {
        if (accept_op("(")) {
            Value v = expr();
            expect(Token::Op, ")");
            return v;
        }
        Token t = take();
        if (t.kind == Token::Number) return Value::from_scalar(RatFunc(std::stol(t.text)));
        if (t.kind == Token::Ident) {
            if (is_scalar_ident(t.text)) return Value::from_scalar(scalar_ident_value(t.text));
            return {Word::gen(t.text), std::nullopt};
        }
        throw ParseError("unexpected token '" + t.text + "'");
    }

    std::vector<Token> toks_;
    size_t pos_ = 0;
};

} // namespace

Word parse_element(const std::string& text) { return Parser(text).run(); }

} // namespace qg
