#include "twoside/parse.hpp"

#include <cctype>
#include <functional>

#include "twoside/bipoly.hpp"
#include "twoside/ratfunc.hpp"

namespace twoside {
namespace {

template <class V>
class Parser {
   public:
    using VarFn = std::function<bool(char, V*)>;
    using DivFn = std::function<V(const V&, const V&)>;

    Parser(const std::string& text, VarFn var, DivFn div) : var_(std::move(var)), div_(std::move(div)) {
        for (char c : text)
            if (!std::isspace(static_cast<unsigned char>(c))) s_.push_back(c);
    }

    V parse() {
        if (s_.empty()) error("empty expression");
        V v = expr();
        if (pos_ != s_.size()) error(std::string("unexpected '") + s_[pos_] + "'");
        return v;
    }

   private:
    [[noreturn]] void error(const std::string& msg) const {
        fail(ErrorKind::Validation, "parse error at position " + std::to_string(pos_) + ": " + msg);
    }
    bool eat(char c) {
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    V expr() {
        V acc = term();
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }
    V term() {
        V acc = unary();
        for (;;) {
            if (eat('*'))
                acc = acc * unary();
            else if (eat('/'))
                acc = div_(acc, unary());
            else
                return acc;
        }
    }
    V unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }
    V power() {
        V base = atom();
        if (!eat('^')) return base;
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) error("exponent must be a nonnegative integer");
        if (pos_ - start > 4) error("exponent too large");
        int e = std::stoi(s_.substr(start, pos_ - start));
        V acc(1);
        for (int i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }
    V atom() {
        if (pos_ >= s_.size()) error("unexpected end of input");
        char c = s_[pos_];
        if (eat('(')) {
            V v = expr();
            if (!eat(')')) error("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            std::size_t start = pos_;
            while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
            V v(parse_rational(s_.substr(start, pos_ - start)));
            if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '('))
                error("implicit multiplication is not supported; write '*'");
            return v;
        }
        V v;
        if (std::isalpha(static_cast<unsigned char>(c)) && var_(c, &v)) {
            ++pos_;
            return v;
        }
        error(std::string("unknown symbol '") + c + "'");
    }

    std::string s_;
    std::size_t pos_ = 0;
    VarFn var_;
    DivFn div_;
};

}  // namespace

BiPoly parse_bipoly_expr(const std::string& text) {
    Parser<BiPoly> p(
        text,
        [](char c, BiPoly* out) {
            if (c == 'x') *out = BiPoly::x();
            else if (c == 'y') *out = BiPoly::y();
            else return false;
            return true;
        },
        [](const BiPoly& a, const BiPoly& b) {
            if (b.is_zero_poly() || b.deg_x() > 0 || b.deg_y() > 0)
                fail(ErrorKind::Validation, "relations may only be divided by nonzero constants");
            return a * BiPoly(BigRat(1 / b.coeff(0, 0)));
        });
    return p.parse();
}

RatFunc parse_rational_function(const std::string& text, char var) {
    Parser<RatFunc> p(
        text,
        [var](char c, RatFunc* out) {
            if (c != var) return false;
            *out = RatFunc::t();
            return true;
        },
        [](const RatFunc& a, const RatFunc& b) {
            if (b.is_zero_value()) fail(ErrorKind::Validation, "division by zero in rational function");
            return a / b;
        });
    return p.parse();
}

}  // namespace twoside
