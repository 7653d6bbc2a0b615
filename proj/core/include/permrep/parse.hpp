#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "permrep/ratfunc.hpp"

namespace permrep {

// Standard variable names x1..xn.
inline std::vector<std::string> standard_var_names(int n)
{
    std::vector<std::string> names;
    names.reserve(n);
    for (int i = 1; i <= n; ++i)
        names.push_back(cat("x", i));
    return names;
}

// Recursive-descent parser for the field-element grammar: integer literals,
// declared variable names, + - * / ^ and parentheses; whitespace-insensitive.
// Exponents are nonnegative integer literals.
template <class K>
class ExprParser {
public:
    ExprParser(const std::string& text, const std::vector<std::string>& names, K proto)
        : text_(text), names_(names), proto_(std::move(proto))
    {
    }

    RatFunc<K> parse()
    {
        RatFunc<K> e = expr();
        skip_ws();
        require(pos_ == text_.size(), "unexpected character '", text_[pos_],
                "' at position ", pos_, " in expression");
        return e;
    }

private:
    int nvars() const { return static_cast<int>(names_.size()); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool eat(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek()
    {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    RatFunc<K> expr()
    {
        RatFunc<K> v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    RatFunc<K> term()
    {
        RatFunc<K> v = unary();
        for (;;) {
            if (eat('*')) {
                v = v * unary();
            } else if (eat('/')) {
                RatFunc<K> d = unary();
                require(!d.is_zero(), "division by zero in expression");
                v = v / d;
            } else {
                return v;
            }
        }
    }

    RatFunc<K> unary()
    {
        if (eat('-'))
            return -unary();
        return power();
    }

    RatFunc<K> power()
    {
        RatFunc<K> base = atom();
        if (eat('^')) {
            skip_ws();
            require(pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])),
                    "exponent must be a nonnegative integer at position ", pos_);
            unsigned long e = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                e = e * 10 + static_cast<unsigned long>(text_[pos_] - '0');
                require(e <= 4096, "exponent too large");
                ++pos_;
            }
            return RatFunc<K>(base.num().pow(static_cast<unsigned>(e)),
                              base.den().pow(static_cast<unsigned>(e)));
        }
        return base;
    }

    RatFunc<K> atom()
    {
        skip_ws();
        require(pos_ < text_.size(), "unexpected end of expression");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            RatFunc<K> v = expr();
            require(eat(')'), "missing ')' at position ", pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                digits += text_[pos_++];
            return RatFunc<K>::constant(nvars(), scalar_from_decimal(proto_, digits));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                name += text_[pos_++];
            for (int i = 0; i < nvars(); ++i)
                if (names_[i] == name)
                    return RatFunc<K>::variable(nvars(), i, proto_);
            fail("unknown variable '", name, "' (declared: ",
                 names_.empty() ? std::string("none") : names_.front() + "..", ")");
        }
        fail("unexpected character '", c, "' at position ", pos_);
    }

    const std::string& text_;
    const std::vector<std::string>& names_;
    K proto_;
    size_t pos_ = 0;
};

template <class K>
RatFunc<K> parse_ratfunc(const std::string& text, const std::vector<std::string>& names,
                         const K& proto)
{
    ExprParser<K> p(text, names, proto);
    return p.parse();
}

}  // namespace permrep
