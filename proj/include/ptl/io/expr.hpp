#pragma once

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ptl/polyalg/multipoly.hpp"

namespace ptl {

// Parser for polynomial and field-element text. Grammar:
//   sum     := ['+'|'-'] product (('+'|'-') product)*
//   product := unary (['*'|'/'] unary)*        (juxtaposition multiplies)
//   unary   := '-' unary | power
//   power   := atom ['^' ['-'] integer]
//   atom    := integer | name | '(' sum ')' | nested-list
// Names are the polynomial variables, the field's generator names, or
// caller-bound constants.
// Nested lists give an element by its coefficients, low to high per level.
template <class Base>
class ExprParser {
  public:
    using P = MultiPoly<Base>;
    using E = Element<Base>;

    ExprParser(FieldPtr<Base> K, VarsPtr vars, TermOrder ord = TermOrder::grevlex,
               std::map<std::string, E> constants = {})
        : K_(std::move(K)), v_(std::move(vars)), ord_(ord), consts_(std::move(constants)) {
        gens_ = K_->generator_names();
    }

    P parse(const std::string& text) {
        s_ = text;
        i_ = 0;
        P r = sum();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

    E parse_element(const std::string& text) {
        P r = parse(text);
        if (r.is_zero()) return E::zero(K_);
        if (r.degree() != 0) fail("expected a field element, found a polynomial");
        return r.lead_coeff();
    }

  private:
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(msg + " at offset " + std::to_string(i_) + " in \"" + s_ + "\"");
    }
    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool peek(char c) {
        skip();
        return i_ < s_.size() && s_[i_] == c;
    }
    bool eat(char c) {
        if (!peek(c)) return false;
        ++i_;
        return true;
    }
    bool starts_atom() {
        skip();
        if (i_ >= s_.size()) return false;
        char c = s_[i_];
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '(' || c == '[';
    }

    P sum() {
        P acc(K_, v_, ord_);
        bool first = true;
        for (;;) {
            bool neg = false;
            if (eat('-'))
                neg = true;
            else if (!eat('+') && !first)
                break;
            P t = product();
            acc = neg ? acc - t : acc + t;
            first = false;
            if (!peek('+') && !peek('-')) break;
        }
        return acc;
    }

    P product() {
        P acc = unary();
        for (;;) {
            if (eat('*')) {
                acc = acc * unary();
            } else if (eat('/')) {
                P d = unary();
                if (d.is_zero()) throw DivisionByZero();
                if (d.degree() != 0) fail("division by a non-constant");
                acc = acc.scaled(d.lead_coeff().inverse());
            } else if (starts_atom()) {
                acc = acc * unary();
            } else {
                break;
            }
        }
        return acc;
    }

    P unary() {
        if (eat('-')) return -unary();
        return power();
    }

    P power() {
        P b = atom();
        if (!eat('^')) return b;
        bool neg = eat('-');
        skip();
        long e = integer_token();
        if (!neg) return b.pow(static_cast<unsigned>(e));
        if (b.is_zero()) throw DivisionByZero();
        if (b.degree() != 0) fail("negative power of a non-constant");
        return P::constant(b.lead_coeff().pow(-e), v_, ord_);
    }

    long integer_token() {
        skip();
        std::size_t st = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (st == i_) fail("expected an integer");
        return std::stol(s_.substr(st, i_ - st));
    }

    mpz_class big_integer() {
        skip();
        std::size_t st = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (st == i_) fail("expected an integer");
        return mpz_class(s_.substr(st, i_ - st));
    }

    P atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class n = big_integer();
            return P::constant(E::from_rational(K_, mpq_class(n)), v_, ord_);
        }
        if (c == '(') {
            ++i_;
            P r = sum();
            if (!eat(')')) fail("expected ')'");
            return r;
        }
        if (c == '[') return P::constant(nested(K_->depth()), v_, ord_);
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t st = i_;
            while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
            std::string name = s_.substr(st, i_ - st);
            if (auto vi = v_->index(name)) return P::variable(K_, v_, *vi, ord_);
            for (std::size_t l = 0; l < gens_.size(); ++l)
                if (gens_[l] == name) return P::constant(K_->generator(l + 1), v_, ord_);
            if (auto it = consts_.find(name); it != consts_.end()) return P::constant(it->second.embed(K_), v_, ord_);
            i_ = st;
            fail("unknown name '" + name + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    // Element of the prefix of depth `level`, embedded in K.
    E nested(std::size_t level) {
        auto F = K_->prefix(level);
        if (!eat('[')) {
            bool neg = eat('-');
            mpq_class q(big_integer());
            if (eat('/')) q /= mpq_class(big_integer());
            if (neg) q = -q;
            return E::from_rational(K_, q);
        }
        if (level == 0) fail("list nested deeper than the field tower");
        std::vector<E> parts;
        do {
            parts.push_back(nested(level - 1).restrict_to(F->parent()).value());
        } while (eat(','));
        if (!eat(']')) fail("expected ']'");
        if (parts.size() > F->degree()) fail("too many coefficients for " + F->generator_name());
        while (parts.size() < F->degree()) parts.push_back(E::zero(F->parent()));
        return E::from_top_coeffs(F, parts).embed(K_);
    }

    FieldPtr<Base> K_;
    VarsPtr v_;
    TermOrder ord_;
    std::vector<std::string> gens_;
    std::map<std::string, E> consts_;
    std::string s_;
    std::size_t i_ = 0;
};

template <class Base>
MultiPoly<Base> parse_poly(const FieldPtr<Base>& K, const VarsPtr& vars, const std::string& text,
                           const std::map<std::string, Element<Base>>& constants = {}) {
    return ExprParser<Base>(K, vars, TermOrder::grevlex, constants).parse(text);
}

template <class Base>
Element<Base> parse_element(const FieldPtr<Base>& K, const std::string& text,
                            const std::map<std::string, Element<Base>>& constants = {}) {
    return ExprParser<Base>(K, make_vars({}), TermOrder::grevlex, constants).parse_element(text);
}

}  // namespace ptl
