#ifndef E8INDEX_BUNDLE_EXPR_HPP
#define E8INDEX_BUNDLE_EXPR_HPP

#include <cctype>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "e8_lattice.hpp"
#include "fixture.hpp"
#include "laurent_polynomial.hpp"

namespace e8index
{

// Atoms of a twisting bundle: the line bundle L of the spin-c structure and
// its conjugate, the complexified tangent bundle, the adjoint E8 bundle W,
// L~ = L + Lbar - 2 (the reduced complexification of L) and the formal
// symbol k = dim X / 2.
enum class BundleAtom { L, Lbar, T, W, Lt, k };

inline std::string to_string(BundleAtom a)
{
    switch (a) {
        case BundleAtom::L:
            return "L";
        case BundleAtom::Lbar:
            return "Lbar";
        case BundleAtom::T:
            return "T";
        case BundleAtom::W:
            return "W";
        case BundleAtom::Lt:
            return "Lt";
        case BundleAtom::k:
            return "k";
    }
    return "?";
}

class BundleExprError : public std::invalid_argument
{
public:
    BundleExprError(const std::string &what, std::size_t position)
        : std::invalid_argument("bundle expression: " + what + " at position " + std::to_string(position)),
          position_(position)
    {
    }
    std::size_t position() const
    {
        return position_;
    }

private:
    std::size_t position_;
};

// Integer combination of tensor products of atoms, kept as a small tree.
// Grammar (whitespace ignored):
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := power (('*' | 'x' | juxtaposition) power)*
//   power  := factor ['^' digits]
//   factor := digits | atom | '(' expr ')'
//   atom   := L | Lbar | T | TX | W | Lt | k
// e.g. "W + T - (L^2 + Lbar^2) + (L + Lbar) - 8 - 2k".
class BundleExpr
{
public:
    enum class Node { constant, atom, sum, product, negate, power };

    static BundleExpr constant(long v)
    {
        BundleExpr e;
        e.node_ = Node::constant;
        e.value_ = v;
        return e;
    }
    static BundleExpr atom(BundleAtom a)
    {
        BundleExpr e;
        e.node_ = Node::atom;
        e.atom_ = a;
        return e;
    }

    static BundleExpr parse(const std::string &text);

    Node node() const
    {
        return node_;
    }
    long value() const
    {
        return value_;
    }
    BundleAtom atom_kind() const
    {
        return atom_;
    }
    const std::vector<BundleExpr> &children() const
    {
        return children_;
    }

    friend BundleExpr operator+(BundleExpr a, BundleExpr b)
    {
        return combine(Node::sum, std::move(a), std::move(b));
    }
    friend BundleExpr operator-(BundleExpr a, BundleExpr b)
    {
        BundleExpr n;
        n.node_ = Node::negate;
        n.children_.push_back(std::move(b));
        return combine(Node::sum, std::move(a), std::move(n));
    }
    friend BundleExpr operator*(BundleExpr a, BundleExpr b)
    {
        return combine(Node::product, std::move(a), std::move(b));
    }
    friend BundleExpr pow(BundleExpr a, long exponent)
    {
        BundleExpr n;
        n.node_ = Node::power;
        n.value_ = exponent;
        n.children_.push_back(std::move(a));
        return n;
    }
    BundleExpr operator-() const
    {
        BundleExpr n;
        n.node_ = Node::negate;
        n.children_.push_back(*this);
        return n;
    }

private:
    static BundleExpr combine(Node kind, BundleExpr a, BundleExpr b)
    {
        BundleExpr n;
        n.node_ = kind;
        n.children_.push_back(std::move(a));
        n.children_.push_back(std::move(b));
        return n;
    }

    Node node_ = Node::constant;
    long value_ = 0;
    BundleAtom atom_ = BundleAtom::L;
    std::vector<BundleExpr> children_;
};

namespace detail
{

class BundleParser
{
public:
    explicit BundleParser(const std::string &s) : s_(s) {}

    BundleExpr run()
    {
        skip();
        if (pos_ == s_.size()) {
            throw BundleExprError("empty expression", pos_);
        }
        BundleExpr e = expr();
        skip();
        if (pos_ != s_.size()) {
            throw BundleExprError(std::string("unexpected '") + s_[pos_] + "'", pos_);
        }
        return e;
    }

private:
    void skip()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) {
            ++pos_;
        }
    }
    bool eat(char c)
    {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool at_factor_start()
    {
        skip();
        if (pos_ >= s_.size()) {
            return false;
        }
        const char c = s_[pos_];
        return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || c == 'L' || c == 'T' || c == 'W' || c == 'k';
    }

    BundleExpr expr()
    {
        BundleExpr e = eat('-') ? -term() : term();
        for (;;) {
            if (eat('+')) {
                e = e + term();
            } else if (eat('-')) {
                e = e - term();
            } else {
                return e;
            }
        }
    }
    BundleExpr term()
    {
        BundleExpr e = power();
        for (;;) {
            if (eat('*') || eat('x')) {
                e = e * power();
            } else if (at_factor_start()) {
                e = e * power();
            } else {
                return e;
            }
        }
    }
    BundleExpr power()
    {
        BundleExpr e = factor();
        if (eat('^')) {
            skip();
            const std::size_t start = pos_;
            const long n = digits();
            if (n > 64) {
                throw BundleExprError("exponent too large", start);
            }
            e = pow(std::move(e), n);
        }
        return e;
    }
    long digits()
    {
        const std::size_t start = pos_;
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000'000L) {
                throw BundleExprError("integer too large", start);
            }
            ++pos_;
        }
        if (pos_ == start) {
            throw BundleExprError("expected an integer", start);
        }
        return v;
    }
    BundleExpr factor()
    {
        skip();
        if (pos_ >= s_.size()) {
            throw BundleExprError("unexpected end of expression", pos_);
        }
        const std::size_t start = pos_;
        if (eat('(')) {
            BundleExpr e = expr();
            if (!eat(')')) {
                throw BundleExprError("missing ')'", pos_);
            }
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            return BundleExpr::constant(digits());
        }
        // Atoms may be juxtaposed ("2kW"), so match the longest known name.
        static const std::vector<std::pair<std::string, BundleAtom>> names{
            {"Lbar", BundleAtom::Lbar}, {"Lt", BundleAtom::Lt}, {"TX", BundleAtom::T}, {"L", BundleAtom::L},
            {"T", BundleAtom::T},       {"W", BundleAtom::W},   {"k", BundleAtom::k}};
        for (const auto &[name, atom] : names) {
            if (s_.compare(pos_, name.size(), name) == 0) {
                pos_ += name.size();
                return BundleExpr::atom(atom);
            }
        }
        std::string word;
        while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) {
            word.push_back(s_[pos_++]);
        }
        if (word.empty()) {
            throw BundleExprError(std::string("unexpected '") + s_[start] + "'", start);
        }
        throw BundleExprError("unknown atom '" + word + "'", start);
    }

    const std::string &s_;
    std::size_t pos_ = 0;
};

} // namespace detail

inline BundleExpr BundleExpr::parse(const std::string &text)
{
    return detail::BundleParser(text).run();
}

inline std::string to_string(const BundleExpr &e)
{
    using N = BundleExpr::Node;
    switch (e.node()) {
        case N::constant:
            return std::to_string(e.value());
        case N::atom:
            return to_string(e.atom_kind());
        case N::sum:
            return "(" + to_string(e.children()[0]) + " + " + to_string(e.children()[1]) + ")";
        case N::product:
            return to_string(e.children()[0]) + "*" + to_string(e.children()[1]);
        case N::negate:
            return "-" + to_string(e.children()[0]);
        case N::power:
            return to_string(e.children()[0]) + "^" + std::to_string(e.value());
    }
    return "?";
}

// Equivariant Chern character data of the atoms at one fixed point, in the
// variable w = e^(pi i t).
struct AtomCharacters {
    LaurentPolynomial L{Variable::w};
    LaurentPolynomial Lbar{Variable::w};
    LaurentPolynomial T{Variable::w};
    LaurentPolynomial W{Variable::w};
    long k = 0;
};

// W restricted to the point: rank 8 from the Cartan plus one weight
// w^(2<gamma,beta>) per root, i.e. the q^1 coefficient of the basic
// character along beta.
inline LaurentPolynomial adjoint_character(const Beta &beta)
{
    static const ShellTable roots = enumerate_shells(1);
    return theta_e8(beta, roots, 1).q_coefficient(1) + LaurentPolynomial(8, Variable::w);
}

inline AtomCharacters atom_characters(const FixedPoint &p, int k)
{
    AtomCharacters a;
    a.L = LaurentPolynomial::monomial(GaussianRational(1), 2 * p.c, Variable::w);
    a.Lbar = LaurentPolynomial::monomial(GaussianRational(1), -2 * p.c, Variable::w);
    for (int al : p.alpha) {
        a.T = a.T + LaurentPolynomial::monomial(GaussianRational(1), 2 * al, Variable::w)
              + LaurentPolynomial::monomial(GaussianRational(1), -2 * al, Variable::w);
    }
    a.W = adjoint_character(p.beta);
    a.k = k;
    return a;
}

inline LaurentPolynomial evaluate(const BundleExpr &e, const AtomCharacters &a)
{
    using N = BundleExpr::Node;
    switch (e.node()) {
        case N::constant:
            return LaurentPolynomial(e.value(), Variable::w);
        case N::atom:
            switch (e.atom_kind()) {
                case BundleAtom::L:
                    return a.L;
                case BundleAtom::Lbar:
                    return a.Lbar;
                case BundleAtom::T:
                    return a.T;
                case BundleAtom::W:
                    return a.W;
                case BundleAtom::Lt:
                    return a.L + a.Lbar - LaurentPolynomial(2, Variable::w);
                case BundleAtom::k:
                    return LaurentPolynomial(a.k, Variable::w);
            }
            break;
        case N::sum:
            return evaluate(e.children()[0], a) + evaluate(e.children()[1], a);
        case N::product:
            return evaluate(e.children()[0], a) * evaluate(e.children()[1], a);
        case N::negate:
            return -evaluate(e.children()[0], a);
        case N::power: {
            const LaurentPolynomial base = evaluate(e.children()[0], a);
            LaurentPolynomial r(1, Variable::w);
            for (long i = 0; i < e.value(); ++i) {
                r = r * base;
            }
            return r;
        }
    }
    throw std::logic_error("bundle expression: corrupt node");
}

} // namespace e8index

#endif
