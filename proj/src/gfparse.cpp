#include <changhee/gfparse.hpp>

#include <cctype>
#include <sstream>
#include <utility>

namespace changhee {

namespace {

std::string describe_expected(const std::vector<std::string>& expected) {
    std::string out;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0) out += i + 1 == expected.size() ? " or " : ", ";
        out += expected[i];
    }
    return out;
}

}  // namespace

ParseError::ParseError(const std::string& what, std::size_t offset_,
                       std::vector<std::string> expected_)
    : std::runtime_error(what), offset(offset_), expected(std::move(expected_)) {}

EvalError::EvalError(const std::string& what, SourceSpan span_)
    : std::runtime_error(what), span(span_) {}

namespace {

class Parser {
public:
    explicit Parser(std::string_view input) : in_(input) {}

    GfExprPtr run() {
        GfExprPtr e = expr();
        skip_ws();
        if (pos_ != in_.size())
            fail("unexpected input", {"operator", "end of input"});
        return e;
    }

private:
    std::string_view in_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) {
        std::ostringstream msg;
        msg << what << " at offset " << pos_ << "; expected " << describe_expected(expected);
        throw ParseError(msg.str(), pos_, std::move(expected));
    }

    void skip_ws() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ == in_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < in_.size() ? in_[pos_] : '\0';
    }

    bool consume(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static GfExprPtr make(GfKind kind, SourceSpan span) {
        auto e = std::make_unique<GfExpr>();
        e->kind = kind;
        e->span = span;
        return e;
    }

    GfExprPtr binary(GfKind kind, GfExprPtr lhs, GfExprPtr rhs) {
        auto e = make(kind, {lhs->span.begin, rhs->span.end});
        e->lhs = std::move(lhs);
        e->rhs = std::move(rhs);
        return e;
    }

    GfExprPtr expr() {
        GfExprPtr e = term();
        while (true) {
            if (consume('+'))
                e = binary(GfKind::add, std::move(e), term());
            else if (consume('-'))
                e = binary(GfKind::sub, std::move(e), term());
            else
                return e;
        }
    }

    GfExprPtr term() {
        GfExprPtr e = unary();
        while (true) {
            if (consume('*'))
                e = binary(GfKind::mul, std::move(e), unary());
            else if (consume('/'))
                e = binary(GfKind::div, std::move(e), unary());
            else
                return e;
        }
    }

    GfExprPtr unary() {
        skip_ws();
        std::size_t start = pos_;
        if (consume('-')) {
            auto e = make(GfKind::negate, {start, 0});
            e->lhs = unary();
            e->span.end = e->lhs->span.end;
            return e;
        }
        return power();
    }

    GfExprPtr power() {
        GfExprPtr base = primary();
        if (!consume('^')) return base;
        GfExponent ex = exponent();
        auto e = make(GfKind::power, {base->span.begin, pos_});
        e->lhs = std::move(base);
        e->exponent = ex;
        return e;
    }

    BigInt integer_token() {
        skip_ws();
        if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_])))
            fail("malformed exponent", {"integer"});
        std::size_t start = pos_;
        while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
        return BigInt(std::string(in_.substr(start, pos_ - start)));
    }

    GfExponent exponent() { return exponent_body(false); }

    // The compound form x+c or x-c binds only inside parentheses, so that
    // f^x - 1 stays a subtraction.
    GfExponent exponent_body(bool in_parens) {
        skip_ws();
        if (consume('(')) {
            GfExponent ex = exponent_body(true);
            if (!consume(')')) fail("unclosed exponent", {")"});
            return ex;
        }
        if (consume('-')) return {false, -integer_token()};
        if (pos_ < in_.size() && in_[pos_] == 'x') {
            std::size_t save = pos_;
            ++pos_;
            if (pos_ < in_.size() && std::isalnum(static_cast<unsigned char>(in_[pos_]))) {
                pos_ = save;
                fail("malformed exponent", {"integer", "x"});
            }
            if (in_parens) {
                if (consume('+')) return {true, integer_token()};
                if (consume('-')) return {true, -integer_token()};
            }
            return {true, 0};
        }
        if (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_])))
            return {false, integer_token()};
        fail("malformed exponent", {"integer", "x", "("});
    }

    GfExprPtr primary() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ >= in_.size())
            fail("missing value", {"integer", "t", "x", "exp", "("});
        char c = in_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
            auto e = make(GfKind::literal, {start, pos_});
            e->literal = Rational(BigInt(std::string(in_.substr(start, pos_ - start))));
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            while (pos_ < in_.size() && std::isalpha(static_cast<unsigned char>(in_[pos_]))) ++pos_;
            std::string_view name = in_.substr(start, pos_ - start);
            if (name == "t") return make(GfKind::var_t, {start, pos_});
            if (name == "x") return make(GfKind::var_x, {start, pos_});
            if (name == "exp") {
                if (!consume('(')) fail("exp call needs parentheses", {"("});
                auto arg = expr();
                if (!consume(')')) fail("unclosed exp call", {")"});
                auto e = make(GfKind::call_exp, {start, pos_});
                e->lhs = std::move(arg);
                return e;
            }
            pos_ = start;
            std::ostringstream msg;
            msg << "unknown identifier '" << name << "' at offset " << start;
            throw ParseError(msg.str(), start, {"t", "x", "exp"});
        }
        if (c == '(') {
            ++pos_;
            auto e = expr();
            if (!consume(')')) fail("unclosed parenthesis", {")"});
            e->span = {start, pos_};
            return e;
        }
        fail("missing value", {"integer", "t", "x", "exp", "("});
    }
};

// Precedence levels for minimal re-parenthesization: add/sub 1, mul/div 2,
// negate 3, power 4, atoms 5.
int precedence(GfKind kind) {
    switch (kind) {
        case GfKind::add:
        case GfKind::sub: return 1;
        case GfKind::mul:
        case GfKind::div: return 2;
        case GfKind::negate: return 3;
        case GfKind::power: return 4;
        default: return 5;
    }
}

void render(const GfExpr& e, int min_level, std::string& out) {
    bool parens = precedence(e.kind) < min_level;
    if (parens) out += '(';
    switch (e.kind) {
        case GfKind::literal: out += e.literal.str(); break;
        case GfKind::var_t: out += 't'; break;
        case GfKind::var_x: out += 'x'; break;
        case GfKind::negate:
            out += '-';
            render(*e.lhs, 3, out);
            break;
        case GfKind::add:
            render(*e.lhs, 1, out);
            out += " + ";
            render(*e.rhs, 2, out);
            break;
        case GfKind::sub:
            render(*e.lhs, 1, out);
            out += " - ";
            render(*e.rhs, 2, out);
            break;
        case GfKind::mul:
            render(*e.lhs, 2, out);
            out += " * ";
            render(*e.rhs, 3, out);
            break;
        case GfKind::div:
            render(*e.lhs, 2, out);
            out += " / ";
            render(*e.rhs, 3, out);
            break;
        case GfKind::power:
            render(*e.lhs, 5, out);
            out += '^';
            if (!e.exponent.has_x) {
                out += e.exponent.offset.str();
            } else if (e.exponent.offset.is_zero()) {
                out += 'x';
            } else {
                out += '(';
                out += 'x';
                if (e.exponent.offset > 0) {
                    out += '+';
                    out += e.exponent.offset.str();
                } else {
                    out += '-';
                    out += BigInt(-e.exponent.offset).str();
                }
                out += ')';
            }
            break;
        case GfKind::call_exp:
            out += "exp(";
            render(*e.lhs, 1, out);
            out += ')';
            break;
    }
    if (parens) out += ')';
}

using PSeries = TruncatedSeries<Polynomial>;

PSeries eval(const GfExpr& e, std::size_t order) {
    switch (e.kind) {
        case GfKind::literal:
            return PSeries::constant(Polynomial(e.literal), order);
        case GfKind::var_t:
            return PSeries::shift(order);
        case GfKind::var_x:
            return PSeries::constant(Polynomial::variable(), order);
        case GfKind::negate:
            return -eval(*e.lhs, order);
        case GfKind::add:
            return eval(*e.lhs, order) + eval(*e.rhs, order);
        case GfKind::sub:
            return eval(*e.lhs, order) - eval(*e.rhs, order);
        case GfKind::mul:
            return eval(*e.lhs, order) * eval(*e.rhs, order);
        case GfKind::div: {
            PSeries divisor = eval(*e.rhs, order);
            try {
                return eval(*e.lhs, order) * divisor.invert();
            } catch (const std::domain_error&) {
                throw EvalError("division requires an invertible constant term", e.rhs->span);
            }
        }
        case GfKind::power: {
            PSeries base = eval(*e.lhs, order);
            if (!e.exponent.has_x) {
                BigInt o = e.exponent.offset;
                if (boost::multiprecision::abs(o) > 1000000)
                    throw EvalError("exponent out of supported range", e.span);
                if (o >= 0) return base.pow(o.convert_to<unsigned>());
                try {
                    return base.invert().pow(BigInt(-o).convert_to<unsigned>());
                } catch (const std::domain_error&) {
                    throw EvalError("negative power requires an invertible constant term",
                                    e.lhs->span);
                }
            }
            if (base.coeff(0) != Polynomial(1))
                throw EvalError("power with x in the exponent requires constant term 1",
                                e.lhs->span);
            Polynomial exp_poly = Polynomial::variable() + Polynomial(Rational(e.exponent.offset));
            return binomial_series(exp_poly, order).compose(base - PSeries::unit(order));
        }
        case GfKind::call_exp: {
            PSeries arg = eval(*e.lhs, order);
            if (!arg.coeff(0).is_zero())
                throw EvalError("exp requires zero constant term", e.lhs->span);
            PSeries acc = PSeries::unit(order);
            PSeries power_term = PSeries::unit(order);
            Rational inv_fact(1);
            for (std::size_t j = 1; j <= order; ++j) {
                power_term = power_term * arg;
                inv_fact = inv_fact / Rational(static_cast<BigInt>(j));
                acc = acc + power_term.scale(Polynomial(inv_fact));
            }
            return acc;
        }
    }
    throw std::logic_error("eval: unhandled node kind");
}

}  // namespace

GfExprPtr parse(std::string_view input) { return Parser(input).run(); }

std::string pretty_print(const GfExpr& e) {
    std::string out;
    render(e, 1, out);
    return out;
}

bool structurally_equal(const GfExpr& a, const GfExpr& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == GfKind::literal && a.literal != b.literal) return false;
    if (a.kind == GfKind::power &&
        (a.exponent.has_x != b.exponent.has_x || a.exponent.offset != b.exponent.offset))
        return false;
    if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
    if (a.lhs && !structurally_equal(*a.lhs, *b.lhs)) return false;
    if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
    if (a.rhs && !structurally_equal(*a.rhs, *b.rhs)) return false;
    return true;
}

TruncatedSeries<Polynomial> eval_series(const GfExpr& e, std::size_t order) {
    return eval(e, order);
}

CompareResult compare(const GfExpr& lhs, const GfExpr& rhs, std::size_t order) {
    PSeries a = eval(lhs, order);
    PSeries b = eval(rhs, order);
    for (std::size_t n = 0; n <= order; ++n)
        if (a.coeff(n) != b.coeff(n)) return {false, n};
    return {true, std::nullopt};
}

}  // namespace changhee
