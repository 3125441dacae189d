#pragma once

#include <changhee/polynomial.hpp>
#include <changhee/rational.hpp>
#include <changhee/series.hpp>

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace changhee {

/// Byte range [begin, end) into the original expression text.
struct SourceSpan {
    std::size_t begin = 0;
    std::size_t end = 0;
};

enum class GfKind { literal, var_t, var_x, negate, add, sub, mul, div, power, call_exp };

/// Exponents are deliberately restricted: an integer, x, or x plus an
/// integer offset. That covers every generating function here while keeping
/// evaluation inside the polynomial coefficient ring.
struct GfExponent {
    bool has_x = false;
    BigInt offset = 0;
};

struct GfExpr;
using GfExprPtr = std::unique_ptr<GfExpr>;

struct GfExpr {
    GfKind kind{};
    SourceSpan span;
    Rational literal;    // literal
    GfExprPtr lhs;       // unary operand, binary lhs, power base, exp argument
    GfExprPtr rhs;       // binary rhs
    GfExponent exponent; // power
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset, std::vector<std::string> expected);
    std::size_t offset;
    std::vector<std::string> expected;
};

class EvalError : public std::runtime_error {
public:
    EvalError(const std::string& what, SourceSpan span);
    SourceSpan span;
};

/// Grammar (see docs/grammar.ebnf):
///   expr     = term { ("+" | "-") term } ;
///   term     = unary { ("*" | "/") unary } ;
///   unary    = "-" unary | power ;
///   power    = primary [ "^" exponent ] ;
///   primary  = integer | "t" | "x" | "exp" "(" expr ")" | "(" expr ")" ;
///   exponent = "(" inner ")" | [ "-" ] integer | "x" ;
///   inner    = "(" inner ")" | [ "-" ] integer | "x" [ ("+" | "-") integer ] ;
/// The compound exponent x+c needs parentheses so f^x - 1 stays a
/// subtraction.
GfExprPtr parse(std::string_view input);

std::string pretty_print(const GfExpr& e);

/// Tree equality up to source spans.
bool structurally_equal(const GfExpr& a, const GfExpr& b);

TruncatedSeries<Polynomial> eval_series(const GfExpr& e, std::size_t order);

struct CompareResult {
    bool equal = false;
    std::optional<std::size_t> first_difference;
};

CompareResult compare(const GfExpr& lhs, const GfExpr& rhs, std::size_t order);

}  // namespace changhee
