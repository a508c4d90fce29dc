#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "homkit/algebra.hpp"
#include "homkit/module.hpp"

namespace homkit {

struct ParseError : std::runtime_error {
    int line;
    int col;
    ParseError(const std::string& msg, int l, int c)
        : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " + msg),
          line(l),
          col(c) {}
};

/// Result of parsing an algebra file: exactly one of the two forms.
struct AlgebraFileContents {
    std::optional<Presentation> presentation;
    std::optional<ConstantsSpec> constants;
};

/// Total parse of the algebra text format; every failure carries a position.
AlgebraFileContents parse_algebra_file(const std::string& text);

/// Parse and build in one step.
AlgebraPtr algebra_from_text(const std::string& text);
AlgebraPtr algebra_from_path(const std::string& path);

/// Inline module expressions: S<i>, P<i>, I<i>, regular, zero, D(expr),
/// syzygy(k, expr), and sums with '+'. Indices are 1-based in vertex order.
Module evaluate_module_expr(const AlgebraPtr& a, const std::string& expr);

/// Explicit representation matrices:
///   module
///     dim = <n>
///     action <basis name> = [[...],[...]]
/// One action line per algebra basis element; the module axioms are verified.
Module parse_module_file(const AlgebraPtr& a, const std::string& text);

}  // namespace homkit
