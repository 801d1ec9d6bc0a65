#pragma once

/**
 * @file scalar_text.hpp
 * @brief Parser for the scalar text grammar.
 *
 * Grammar: integers, `p/q` fractions, `eps`, `sqrt<k>` (the k-th adjoined
 * radicand of the active spec, 1-based), combined with + - * / and
 * parentheses. `Scalar::str()` emits this grammar.
 */

#include <string>

#include "ortho/scalar.hpp"

namespace ortho {

/// Parses `text` as an element of `spec`. Throws parse_error with the
/// offending offset on malformed input; `eps`/`sqrt<k>` outside their specs
/// are parse errors as well.
Scalar parse_scalar(const std::string& text, const FieldSpecPtr& spec);

}  // namespace ortho
