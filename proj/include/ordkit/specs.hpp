#pragma once

#include "ordkit/bhfix.hpp"
#include "ordkit/dilators.hpp"

#include <string_view>

namespace ordkit {

/// `fin:k | nat | omega(S) | epsilon(S) | theta(S) | pad(SY,SX) | bhfix(D)`,
/// plus `bot+S` and `pair(S,S)` so that every printed spec parses back.
OrderPtr parse_order_spec(std::string_view text);
OrderPtr parse_order_spec(Cursor& in);

/// The class-sized dilator specs: `id | const(S,w) | scaled_sum(S) |
/// prod_omega(S) | eps_pad(S) | omega | epsilon`.
TransformerPtr parse_transformer_spec(std::string_view text);
TransformerPtr parse_transformer_spec(Cursor& in);

/// Transformer specs (restricted to ℕ) and `table:<path>`. Tables are
/// loaded with the given validation level.
DilatorPtr parse_dilator_spec(std::string_view text, TableValidation tables = TableValidation::structural);
DilatorPtr parse_dilator_spec(Cursor& in, TableValidation tables = TableValidation::structural);

} // namespace ordkit
