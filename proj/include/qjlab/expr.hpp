#pragma once

// Prefix grammar for finite ring constructions:
//
//   E := Z n | prod E E | quot E <gens> | idl E M | polyq p f | loc E s | ( E )
//   M := selfmod | zeromod | quotmod <gens>
//   top := E | ideal E gens
//
// Generators are element names (as printed by the ring) or element ids,
// separated by commas or spaces. In a ring whose elements print as pairs,
// a bare "a,b" is read as the pair (a,b).

#include <optional>
#include <string_view>
#include <vector>

#include "qjlab/construct.hpp"

namespace qjlab::construct {

struct Expression {
  RingRef ring;
  /// Set when the outermost constructor is idl.
  std::optional<Idealization> idealization;
  /// Set by the top-level "ideal E gens" form.
  std::optional<IdealSet> ideal;
};

/// Throws ParseError on malformed input; constructor errors propagate.
Expression parse_expression(std::string_view text);
RingRef parse_ring(std::string_view text);

/// Element by name, falling back to a numeric id.
Elem parse_element(const RingTable& ring, std::string_view token);
/// Ideal generated by a generator list such as "4", "<2,3>", "(1,0) (0,2)".
IdealSet parse_ideal(const RingRef& ring, std::string_view generators);
/// Monic polynomial such as "x^2+x+1" or "x^2+2", low-degree-first.
std::vector<unsigned> parse_polynomial(unsigned p, std::string_view text);

}  // namespace qjlab::construct
