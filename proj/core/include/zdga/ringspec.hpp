#ifndef ZDGA_RINGSPEC_HPP
#define ZDGA_RINGSPEC_HPP

#include <string>
#include <string_view>
#include <vector>

#include "zdga/ring.hpp"

namespace zdga {

/// Parsed abstract syntax of the ring-spec language.
///
/// Grammar (whitespace insignificant, keywords case-insensitive,
/// "x" and "×" synonymous as product, "(+)" binds tighter than product):
///
///   spec := term (("x"|"×") term)*
///   term := atom [ "(+)" atom [ "^" INT ] ]     -- rank defaults to 1
///   atom := "Z" INT | "GF(" INT ")" | "Z" INT "[x]/(" poly ")" | "(" spec ")"
///   poly := monomials over x with integer coefficients, e.g. "x^2+x+1"
struct RingSpec {
    enum class Kind { Zn, GF, Quotient, Product, Idealization };

    Kind kind = Kind::Zn;
    long n = 0;                     // Zn: n; GF: q; Quotient: p
    std::vector<int> poly;          // Quotient: c0..cdeg, monic
    std::vector<RingSpec> children; // Product: factors; Idealization: [base]
    int rank = 0;                   // Idealization
    std::size_t span_begin = 0, span_end = 0;

    /// Canonical re-emission: single "x", lowercase poly variable, no
    /// spaces, explicit idealization rank.
    std::string normalized() const;

    /// Structural equality, ignoring source spans.
    bool equals(const RingSpec& other) const;
};

RingSpec parse(std::string_view text);

struct ElaborateOptions {
    int max_order = kDefaultOrderCap;
};

/// Dispatch to the ring-core constructors; the result carries the
/// normalized spec text.
FiniteRing elaborate(const RingSpec& spec, const ElaborateOptions& options = {});

/// parse + elaborate in one step.
FiniteRing build_ring(std::string_view text, const ElaborateOptions& options = {});

} // namespace zdga

#endif
