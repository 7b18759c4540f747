#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ringline/numbers.hpp"

namespace ringline {

// Abstract syntax of the ring construction language:
//
//   spec := atom | "prod(" spec { "," spec } ")"
//   atom := "Z/" int
//         | "GF(" int ")"
//         | "dual(" spec ", h=" int [ ", frob=" int ] ")"
//         | "mat(" int "," spec ")"
//         | "ext(" spec ", n=" int ")"
//         | "table(" path ")"
//
// Whitespace is permitted between tokens.  `frob=j` selects the j-th power of
// the Frobenius as the twist; frob=0 (the default) means untwisted truncated
// polynomials.  A twist that reduces to the identity automorphism is rejected.
struct RingSpec {
    enum class Kind {
        Zmod,            // n = modulus
        GaloisField,     // n = q (prime power)
        DualNumbers,     // args[0] = base, n = h >= 2
        TwistedDual,     // args[0] = base (Galois field), frob >= 1, h = 2
        MatrixRing,      // args[0] = base, n = m >= 1
        Product,         // args = components
        ExteriorAlgebra, // args[0] = base field, n = generator count >= 1
        TableRing        // path = file with explicit tables
    };

    Kind kind;
    long long n = 0;
    int frob = 0;
    std::vector<std::shared_ptr<const RingSpec>> args;
    std::string path;
};

using RingSpecPtr = std::shared_ptr<const RingSpec>;

// Throws ParseError with a 1-based position on syntax or semantic errors
// (non-prime-power GF order, h < 2, identity twist, modulus < 2).
RingSpecPtr parse_ring_spec(const std::string& text);

// Canonical compact form; parse(print(parse(s))) == parse(s).
std::string print_ring_spec(const RingSpec& spec);

// Ring order implied by the spec.  Reads only the header of table files.
Int spec_order(const RingSpec& spec);

}  // namespace ringline
