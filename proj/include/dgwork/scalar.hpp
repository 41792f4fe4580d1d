#ifndef DGWORK_SCALAR_HPP
#define DGWORK_SCALAR_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace dgwork {

/// Exact rational scalar. All verdicts are computed over this type.
using Scalar = mpq_class;

/// Canonical text form: "p" for integers, otherwise "p/q" with q > 1 and
/// gcd(p, q) = 1.
std::string to_string(const Scalar& x);

/// Parses the canonical text form. Returns nullopt for anything that
/// `to_string` would not have produced ("2/4", "3/1", "+1", " 1", "1/-2").
std::optional<Scalar> parse_canonical(std::string_view text);

/// Residue of x modulo a prime p. Returns nullopt when p divides the
/// denominator.
std::optional<std::uint64_t> reduce_mod(const Scalar& x, std::uint64_t p);

}  // namespace dgwork

#endif  // DGWORK_SCALAR_HPP
