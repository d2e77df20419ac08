#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace topo {

using Int = mpz_class;
using Rat = mpq_class;

/// Exact rational value of an IEEE double (doubles are dyadic).
Rat rat_from_double(double x);

/// Parses "p", "p/q" or a decimal string ("-3", "3/2", "1.25") exactly.
/// Returns nullopt on syntax errors or q = 0.
std::optional<Rat> rat_from_string(const std::string& s);

/// Canonical string form: "p" when the denominator is 1, else "p/q".
std::string rat_to_string(const Rat& q);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace topo
