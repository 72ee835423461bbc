// Exact rational scalars. Thin helpers around GMP's mpq_class: parsing and
// printing in the "p/q" form used by the corpus files.
#pragma once

#include <gmpxx.h>
#include <string>

namespace orb {

using Rat = mpq_class;

// Parses "p" or "p/q" (q > 0 after canonicalization). Throws OrbError on
// malformed input; `where` is prepended to the message.
Rat parse_rat(const std::string& text, const std::string& where);

// "p" when the denominator is 1, "p/q" otherwise.
std::string rat_str(const Rat& r);

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

// Requires is_integer and a value that fits in long.
long rat_long(const Rat& r);

} // namespace orb
