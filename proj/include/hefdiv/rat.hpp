#ifndef HEFDIV_RAT_HPP
#define HEFDIV_RAT_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace hefdiv {

// Exact rational scalar. GMP keeps values canonical (reduced, denominator > 0),
// which is what the JSON encoding and the deterministic solvers rely on.
using Rat = mpq_class;

inline Rat rat_of(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "num", "num/den" and leading '-'; throws on garbage or den == 0.
inline Rat rat_parse(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("rat_parse: bad rational literal '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("rat_parse: zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool rat_is_zero(const Rat& q) { return sgn(q) == 0; }

} // namespace hefdiv

#endif
