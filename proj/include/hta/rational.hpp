#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hta {

using Q = mpq_class;

inline std::string q_str(const Q& q) { return q.get_str(); }

// Accepts "a" or "a/b" with an optional leading sign; result is canonicalized.
inline Q q_parse(const std::string& s)
{
    Q q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

inline int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

} // namespace hta
