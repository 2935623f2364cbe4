#pragma once

#include <gmpxx.h>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ptd {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

inline std::string to_string(const Rat& r) { return r.get_str(); }
inline std::string to_string(const Int& z) { return z.get_str(); }

// i mod n mapped to 1..n
inline int cyc(int i, int n) {
    int r = i % n;
    if (r <= 0) r += n;
    return r;
}

// sigma(i) = i - 1 (mod n), acting on {1..n}
inline int sigma(int i, int n, int power = 1) { return cyc(i - power, n); }

} // namespace ptd
