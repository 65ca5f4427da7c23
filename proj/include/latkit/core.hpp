#pragma once

// Exact arithmetic foundation shared by every module: arbitrary-precision
// integers/rationals, error types and a few small helpers.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace latkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Violated precondition or malformed input (CLI exit code 1).
struct invalid_input : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Violated internal invariant (CLI exit code 2).
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw invalid_input(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw internal_error(msg);
}

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rat& q) {
    if (is_integer(q)) return rat_num(q).str();
    return rat_num(q).str() + "/" + rat_den(q).str();
}

inline std::int64_t to_i64(const Int& x) {
    ensure(x >= std::numeric_limits<std::int64_t>::min() &&
               x <= std::numeric_limits<std::int64_t>::max(),
           "integer out of 64-bit range");
    return static_cast<std::int64_t>(x);
}

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

inline Int pow2(unsigned n) { return Int(1) << n; }

inline Int binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    Int b = 1;
    for (unsigned i = 0; i < k; ++i) {
        b *= n - i;
        b /= i + 1;
    }
    return b;
}

/// FNV-1a over a string; used for stable content hashes in file formats.
inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* d = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<size_t>(i)] = d[v & 0xf];
        v >>= 4;
    }
    return s;
}

}  // namespace latkit
