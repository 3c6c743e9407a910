#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace okb {

/// Exact rational number. Always canonical (reduced, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rat>;

enum class ErrorKind {
    InvalidArgument,
    InvalidHN,
    Unbounded,
    DegenerateSimplex,
    NonPositiveA,
    TauOutOfRange,
    NotBig,
    RankNotTwo,
};

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidHN: return "InvalidHN";
    case ErrorKind::Unbounded: return "Unbounded";
    case ErrorKind::DegenerateSimplex: return "DegenerateSimplex";
    case ErrorKind::NonPositiveA: return "NonPositiveA";
    case ErrorKind::TauOutOfRange: return "TauOutOfRange";
    case ErrorKind::NotBig: return "NotBig";
    case ErrorKind::RankNotTwo: return "RankNotTwo";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline Rat make_rat(long num, long den = 1) {
    if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p" or "p/q" (decimal integers, q != 0).
inline Rat parse_rat(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
        if (i == s.size()) throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
        for (std::size_t j = i; j < s.size(); ++j) {
            if (s[j] < '0' || s[j] > '9')
                throw Error(ErrorKind::InvalidArgument, "malformed rational '" + std::string(text) + "'");
        }
        std::string digits(s[0] == '+' ? s.substr(1) : s);
        return Int(digits, 10);
    };
    auto slash = text.find('/');
    Rat q;
    if (slash == std::string_view::npos) {
        q = Rat(parse_int(text));
    } else {
        Int den = parse_int(text.substr(slash + 1));
        if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator in '" + std::string(text) + "'");
        q = Rat(parse_int(text.substr(0, slash)), den);
        q.canonicalize();
    }
    return q;
}

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline double to_double(const Rat& q) { return q.get_d(); }

inline Int factorial(unsigned n) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

inline Int binomial(unsigned n, unsigned k) {
    Int c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

inline Rat pow(const Rat& base, unsigned e) {
    Rat out = 1;
    for (unsigned i = 0; i < e; ++i) out *= base;
    return out;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

} // namespace okb
