#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace liegeo {

// Exact arbitrary-precision rational scalar. mpq_class keeps values in
// lowest terms with positive denominator after canonicalization, which is
// exactly the invariant we need; every arithmetic operator below is exact.
using Rat = mpq_class;

class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

inline Rat rat(long num, long den = 1) {
    if (den == 0) throw Error("rational", "zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p/q" or "p"; whitespace is not accepted.
Rat rat_parse(const std::string& s);

// Serializes as "p/q", or "p" when q = 1.
std::string rat_str(const Rat& q);

inline bool is_zero(const Rat& q) { return sgn(q) == 0; }

}  // namespace liegeo
