#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace kmss {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Errors that correspond to CLI exit code 1.
struct DomainError : std::runtime_error {
    std::string code;
    DomainError(std::string c, const std::string& what)
        : std::runtime_error(what), code(std::move(c)) {}
};

inline std::string rat_to_string(const Rat& r) {
    return r.str();
}

// Accepts "p", "p/q" and plain decimal integers.
inline Rat rat_from_string(const std::string& s) {
    return Rat(s);
}

inline bool is_integer(const Rat& r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline BigInt rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline BigInt rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

}  // namespace kmss
