#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace cplan {

// Plan lengths, plan counts and clause-subset masks outgrow 64 bits quickly.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(std::size_t k) {
    BigInt r = 1;
    r <<= static_cast<unsigned>(k);
    return r;
}

inline std::string to_string(const BigInt &v) { return v.str(); }

// Throws InputError on non-digits.
BigInt parse_bigint(const std::string &text);

}  // namespace cplan
