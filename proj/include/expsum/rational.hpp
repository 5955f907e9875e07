#ifndef EXPSUM_RATIONAL_HPP
#define EXPSUM_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <string>

namespace expsum {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

inline double to_double(const Rat& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string to_string(const Rat& r) {
    std::string s = r.numerator().str();
    if (r.denominator() != 1) s += "/" + r.denominator().str();
    return s;
}

} // namespace expsum

#endif
