#ifndef EXPSUM_ERRORS_HPP
#define EXPSUM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace expsum {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct NotPrime : Error {
    explicit NotPrime(const std::string& m) : Error("NotPrime: " + m) {}
};
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& m) : Error("BudgetExceeded: " + m) {}
};
struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& m) : Error("DivisionByZero: " + m) {}
};
struct FieldMismatch : Error {
    explicit FieldMismatch(const std::string& m) : Error("FieldMismatch: " + m) {}
};
struct NotASubfield : Error {
    explicit NotASubfield(const std::string& m) : Error("NotASubfield: " + m) {}
};
struct NotCoprime : Error {
    explicit NotCoprime(const std::string& m) : Error("NotCoprime: " + m) {}
};
struct NotMonic : Error {
    explicit NotMonic(const std::string& m) : Error("NotMonic: " + m) {}
};
struct ZeroPolynomial : Error {
    explicit ZeroPolynomial(const std::string& m) : Error("ZeroPolynomial: " + m) {}
};
struct RingLacksDivision : Error {
    explicit RingLacksDivision(const std::string& m) : Error("RingLacksDivision: " + m) {}
};
struct HypothesisViolated : Error {
    explicit HypothesisViolated(const std::string& m) : Error("HypothesisViolated: " + m) {}
};
struct RootFindingDiverged : Error {
    explicit RootFindingDiverged(const std::string& m) : Error("RootFindingDiverged: " + m) {}
};
struct WrongCharacteristic : Error {
    explicit WrongCharacteristic(const std::string& m) : Error("WrongCharacteristic: " + m) {}
};
struct ProfileMismatch : Error {
    explicit ProfileMismatch(const std::string& m) : Error("ProfileMismatch: " + m) {}
};
struct OrderMismatch : Error {
    explicit OrderMismatch(const std::string& m) : Error("OrderMismatch: " + m) {}
};
struct ZeroParameter : Error {
    explicit ZeroParameter(const std::string& m) : Error("ZeroParameter: " + m) {}
};

} // namespace expsum

#endif
