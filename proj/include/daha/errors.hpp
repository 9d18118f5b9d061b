#pragma once

#include <stdexcept>
#include <string>

namespace daha {

enum class Err {
    ZeroDenominator,
    ZeroInverse,
    DenominatorVanishes,
    SphericalDegenerate,
    DegenerateSpectrum,
    InvalidSpecialization,
    SingularMatrix,
    SingularParameter,
    NonGenericPoint,
    NotOnVariety,
    ResourceBound,
    ConfigError,
    IoError,
};

inline const char* err_name(Err e) {
    switch (e) {
        case Err::ZeroDenominator:      return "ZeroDenominator";
        case Err::ZeroInverse:          return "ZeroInverse";
        case Err::DenominatorVanishes:  return "DenominatorVanishes";
        case Err::SphericalDegenerate:  return "SphericalDegenerate";
        case Err::DegenerateSpectrum:   return "DegenerateSpectrum";
        case Err::InvalidSpecialization:return "InvalidSpecialization";
        case Err::SingularMatrix:       return "SingularMatrix";
        case Err::SingularParameter:    return "SingularParameter";
        case Err::NonGenericPoint:      return "NonGenericPoint";
        case Err::NotOnVariety:         return "NotOnVariety";
        case Err::ResourceBound:        return "ResourceBound";
        case Err::ConfigError:          return "ConfigError";
        case Err::IoError:              return "IoError";
    }
    return "Unknown";
}

class Error : public std::runtime_error {
public:
    Error(Err code, const std::string& what)
        : std::runtime_error(std::string(err_name(code)) + ": " + what), code_(code) {}
    Err code() const { return code_; }

private:
    Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& what) { throw Error(code, what); }

} // namespace daha
