// errors.hpp — typed error hierarchy for invariant and precondition failures
#pragma once

#include <stdexcept>
#include <string>

namespace qei {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class NonHermitian : public Error { using Error::Error; };
class NoConvergence : public Error { using Error::Error; };
class DomainError : public Error { using Error::Error; };
class SingularState : public Error { using Error::Error; };
class ShapeMismatch : public Error { using Error::Error; };
class DimMismatch : public Error { using Error::Error; };
class LengthMismatch : public Error { using Error::Error; };
class BadSubsystemIndex : public Error { using Error::Error; };
class BadPermutation : public Error { using Error::Error; };
class BadDimensions : public Error { using Error::Error; };
class NotPositive : public Error { using Error::Error; };
class DefectiveMatrix : public Error { using Error::Error; };
class NotMarkov : public Error { using Error::Error; };
class NotCommuting : public Error { using Error::Error; };
class ZeroOutcomeProbability : public Error { using Error::Error; };
class EnsembleMismatch : public Error { using Error::Error; };
class InvariantViolation : public Error { using Error::Error; };
class ParseError : public Error { using Error::Error; };

} // namespace qei
