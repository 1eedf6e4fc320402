#pragma once

#include <stdexcept>
#include <string>

namespace riordan {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// fps-core
struct DivisionByHigherValuation : Error { using Error::Error; };
struct NonpositiveInnerValuation : Error { using Error::Error; };
struct NotInvertible : Error { using Error::Error; };
struct NonUnitConstantTerm : Error { using Error::Error; };
struct OddValuation : Error { using Error::Error; };
struct NonSquareLeadingCoefficient : Error { using Error::Error; };
struct BadConstantTerm : Error { using Error::Error; };
struct NotContracting : Error { using Error::Error; };

// riordan arrays
struct InsufficientTruncation : Error { using Error::Error; };

// theorems
struct SingularEvaluation : Error { using Error::Error; };
struct NotGeneralizedPalindrome : Error { using Error::Error; };
struct GammaVanishesAtOne : Error { using Error::Error; };
struct NonSquareConstant : Error { using Error::Error; };
struct SupportViolation : Error { using Error::Error; };

// families
struct UnknownFamily : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct ConstructionCheckFailed : Error { using Error::Error; };

}  // namespace riordan
