#pragma once

#include <stdexcept>

namespace mincodes {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// field construction
struct NotIrreducible : Error { using Error::Error; };
struct NotPrimitive : Error { using Error::Error; };

// parameter validation
struct BadSize : Error { using Error::Error; };
struct BadOrder : Error { using Error::Error; };
struct BadEpsilon : Error { using Error::Error; };
struct BadBreakpoints : Error { using Error::Error; };
struct BadParams : Error { using Error::Error; };
struct DeltaOutOfRange : Error { using Error::Error; };
struct MTooSmall : Error { using Error::Error; };
struct EvenM : Error { using Error::Error; };

// function/code preconditions
struct FieldMismatch : Error { using Error::Error; };
struct ConstantFunction : Error { using Error::Error; };
struct DependentMasks : Error { using Error::Error; };
struct DependentComponents : Error { using Error::Error; };
struct EmptyKeepSet : Error { using Error::Error; };
struct ZeroInD : Error { using Error::Error; };
struct AiTooSmall : Error { using Error::Error; };
struct DimensionOne : Error { using Error::Error; };

// budgets
struct TooLarge : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };

// serialization
struct ParseError : Error { using Error::Error; };

}  // namespace mincodes
