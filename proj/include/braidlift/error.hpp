#pragma once

#include <stdexcept>
#include <string>

namespace braidlift {

struct AlgebraError : std::runtime_error {
    enum class Kind {
        OrderMismatch,
        DivisionByZero,
        Inconsistency,     // quotient algebra is zero / contradictory constraints
        Orientation,       // relation admits no admissible orientation
        DegreeOverflow,    // computation exceeds the completed degree
        NonScalarDefect,   // top defect component has a non-scalar Y part
        IterationCap,
        Purity,            // deformed relation has nonzero Y degree
        InvalidStratification,
        BadInput,
    };
    Kind kind;
    std::string context;  // stage / relation annotation

    AlgebraError(Kind k, const std::string& msg, std::string ctx = {})
        : std::runtime_error(ctx.empty() ? msg : msg + " [" + ctx + "]"),
          kind(k),
          context(std::move(ctx)) {}
};

}  // namespace braidlift
