#pragma once

#include <stdexcept>
#include <string>

namespace horec {

// Base class for all recoverable failures raised by the library.
// `kind()` is a stable machine-readable tag, used by the CLI to map
// failures onto exit codes and structured stderr lines.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(msg), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

private:
    std::string kind_;
};

#define HOREC_DEFINE_ERROR(NAME)                                    \
    class NAME : public Error {                                     \
    public:                                                         \
        explicit NAME(const std::string& msg) : Error(#NAME, msg) {} \
    }

HOREC_DEFINE_ERROR(DegenerateParam);
HOREC_DEFINE_ERROR(DegenerateConfiguration);
HOREC_DEFINE_ERROR(InsufficientPoints);
HOREC_DEFINE_ERROR(DivergedRefinement);
HOREC_DEFINE_ERROR(NoCorrespondences);
HOREC_DEFINE_ERROR(EmptyMesh);
HOREC_DEFINE_ERROR(NoValidFrames);
HOREC_DEFINE_ERROR(EmptyBounds);
HOREC_DEFINE_ERROR(DegenerateField);
HOREC_DEFINE_ERROR(LengthMismatch);
HOREC_DEFINE_ERROR(EmptyGroup);
HOREC_DEFINE_ERROR(NoMaskedPixels);
HOREC_DEFINE_ERROR(DataError);

#undef HOREC_DEFINE_ERROR

}  // namespace horec
