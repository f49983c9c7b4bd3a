#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace parageo {

/// Base of all domain errors. `name()` is the stable machine-readable
/// identifier (the CLI prints it on stderr and exits 1).
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define PARAGEO_DEFINE_ERROR(NAME)                                        \
    struct NAME : Error {                                                 \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}    \
    }

PARAGEO_DEFINE_ERROR(ZeroDivisor);
PARAGEO_DEFINE_ERROR(DimensionMismatch);
PARAGEO_DEFINE_ERROR(NotInvolutive);
PARAGEO_DEFINE_ERROR(ParseError);
PARAGEO_DEFINE_ERROR(NotSymmetric);
PARAGEO_DEFINE_ERROR(NotLorentzian);
PARAGEO_DEFINE_ERROR(ZeroVector);
PARAGEO_DEFINE_ERROR(SpecialPoint);
PARAGEO_DEFINE_ERROR(DegenerateImage);
PARAGEO_DEFINE_ERROR(DegenerateCollineation);
PARAGEO_DEFINE_ERROR(NullNorm);
PARAGEO_DEFINE_ERROR(NotCollinear);
PARAGEO_DEFINE_ERROR(DegenerateConfiguration);
PARAGEO_DEFINE_ERROR(LineMissesQuadric);
PARAGEO_DEFINE_ERROR(NotUnit);
PARAGEO_DEFINE_ERROR(NotTangent);
PARAGEO_DEFINE_ERROR(NotInCone);
PARAGEO_DEFINE_ERROR(NotInterior);
PARAGEO_DEFINE_ERROR(SingularFamily);
PARAGEO_DEFINE_ERROR(FrameDegenerate);
PARAGEO_DEFINE_ERROR(ResidualTooLarge);
PARAGEO_DEFINE_ERROR(UnknownSuite);
PARAGEO_DEFINE_ERROR(NonFinite);
PARAGEO_DEFINE_ERROR(InvalidArgument);

#undef PARAGEO_DEFINE_ERROR

}  // namespace parageo
