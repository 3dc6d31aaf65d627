#pragma once

#include <stdexcept>
#include <string>

namespace dplt {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DegenerateTriangle : Error { using Error::Error; };
struct CoincidentPoints : Error { using Error::Error; };
struct CoincidentCircles : Error { using Error::Error; };
struct UnstableGeometry : Error { using Error::Error; };
struct InvalidGeometry : Error { using Error::Error; };
struct InvalidBeamwidth : Error { using Error::Error; };
struct NegativeFlight : Error { using Error::Error; };
struct ParallelBearings : Error { using Error::Error; };
struct BehindRay : Error { using Error::Error; };
struct CoverageGap : Error { using Error::Error; };
struct ConfigError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };
struct EmptyRun : Error { using Error::Error; };

} // namespace dplt
