#pragma once

#include <stdexcept>
#include <string>

namespace hemi {

/// Base class of every error thrown by the library.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

#define HEMI_DEFINE_ERROR(name)          \
  struct name : error {                  \
    using error::error;                  \
  }

HEMI_DEFINE_ERROR(NotCentrallySymmetric);
HEMI_DEFINE_ERROR(InvalidPolyhedron);
HEMI_DEFINE_ERROR(NoWheel);
HEMI_DEFINE_ERROR(EdgeExists);
HEMI_DEFINE_ERROR(MalformedGraph6);
HEMI_DEFINE_ERROR(NotAutomorphism);
HEMI_DEFINE_ERROR(DegreeMismatch);
HEMI_DEFINE_ERROR(TooLarge);
HEMI_DEFINE_ERROR(NotASkeletonAutomorphism);
HEMI_DEFINE_ERROR(FaceNotPreserved);
HEMI_DEFINE_ERROR(PairingNotRespected);
HEMI_DEFINE_ERROR(TargetNotIdentifiable);

#undef HEMI_DEFINE_ERROR

} // namespace hemi
