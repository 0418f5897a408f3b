#ifndef NETKIT_ERRORS_HPP
#define NETKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace netkit {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

#define NETKIT_DEFINE_ERROR(Name)                                                                  \
  class Name : public Error {                                                                      \
  public:                                                                                          \
    using Error::Error;                                                                            \
  }

NETKIT_DEFINE_ERROR(DimensionMismatch);
NETKIT_DEFINE_ERROR(NotASubspace);
NETKIT_DEFINE_ERROR(FlavorViolation);
NETKIT_DEFINE_ERROR(NotAnEmbeddingTensor);
NETKIT_DEFINE_ERROR(NotLeibnizLie);
NETKIT_DEFINE_ERROR(ActionIllDefined);
NETKIT_DEFINE_ERROR(NotCoherentDerivation);
NETKIT_DEFINE_ERROR(DegreeOutOfRange);
NETKIT_DEFINE_ERROR(NotACocycle);
NETKIT_DEFINE_ERROR(NotNijenhuis);
NETKIT_DEFINE_ERROR(ArityCapExceeded);
NETKIT_DEFINE_ERROR(ParseError);
NETKIT_DEFINE_ERROR(UnresolvedReference);
NETKIT_DEFINE_ERROR(UsageError);

#undef NETKIT_DEFINE_ERROR

} // namespace netkit

#endif
