#ifndef FEMBASIS_ERRORS_HH
#define FEMBASIS_ERRORS_HH

#include <stdexcept>
#include <string>

namespace fembasis {

/** \brief Base class of all errors raised by this library */
class Exception : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

#define FEMBASIS_DECLARE_ERROR(Name)              \
  class Name : public Exception                   \
  {                                               \
  public:                                         \
    explicit Name(const std::string& what)        \
      : Exception(#Name ": " + what) {}           \
  };

// multi-indices
FEMBASIS_DECLARE_ERROR(CapacityExceeded)
FEMBASIS_DECLARE_ERROR(PrefixNotFound)

// tree specifications
FEMBASIS_DECLARE_ERROR(InvalidSpec)
FEMBASIS_DECLARE_ERROR(InvalidStrategy)
FEMBASIS_DECLARE_ERROR(UnsupportedOrder)
FEMBASIS_DECLARE_ERROR(TreeTooDeep)
FEMBASIS_DECLARE_ERROR(PathOutOfRange)

// grid and basis
FEMBASIS_DECLARE_ERROR(IndexOutOfRange)
FEMBASIS_DECLARE_ERROR(OutsideDomain)
FEMBASIS_DECLARE_ERROR(UnboundView)
FEMBASIS_DECLARE_ERROR(MergeProducesInvalidTree)

// containers
FEMBASIS_DECLARE_ERROR(ShapeMismatch)
FEMBASIS_DECLARE_ERROR(AlreadyFrozen)
FEMBASIS_DECLARE_ERROR(NotFrozen)

FEMBASIS_DECLARE_ERROR(InvalidConfig)
FEMBASIS_DECLARE_ERROR(IoError)

#undef FEMBASIS_DECLARE_ERROR

/** \brief Parse failure in a tree specification, carrying the byte offset */
class SyntaxError : public Exception
{
public:
  SyntaxError(std::size_t position, const std::string& expected)
    : Exception("SyntaxError at position " + std::to_string(position)
                + ": expected " + expected)
    , position_(position)
    , expected_(expected)
  {}

  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

private:
  std::size_t position_;
  std::string expected_;
};

} // end namespace fembasis

#endif // FEMBASIS_ERRORS_HH
