#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qk1
{

// Base of every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

#define QK1_DEFINE_ERROR(Name)                                                                                         \
    class Name : public Error                                                                                          \
    {                                                                                                                  \
      public:                                                                                                          \
        explicit Name(const std::string &what) : Error(#Name ": " + what) {}                                           \
    }

QK1_DEFINE_ERROR(DivisionByZero);
QK1_DEFINE_ERROR(IncompatibleOrder);
QK1_DEFINE_ERROR(NotRational);
QK1_DEFINE_ERROR(VariableMismatch);
QK1_DEFINE_ERROR(IrreducibleDenominator);
QK1_DEFINE_ERROR(NonzeroConstantTerm);
QK1_DEFINE_ERROR(ConstantTermNotOne);
QK1_DEFINE_ERROR(IndexBeyondCutoff);
QK1_DEFINE_ERROR(IncompatibleCutoff);
QK1_DEFINE_ERROR(NoContraction);
QK1_DEFINE_ERROR(TauMismatch);
QK1_DEFINE_ERROR(UnsupportedOrder);
QK1_DEFINE_ERROR(MissingCorrelatorData);
QK1_DEFINE_ERROR(UnsupportedAtom);
QK1_DEFINE_ERROR(NonIntegerExponent);

#undef QK1_DEFINE_ERROR

class ParseError : public Error
{
  public:
    ParseError(std::size_t offset, const std::string &what)
        : Error("ParseError at offset " + std::to_string(offset) + ": " + what), offset_(offset)
    {
    }

    std::size_t offset() const noexcept { return offset_; }

  private:
    std::size_t offset_;
};

} // namespace qk1
