#ifndef LTOWER_ERRORS_HPP
#define LTOWER_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ltower {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define LTOWER_DEFINE_ERROR(Name)                                             \
    class Name : public Error {                                               \
    public:                                                                    \
        using Error::Error;                                                    \
    }

// p-adic arithmetic
LTOWER_DEFINE_ERROR(NotPrime);
LTOWER_DEFINE_ERROR(PrimeMismatch);
LTOWER_DEFINE_ERROR(DenominatorNotUnit);
LTOWER_DEFINE_ERROR(NotAUnit);
LTOWER_DEFINE_ERROR(NotAResidue);
LTOWER_DEFINE_ERROR(BranchInvalid);
LTOWER_DEFINE_ERROR(EvenPrimeUnsupported);
LTOWER_DEFINE_ERROR(ZeroInput);
LTOWER_DEFINE_ERROR(PrecisionExceeded);
LTOWER_DEFINE_ERROR(InsufficientPrecision);

// series and invariant extraction
LTOWER_DEFINE_ERROR(NoUnitSeed);
LTOWER_DEFINE_ERROR(SeriesIndistinguishableFromZero);

// graphs and counting
LTOWER_DEFINE_ERROR(Disconnected);
LTOWER_DEFINE_ERROR(LevelTooLarge);
LTOWER_DEFINE_ERROR(InsufficientLevels);

// Violated internal invariant (e.g. a zero pivot inside the fraction-free
// elimination of a positive definite minor).  Always a bug, never user input.
LTOWER_DEFINE_ERROR(InternalError);

LTOWER_DEFINE_ERROR(SemanticError);

#undef LTOWER_DEFINE_ERROR

// Config / seed-string syntax error with source position.  line and column
// are 1-based; 0 means unknown (e.g. a seed string passed on the command line).
class ParseError : public Error {
public:
    ParseError(const std::string& msg, int line = 0, int column = 0)
        : Error(position_prefix(line, column) + msg), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string position_prefix(int line, int column) {
        if (line <= 0)
            return {};
        return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
    }

    int line_;
    int column_;
};

} // namespace ltower

#endif
