#ifndef EMSIM_ERRORS_HPP
#define EMSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace emsim {

// Base class for all workbench errors so the CLI can map them to
// single-line machine-parseable messages.
struct Error : std::runtime_error {
    Error(std::string kind, const std::string& msg)
        : std::runtime_error(kind + ": " + msg), kind(std::move(kind)) {}
    std::string kind;
};

#define EMSIM_DEFINE_ERROR(NAME)                                   \
    struct NAME : Error {                                          \
        explicit NAME(const std::string& msg) : Error(#NAME, msg) {} \
    }

EMSIM_DEFINE_ERROR(WidthMismatch);
EMSIM_DEFINE_ERROR(InvalidArgument);
EMSIM_DEFINE_ERROR(RankDeficient);
EMSIM_DEFINE_ERROR(FullRank);
EMSIM_DEFINE_ERROR(NotIrreducible);
EMSIM_DEFINE_ERROR(NonInvertibleAffine);
EMSIM_DEFINE_ERROR(BadLength);
EMSIM_DEFINE_ERROR(BadDigit);
EMSIM_DEFINE_ERROR(NotBijective);
EMSIM_DEFINE_ERROR(EpsilonOutOfRange);
EMSIM_DEFINE_ERROR(RangeOverlap);
EMSIM_DEFINE_ERROR(NonPermutationGate);
EMSIM_DEFINE_ERROR(ShotBudgetExhausted);
EMSIM_DEFINE_ERROR(InsufficientRank);
EMSIM_DEFINE_ERROR(ParseError);

#undef EMSIM_DEFINE_ERROR

}  // namespace emsim

#endif
