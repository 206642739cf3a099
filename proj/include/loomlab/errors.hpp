#pragma once

#include <stdexcept>
#include <string>

namespace loomlab {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

#define LOOMLAB_DEFINE_ERROR(Name)                            \
    struct Name : Error {                                     \
        explicit Name(const std::string& msg) : Error(msg) {} \
    }

LOOMLAB_DEFINE_ERROR(IndexOutOfRange);
LOOMLAB_DEFINE_ERROR(EmptyEdge);
LOOMLAB_DEFINE_ERROR(EmptyHypergraph);
LOOMLAB_DEFINE_ERROR(UniverseMismatch);
LOOMLAB_DEFINE_ERROR(UniverseOverlap);
LOOMLAB_DEFINE_ERROR(NotUniform);
LOOMLAB_DEFINE_ERROR(NotGrounded);
LOOMLAB_DEFINE_ERROR(NotRegular);
LOOMLAB_DEFINE_ERROR(OddOrder);
LOOMLAB_DEFINE_ERROR(UniformityMismatch);
LOOMLAB_DEFINE_ERROR(EvenSubset);
LOOMLAB_DEFINE_ERROR(TooLarge);
LOOMLAB_DEFINE_ERROR(Unsupported);
LOOMLAB_DEFINE_ERROR(HypothesisUnmet);
LOOMLAB_DEFINE_ERROR(ParseError);

#undef LOOMLAB_DEFINE_ERROR

}  // namespace loomlab
