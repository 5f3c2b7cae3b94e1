#pragma once

#include <cstdint>

namespace convcode {

// Default ceiling on the number of states q^delta a weight adjacency
// matrix may have.  Overridable per call and from the command line.
inline constexpr std::uint64_t kDefaultMaxStates = 4096;

// Default ceiling on the number of candidates an equivalence search may
// examine (automorphism x GL or automorphism x permutation x scaling).
inline constexpr std::uint64_t kDefaultSearchCap = 2'000'000;

}  // namespace convcode
