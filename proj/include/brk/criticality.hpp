#ifndef BRK_CRITICALITY_HPP
#define BRK_CRITICALITY_HPP

#include <cstdint>
#include <vector>

#include "brk/polymat.hpp"

namespace brkit {

struct RndResult {
    long dim_intersection = 0;  // stabilized dim of the sampled condition space
    long dim_space = 0;         // dim of the span of E's slices
    bool contained = false;     // E lies inside the sampled intersection
    bool certified = false;     // contained and the two dimensions agree
    int samples_used = 0;
    std::vector<long> dim_history;
};

// Rank-neutral directions of E: matrices X with ker_L(Y) X ker_R(Y) = 0 for
// maximal-rank members Y of E.  Samples members until the condition space
// dimension is stable three times in a row, then checks E sits inside it.
// When the intersection is no bigger than E itself, E is maximal among
// spaces of its bounded rank containing it (a one-sided certificate).
RndResult rnd_space(const SpaceOfMatrices& e, std::uint64_t seed = 0,
                    int max_samples = 60);

}  // namespace brkit

#endif
