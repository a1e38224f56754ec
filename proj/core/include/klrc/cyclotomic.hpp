#pragma once

#include <map>
#include <vector>

#include "klrc/cartan.hpp"
#include "klrc/klr_algebra.hpp"

namespace klrc {

struct CyclotomicCaps {
    int max_dot_exponent = 12;
    long long memory_cap_mb = 512;

    // Reads KLR_CRYSTAL_CAP_MB from the environment when present.
    static CyclotomicCaps from_environment();
};

// Computed quotient R^Lambda(nu): a basis of surviving monomials per degree,
// the graded and total dimensions, the dot-nilpotency witness, and the rank
// of the defining ideal per degree.
struct CyclotomicPresentation {
    RootVector nu;
    DominantWeight lambda;
    int nilpotency_witness = 0;
    long long total_dimension = 0;
    std::map<long long, long long> graded_dimension;
    std::map<long long, std::vector<PbwMonomial>> basis_by_degree;
    std::map<long long, std::size_t> ideal_rank_by_degree;
    std::vector<int> strand_nilpotency;
};

CyclotomicPresentation cyclotomic_build(const KlrAlgebra& algebra, const RootVector& nu,
                                        const DominantWeight& lambda,
                                        const CyclotomicCaps& caps =
                                            CyclotomicCaps::from_environment());

// Least k with x_r^k = 0 in the quotient, maximised over idempotents.
int dot_nilpotency(const CyclotomicPresentation& presentation, int strand);

}  // namespace klrc
