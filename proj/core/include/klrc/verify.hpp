#pragma once

#include <string>
#include <vector>

#include "klrc/binf.hpp"

namespace klrc {

// Axiom families checked by verify_axioms:
//   C        structural crystal axioms C1..C5 on the generated graph
//   KS       highest-node and strict-embedding axioms B1..B7
//   PSI      coordinatewise commutation of the vertex-first embeddings with
//            every lowering edge
//   JUMP     jump_i >= 0 and the jump recursion along i-edges
//   EPSJUMP  eps_vee step behaviour along edges (and, for highest-weight
//            crystals, the eps_i window under f_j for i != j)
enum class VerificationSuite { C, KS, PSI, JUMP, EPSJUMP };

std::string to_string(VerificationSuite suite);
VerificationSuite suite_from_string(const std::string& name);

struct VerificationReport {
    VerificationSuite suite = VerificationSuite::C;
    bool passed = true;
    long long checks = 0;
    long long violations = 0;
    std::vector<std::string> witnesses;  // bounded sample of failure descriptions

    std::string summary() const;
};

VerificationReport verify_axioms(const CrystalGraph& g, VerificationSuite suite);

}  // namespace klrc
