#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "dempoly/polytope.hpp"

// Monomial generators of the annihilating ideal and the independent
// complement-up-set oracle.

namespace dempoly {

struct GeneratorInfo {
    std::string path_id;
    PathKind kind = PathKind::dyck;
    long long weighted_sum = 0;
};

struct GeneratorSet {
    std::map<MultiExponent, GeneratorInfo> generators;
};

// For each all-ones path p: every s supported on p with sum(s) = q_p + 1.
// For each coefficient path: every s supported on p with weighted sum
// q_p + 1, plus those with weighted sum q_p + 2 supported only on the
// doubled coordinates (the parity-gap minimal violators).
GeneratorSet theorem_generators(const System& sys, const Weight& lambda);

// Minimal elements, under componentwise <=, of (box \ S(lambda)).  The box
// is given per coordinate (inclusive upper bounds); it must exceed the
// componentwise maxima of S(lambda).
std::set<MultiExponent> complement_min_generators(const System& sys, const Weight& lambda,
                                                  const std::vector<int>& box);

// Default box: componentwise max over S(lambda), plus pad.
std::vector<int> default_box(const System& sys, const Weight& lambda, int pad = 2);

struct UpsetReport {
    bool equal = false;
    // Complement points not above any theorem generator.
    std::vector<MultiExponent> uncovered;
    // Theorem generators inside S(lambda) (soundness failures).
    std::vector<MultiExponent> unsound;
};

// Up-closure of theorem_generators within the box == box \ S(lambda)?
UpsetReport upset_equality(const System& sys, const Weight& lambda, const std::vector<int>& box);

// Homogeneous-lexicographic key for the paper's total order on monomials:
// total degree first, then exponents read in the type-specific order (the
// reverse of the chain order).  Keys compare with std::vector's operator<,
// larger key = larger monomial.
std::vector<long long> canonical_monomial_key(const MultiExponent& s);

}  // namespace dempoly
