#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dempoly/pathgen.hpp"

// Instantiation of path systems at a weight, exact lattice-point
// enumeration, and the Minkowski / normality / face checks.  All arithmetic
// is exact integer arithmetic.

namespace dempoly {

using MultiExponent = std::vector<int>;  // indexed by the system's chain order

struct Inequality {
    std::vector<int> coeffs;  // dense, over the chain order
    std::vector<int> bound;   // symbolic bound, over m_1..m_n
    long long rhs = 0;        // bound instantiated at a weight
    const PathSpec* source = nullptr;
};

long long bound_value(const std::vector<int>& bound, const Weight& lambda);

// Dense inequalities at lambda.  Throws on a non-dominant weight; throws an
// unbounded-system error if some coordinate has no positive coefficient
// anywhere (cannot happen for the generated systems, checked regardless).
std::vector<Inequality> instantiate(const System& sys, const Weight& lambda);

struct Violation {
    const PathSpec* path;
    long long lhs;
    long long rhs;
};

bool membership(const MultiExponent& s, const System& sys, const Weight& lambda,
                std::vector<Violation>* violations = nullptr);

// All nonnegative integer points of the instantiated system, in ascending
// lexicographic order of the chain coordinates.  max_points = 0 means no cap;
// a positive cap throws when exceeded.
std::vector<MultiExponent> enumerate_points(const System& sys, const Weight& lambda,
                                            long long max_points = 0);

// Per-coordinate box bound: min over covering inequalities of rhs/coeff.
std::vector<long long> coordinate_box(const System& sys, const Weight& lambda);

struct MinkowskiResult {
    bool equal = false;
    bool sum_subset = false;                  // S(lambda)+S(mu) ⊆ S(lambda+mu)
    std::optional<MultiExponent> witness;     // a point of the symmetric difference
};

MinkowskiResult minkowski_check(const System& sys, const Weight& lambda, const Weight& mu);

// Greedy decomposition of s in S_w(lambda) into fundamental summands
// m_i in S_w(omega_i) following the Minkowski-decomposition proof, with an
// exhaustive fallback; returns one (i, point) entry per omega_i copy of
// lambda.  Throws if s is not in S_w(lambda).
std::vector<std::pair<int, MultiExponent>> minkowski_decompose(const System& sys,
                                                               const MultiExponent& s,
                                                               const Weight& lambda);

// S(k*lambda) == k-fold Minkowski sum of S(lambda), for k = 1..kmax.
std::vector<bool> normality_check(const System& sys, const Weight& lambda, int kmax);

struct FaceCheckResult {
    bool equal = false;
    std::optional<MultiExponent> witness;  // in the ambient coordinates
    size_t face_points = 0;
    size_t slice_points = 0;
};

// Prop. on subwords: the zero-padding of S_u(lambda) (u the subword with the
// given substart) must equal the slice of S_w(lambda) where all coordinates
// outside R_u^- vanish.
FaceCheckResult face_embedding_check(const LieType& t, int start, int substart,
                                     const Weight& lambda, DVariant variant = DVariant::none);

}  // namespace dempoly
