#pragma once

#include <map>
#include <string>
#include <vector>

#include "dempoly/rootsys.hpp"

// Per-type path families (Dyck, degree, coefficient) and their symbolic
// bounds.  A path contributes one inequality
//     sum_{alpha in p} c_alpha * s_alpha  <=  b . m
// where the coefficient tuple c has entries in {1,2} (all ones unless the
// path is a coefficient path) and b is a nonnegative integer vector over the
// weight coordinates m_1..m_n.

namespace dempoly {

enum class PathKind { dyck, degree, coeff };

std::string path_kind_name(PathKind k);

struct PathSpec {
    std::string id;          // stable identifier, e.g. "C:coeff[j=2,k=1]"
    PathKind kind = PathKind::dyck;
    std::map<std::string, int> params;
    std::vector<int> roots;  // positions into the system's chain order
    std::vector<int> coeffs; // parallel to roots
    std::vector<int> bound;  // length rank; bound value at lambda is bound.m
};

struct System {
    LieType type;
    int start = 1;
    DVariant variant = DVariant::none;
    int hook_end = 0;    // type A only; 0 means rank
    int substart = 0;    // 0 = full word, else the face subword parameter k
    bool include_redundant = false;
    ReflectionWord word;
    RootPoset poset;
    std::vector<PathSpec> paths;
};

// Assembles the word, its inversion set and the paper's path families for
// the given parameters.  By default inequalities dominated componentwise by
// another emitted inequality are dropped; include_redundant keeps them.
System build_system(const LieType& t, int start, DVariant variant = DVariant::none,
                    int substart = 0, bool include_redundant = false, int hook_end = 0);

// Maximum of sum(s) over S_w(lambda), by enumeration.  For type A the closed
// form (m_i + 2 m_{i+1} + ... + 2 m_{k-1} + m_k over the hook interval) is
// also computed and the two are asserted equal.
long long max_pbw_degree(const System& sys, const Weight& lambda);

// Test-style helper: the Dyck-path predicate of the type A definition.  A
// decreasing root sequence is Dyck when, for every comparable pair in it,
// each rectangle-completion label that is a genuine positive root lies in
// R_w^-.  Used by the property suite; generation uses the explicit families.
bool is_dyck_sequence_A(const std::vector<Root>& seq, const std::vector<Root>& rw);

}  // namespace dempoly
