#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Cartan data, positive roots, reflection words, inversion sets and weight
// arithmetic for the classical families A, B, C, D.
//
// Conventions used throughout:
//  - Simple roots are indexed 1..n; coefficient vectors live in the simple
//    root basis (length n, entries in {0,1,2}).
//  - Weights are stored in fundamental-weight coordinates: coordinate k of a
//    weight mu is the pairing <mu, alpha_k^vee>.
//  - The Cartan matrix M satisfies M[i][j] = <alpha_j, alpha_i^vee>, so the
//    j-th COLUMN is the fundamental-weight coordinate vector of alpha_j.

namespace dempoly {

enum class Family { A, B, C, D };

enum class DVariant { none, hatted, full };

struct LieType {
    Family family = Family::A;
    int rank = 1;
};

Family family_from_char(char c);
char family_to_char(Family f);

// Throws std::invalid_argument on out-of-domain rank (A: n>=1, B/C: n>=2,
// D: n>=4; D3 is rejected rather than aliased to A3).
void validate(const LieType& t);

using Coeffs = std::vector<int>;  // simple-root basis
using Weight = std::vector<int>;  // fundamental-weight basis

bool is_dominant(const Weight& m);
int weight_total(const Weight& m);

// A positive root labelled a[i,j] (barred=false) or a[i,-j] (barred=true),
// with its expansion in simple roots.
struct Root {
    int i = 0;
    int j = 0;
    bool barred = false;
    Coeffs coeffs;

    bool operator==(const Root& o) const {
        return i == o.i && j == o.j && barred == o.barred;
    }
};

std::string root_label(const Root& r);
// Parses "a[i,j]" / "a[i,-j]"; throws std::invalid_argument on malformed input.
std::pair<int, std::pair<int, bool>> parse_root_label(const std::string& s);

// All positive roots with their coefficient vectors.
// Counts: n(n+1)/2 (A), n^2 (B and C), n(n-1) (D).
// In type C the label (i, bar n) is normalized to (i, n, unbarred).
std::vector<Root> build_positive_roots(const LieType& t);

// Root of the given type from its label; throws if no such positive root.
Root root_from_label(const LieType& t, int i, int j, bool barred);

std::vector<std::vector<int>> cartan_matrix(const LieType& t);

// s_a acting on a vector in the simple-root basis.
Coeffs reflect_root_coords(const LieType& t, int a, const Coeffs& v);
// s_a acting on a vector in fundamental-weight coordinates.
Weight reflect_weight_coords(const LieType& t, int a, const Weight& m);

struct ReflectionWord {
    LieType type;
    int start = 1;
    DVariant variant = DVariant::none;
    // Present only for type A words with hook end < n.
    int hook_end = 0;
    std::vector<int> letters;
};

// The word s_i s_{i+1} ... s_n ... s_{i+1} s_i (A/B/C), the type D hatted
// word s_i ... s_{n-1} s_n s_{n-2} ... s_i, or the type D full word
// s_i ... s_{n-1} s_n s_{n-1} ... s_i.  For type A, hook_end = k < n gives
// s_i ... s_k ... s_i.
ReflectionWord reflection_word(const LieType& t, int start,
                               DVariant variant = DVariant::none,
                               int hook_end = 0);

// The asymmetric subword s_k s_{k+1} ... s_n s_{n-1} ... s_i of
// reflection_word(t, i), for i < k <= n.  For D hatted the second s_{n-1}
// is omitted as in the main word.
ReflectionWord subword(const LieType& t, int start, int substart,
                       DVariant variant = DVariant::none);

// w applied to a weight, letters composed left-to-right (rightmost letter
// acts first).
Weight weyl_apply(const ReflectionWord& w, const Weight& m);
Coeffs weyl_apply_root(const ReflectionWord& w, const Coeffs& v);

struct RootPoset {
    std::vector<Root> elements;                 // canonical chain order
    std::vector<std::pair<int, int>> covers;    // indices, (larger, smaller)
};

// R_w^- = R^+ ∩ w^{-1}(R^-), computed from the word as a composite root map
// (no reducedness assumption), sorted into the canonical chain order.
RootPoset inversion_set(const ReflectionWord& w);

// True iff |R_w^-| equals the letter count.
bool is_reduced(const ReflectionWord& w);

// inversion_set + reducedness assertion; throws std::invalid_argument on a
// non-reduced word (the type D full words are the known non-reduced family).
RootPoset inversion_set_checked(const ReflectionWord& w);

// Reduced word for the same Weyl element as a D-full word:
// [i, ..., n-2, n, n-2, ..., i].  Asserts elementwise agreement with w on the
// simple roots.  Identity on already-reduced words.
ReflectionWord reduced_equivalent(const ReflectionWord& w);

// lambda - sum s_alpha * alpha, in fundamental-weight coordinates.
Weight weight_of_point(const std::vector<int>& s, const Weight& lambda,
                       const RootPoset& poset, const LieType& t);

}  // namespace dempoly
