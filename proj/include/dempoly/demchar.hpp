#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dempoly/polytope.hpp"

// Independent oracle: Demazure characters computed by composing Demazure
// operators along a reduced word.  Characters are sparse exact-integer
// multisets of weights in fundamental-weight coordinates.

namespace dempoly {

struct CharacterPoly {
    std::map<Weight, long long> terms;

    void add(const Weight& w, long long mult) {
        if (mult == 0) return;
        auto [it, inserted] = terms.emplace(w, mult);
        if (!inserted) {
            it->second += mult;
            if (it->second == 0) terms.erase(it);
        }
    }
    bool operator==(const CharacterPoly& o) const { return terms == o.terms; }
};

// The isobaric divided-difference operator D_a, extended linearly:
// with k = <mu, alpha_a^vee>,
//   k >= 0:  e^mu -> sum_{t=0..k} e^{mu - t alpha_a}
//   k = -1:  e^mu -> 0
//   k <= -2: e^mu -> -sum_{t=1..-k-1} e^{mu + t alpha_a}
CharacterPoly demazure_op(const LieType& t, int a, const CharacterPoly& f);

// D_{i1}(D_{i2}(... D_{il}(e^lambda))) for letters i1..il read left to right.
// Requires lambda dominant and the word reduced.
CharacterPoly demazure_character(const ReflectionWord& word, const Weight& lambda);

long long dimension(const CharacterPoly& c);

struct VerifyReport {
    bool dims_match = false;
    bool weights_match = false;
    long long points = 0;
    long long dim = 0;
    std::optional<Weight> first_mismatch;  // a weight whose multiplicities differ
    bool pass() const { return dims_match && weights_match; }
};

// Compares |S| with the character dimension and the w-twisted point-weight
// multiset {w(lambda - sum s_alpha alpha)} with the character terms.  For the
// type D full word the character is computed along the derived reduced word
// for the same element.
VerifyReport verify_against_points(const ReflectionWord& word, const Weight& lambda,
                                   const std::vector<MultiExponent>& points,
                                   const RootPoset& poset);

}  // namespace dempoly
