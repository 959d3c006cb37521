#include "dempoly/demchar.hpp"

#include <algorithm>

namespace dempoly {

CharacterPoly demazure_op(const LieType& t, int a, const CharacterPoly& f) {
    const int n = t.rank;
    if (a < 1 || a > n) throw std::invalid_argument("Demazure operator index out of range");
    const auto m = cartan_matrix(t);
    CharacterPoly out;
    for (const auto& [mu, mult] : f.terms) {
        const int k = mu[static_cast<size_t>(a - 1)];
        if (k >= 0) {
            Weight w = mu;
            for (int step = 0; step <= k; ++step) {
                out.add(w, mult);
                if (step < k)
                    for (int b = 0; b < n; ++b)
                        w[static_cast<size_t>(b)] -= m[static_cast<size_t>(b)][static_cast<size_t>(a - 1)];
            }
        } else if (k <= -2) {
            Weight w = mu;
            for (int step = 1; step <= -k - 1; ++step) {
                for (int b = 0; b < n; ++b)
                    w[static_cast<size_t>(b)] += m[static_cast<size_t>(b)][static_cast<size_t>(a - 1)];
                out.add(w, -mult);
            }
        }
        // k == -1 contributes nothing
    }
    return out;
}

CharacterPoly demazure_character(const ReflectionWord& word, const Weight& lambda) {
    if (static_cast<int>(lambda.size()) != word.type.rank)
        throw std::invalid_argument("weight length does not match rank");
    if (!is_dominant(lambda)) throw std::invalid_argument("weight is not dominant");
    if (!is_reduced(word))
        throw std::invalid_argument("demazure_character requires a reduced word");
    CharacterPoly c;
    c.add(lambda, 1);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
        c = demazure_op(word.type, *it, c);
    for (const auto& [w, mult] : c.terms)
        if (mult <= 0) throw std::logic_error("Demazure character with nonpositive multiplicity");
    return c;
}

long long dimension(const CharacterPoly& c) {
    long long d = 0;
    for (const auto& [w, mult] : c.terms) d += mult;
    return d;
}

VerifyReport verify_against_points(const ReflectionWord& word, const Weight& lambda,
                                   const std::vector<MultiExponent>& points,
                                   const RootPoset& poset) {
    const ReflectionWord red = is_reduced(word) ? word : reduced_equivalent(word);
    const CharacterPoly chr = demazure_character(red, lambda);

    VerifyReport rep;
    rep.points = static_cast<long long>(points.size());
    rep.dim = dimension(chr);
    rep.dims_match = (rep.points == rep.dim);

    // V_w(lambda) = w (U(n_w^-) v_lambda) w^{-1}: character terms are the
    // w-image of the PBW-picture point weights.
    CharacterPoly from_points;
    for (const auto& s : points)
        from_points.add(weyl_apply(red, weight_of_point(s, lambda, poset, word.type)), 1);

    rep.weights_match = (from_points == chr);
    if (!rep.weights_match) {
        for (const auto& [w, mult] : from_points.terms) {
            auto it = chr.terms.find(w);
            if (it == chr.terms.end() || it->second != mult) { rep.first_mismatch = w; break; }
        }
        if (!rep.first_mismatch)
            for (const auto& [w, mult] : chr.terms)
                if (from_points.terms.find(w) == from_points.terms.end()) { rep.first_mismatch = w; break; }
    }
    return rep;
}

}  // namespace dempoly
