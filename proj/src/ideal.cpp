#include "dempoly/ideal.hpp"

#include <algorithm>
#include <numeric>

namespace dempoly {

namespace {

// All s supported on the path's roots with weighted sum exactly `target`;
// if doubled_only, support is restricted to coefficient-2 roots.
void supported_with_sum(const PathSpec& p, size_t ncoord, long long target, bool doubled_only,
                        std::vector<MultiExponent>& out) {
    std::vector<std::pair<int, int>> slots;  // (position, coefficient)
    for (size_t q = 0; q < p.roots.size(); ++q) {
        if (doubled_only && p.coeffs[q] != 2) continue;
        slots.push_back({p.roots[q], p.coeffs[q]});
    }
    MultiExponent cur(ncoord, 0);
    auto rec = [&](auto&& self, size_t at, long long remaining) -> void {
        if (at == slots.size()) {
            if (remaining == 0) out.push_back(cur);
            return;
        }
        const auto [pos, c] = slots[at];
        if (at + 1 == slots.size()) {
            if (remaining % c == 0) {
                cur[static_cast<size_t>(pos)] = static_cast<int>(remaining / c);
                out.push_back(cur);
                cur[static_cast<size_t>(pos)] = 0;
            }
            return;
        }
        for (long long v = 0; v * c <= remaining; ++v) {
            cur[static_cast<size_t>(pos)] = static_cast<int>(v);
            self(self, at + 1, remaining - v * c);
        }
        cur[static_cast<size_t>(pos)] = 0;
    };
    rec(rec, 0, target);
}

}  // namespace

GeneratorSet theorem_generators(const System& sys, const Weight& lambda) {
    if (!is_dominant(lambda)) throw std::invalid_argument("weight is not dominant");
    const size_t ncoord = sys.poset.elements.size();
    GeneratorSet gs;
    for (const auto& p : sys.paths) {
        const long long q = bound_value(p.bound, lambda);
        const bool has_coeffs = std::any_of(p.coeffs.begin(), p.coeffs.end(),
                                            [](int c) { return c != 1; });
        std::vector<MultiExponent> found;
        supported_with_sum(p, ncoord, q + 1, false, found);
        for (auto& s : found)
            gs.generators.emplace(std::move(s), GeneratorInfo{p.id, p.kind, q + 1});
        if (has_coeffs) {
            // Parity gap: points reaching only even weighted sums on the
            // doubled coordinates violate first at q+2.
            std::vector<MultiExponent> found2;
            supported_with_sum(p, ncoord, q + 2, true, found2);
            for (auto& s : found2)
                gs.generators.emplace(std::move(s), GeneratorInfo{p.id, p.kind, q + 2});
        }
    }
    return gs;
}

std::vector<int> default_box(const System& sys, const Weight& lambda, int pad) {
    const auto pts = enumerate_points(sys, lambda);
    std::vector<int> box(sys.poset.elements.size(), 0);
    for (const auto& s : pts)
        for (size_t c = 0; c < box.size(); ++c) box[c] = std::max(box[c], s[c]);
    for (auto& b : box) b += pad;
    return box;
}

namespace {

void check_box(const System& sys, const Weight& lambda, const std::vector<int>& box) {
    if (box.size() != sys.poset.elements.size())
        throw std::invalid_argument("box length mismatch");
    const auto maxima = default_box(sys, lambda, 0);
    for (size_t c = 0; c < box.size(); ++c)
        if (box[c] < maxima[c] + 1)
            throw std::invalid_argument("box too small: must exceed the componentwise maxima of S");
}

template <typename F>
void for_each_box_point(const std::vector<int>& box, F&& f) {
    MultiExponent cur(box.size(), 0);
    auto rec = [&](auto&& self, size_t c) -> void {
        if (c == box.size()) { f(cur); return; }
        for (int v = 0; v <= box[c]; ++v) {
            cur[c] = v;
            self(self, c + 1);
        }
        cur[c] = 0;
    };
    rec(rec, 0);
}

}  // namespace

namespace {

struct FastMembership {
    std::vector<Inequality> ineqs;
    explicit FastMembership(const System& sys, const Weight& lambda)
        : ineqs(instantiate(sys, lambda)) {}
    bool operator()(const MultiExponent& s) const {
        for (const auto& iq : ineqs) {
            long long lhs = 0;
            for (size_t c = 0; c < s.size(); ++c)
                lhs += static_cast<long long>(iq.coeffs[c]) * s[c];
            if (lhs > iq.rhs) return false;
        }
        return true;
    }
};

}  // namespace

std::set<MultiExponent> complement_min_generators(const System& sys, const Weight& lambda,
                                                  const std::vector<int>& box) {
    check_box(sys, lambda, box);
    const FastMembership in_s(sys, lambda);
    std::set<MultiExponent> mins;
    for_each_box_point(box, [&](MultiExponent& s) {
        if (in_s(s)) return;
        for (size_t c = 0; c < s.size(); ++c) {
            if (s[c] == 0) continue;
            s[c] -= 1;
            const bool inside = in_s(s);
            s[c] += 1;
            if (!inside) return;  // some decrement stays outside: not minimal
        }
        mins.insert(s);
    });
    return mins;
}

UpsetReport upset_equality(const System& sys, const Weight& lambda, const std::vector<int>& box) {
    check_box(sys, lambda, box);
    const GeneratorSet gs = theorem_generators(sys, lambda);
    const FastMembership in_s(sys, lambda);
    UpsetReport rep;
    for (const auto& [g, info] : gs.generators)
        if (in_s(g)) rep.unsound.push_back(g);
    auto dominates_some_gen = [&](const MultiExponent& s) {
        for (const auto& [g, info] : gs.generators) {
            bool ge = true;
            for (size_t c = 0; c < s.size(); ++c)
                if (s[c] < g[c]) { ge = false; break; }
            if (ge) return true;
        }
        return false;
    };
    rep.equal = true;
    for_each_box_point(box, [&](const MultiExponent& s) {
        if (!in_s(s) && !dominates_some_gen(s)) {
            rep.equal = false;
            rep.uncovered.push_back(s);
        }
    });
    if (!rep.unsound.empty()) rep.equal = false;
    return rep;
}

std::vector<long long> canonical_monomial_key(const MultiExponent& s) {
    std::vector<long long> key;
    key.push_back(std::accumulate(s.begin(), s.end(), 0LL));
    for (auto it = s.rbegin(); it != s.rend(); ++it) key.push_back(*it);
    return key;
}

}  // namespace dempoly
