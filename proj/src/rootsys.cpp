#include "dempoly/rootsys.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>

namespace dempoly {

Family family_from_char(char c) {
    switch (c) {
        case 'A': case 'a': return Family::A;
        case 'B': case 'b': return Family::B;
        case 'C': case 'c': return Family::C;
        case 'D': case 'd': return Family::D;
        default: throw std::invalid_argument(std::string("unknown type family: ") + c);
    }
}

char family_to_char(Family f) {
    switch (f) {
        case Family::A: return 'A';
        case Family::B: return 'B';
        case Family::C: return 'C';
        case Family::D: return 'D';
    }
    return '?';
}

void validate(const LieType& t) {
    const int n = t.rank;
    switch (t.family) {
        case Family::A:
            if (n < 1) throw std::invalid_argument("type A requires rank >= 1");
            break;
        case Family::B:
        case Family::C:
            if (n < 2)
                throw std::invalid_argument(std::string("type ") + family_to_char(t.family) +
                                            " requires rank >= 2");
            break;
        case Family::D:
            if (n < 4) throw std::invalid_argument("type D requires rank >= 4 (D3 is rejected)");
            break;
    }
}

bool is_dominant(const Weight& m) {
    return std::all_of(m.begin(), m.end(), [](int x) { return x >= 0; });
}

int weight_total(const Weight& m) { return std::accumulate(m.begin(), m.end(), 0); }

std::string root_label(const Root& r) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "a[%d,%s%d]", r.i, r.barred ? "-" : "", r.j);
    return buf;
}

std::pair<int, std::pair<int, bool>> parse_root_label(const std::string& s) {
    int i = 0, j = 0;
    char sign = 0;
    if (std::sscanf(s.c_str(), "a[%d,-%d]", &i, &j) == 2) sign = '-';
    else if (std::sscanf(s.c_str(), "a[%d,%d]", &i, &j) == 2) sign = '+';
    else throw std::invalid_argument("malformed root label: " + s);
    if (i <= 0 || j <= 0) throw std::invalid_argument("malformed root label: " + s);
    return {i, {j, sign == '-'}};
}

namespace {

Coeffs interval_ones(int n, int lo, int hi) {  // 1-based inclusive, empty if lo > hi
    Coeffs v(static_cast<size_t>(n), 0);
    for (int l = lo; l <= hi; ++l) v[static_cast<size_t>(l - 1)] = 1;
    return v;
}

Coeffs root_coeffs(const LieType& t, int i, int j, bool barred) {
    const int n = t.rank;
    Coeffs v(static_cast<size_t>(n), 0);
    auto add = [&](int lo, int hi, int c) {
        for (int l = lo; l <= hi; ++l) v[static_cast<size_t>(l - 1)] += c;
    };
    switch (t.family) {
        case Family::A:
            add(i, j, 1);
            break;
        case Family::B:
            if (!barred) add(i, j, 1);
            else { add(i, j - 1, 1); add(j, n, 2); }
            break;
        case Family::C:
            if (!barred) add(i, j, 1);
            else { add(i, j - 1, 1); add(j, n - 1, 2); add(n, n, 1); }
            break;
        case Family::D:
            if (!barred) add(i, j, 1);
            else { add(i, n - 2, 1); add(j, n, 1); }
            break;
    }
    return v;
}

}  // namespace

Root root_from_label(const LieType& t, int i, int j, bool barred) {
    validate(t);
    const int n = t.rank;
    auto bad = [&] {
        Root r{i, j, barred, {}};
        throw std::invalid_argument("no such positive root: " + root_label(r) + " in type " +
                                    family_to_char(t.family) + std::to_string(n));
    };
    if (i < 1 || j < 1 || i > n || j > n) bad();
    switch (t.family) {
        case Family::A:
            if (barred || i > j) bad();
            break;
        case Family::B:
            if (!barred && i > j) bad();
            if (barred && (j < 2 || i >= j)) bad();
            break;
        case Family::C:
            if (barred && j == n) barred = false;  // a[i,-n] == a[i,n]
            if (!barred && i > j) bad();
            if (barred && i > j) bad();
            break;
        case Family::D:
            if (!barred && (i > j || j > n - 1)) bad();
            if (barred && i >= j) bad();
            break;
    }
    return Root{i, j, barred, root_coeffs(t, i, j, barred)};
}

std::vector<Root> build_positive_roots(const LieType& t) {
    validate(t);
    const int n = t.rank;
    std::vector<Root> out;
    switch (t.family) {
        case Family::A:
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) out.push_back(root_from_label(t, i, j, false));
            break;
        case Family::B:
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) out.push_back(root_from_label(t, i, j, false));
            for (int j = 2; j <= n; ++j)
                for (int i = 1; i < j; ++i) out.push_back(root_from_label(t, i, j, true));
            break;
        case Family::C:
            for (int i = 1; i <= n; ++i)
                for (int j = i; j <= n; ++j) out.push_back(root_from_label(t, i, j, false));
            for (int i = 1; i <= n - 1; ++i)
                for (int j = i; j <= n - 1; ++j) out.push_back(root_from_label(t, i, j, true));
            break;
        case Family::D:
            for (int i = 1; i <= n - 1; ++i)
                for (int j = i; j <= n - 1; ++j) out.push_back(root_from_label(t, i, j, false));
            for (int i = 1; i <= n - 1; ++i)
                for (int j = i + 1; j <= n; ++j) out.push_back(root_from_label(t, i, j, true));
            break;
    }
    return out;
}

std::vector<std::vector<int>> cartan_matrix(const LieType& t) {
    validate(t);
    const int n = t.rank;
    std::vector<std::vector<int>> m(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) m[i][i] = 2;
    for (int i = 0; i + 1 < n; ++i) { m[i][i + 1] = -1; m[i + 1][i] = -1; }
    switch (t.family) {
        case Family::A:
            break;
        case Family::B:  // alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
            if (n >= 2) m[n - 1][n - 2] = -2;
            break;
        case Family::C:  // alpha_n long: <alpha_n, alpha_{n-1}^vee> = -2
            if (n >= 2) m[n - 2][n - 1] = -2;
            break;
        case Family::D:  // fork at node n-2
            m[n - 1][n - 2] = 0; m[n - 2][n - 1] = 0;
            m[n - 1][n - 3] = -1; m[n - 3][n - 1] = -1;
            break;
    }
    return m;
}

Coeffs reflect_root_coords(const LieType& t, int a, const Coeffs& v) {
    const int n = t.rank;
    if (a < 1 || a > n) throw std::invalid_argument("reflection index out of range");
    if (static_cast<int>(v.size()) != n) throw std::invalid_argument("coefficient vector size mismatch");
    const auto m = cartan_matrix(t);
    long long pairing = 0;  // <v, alpha_a^vee>
    for (int j = 0; j < n; ++j) pairing += static_cast<long long>(m[a - 1][j]) * v[static_cast<size_t>(j)];
    Coeffs out = v;
    out[static_cast<size_t>(a - 1)] -= static_cast<int>(pairing);
    return out;
}

Weight reflect_weight_coords(const LieType& t, int a, const Weight& w) {
    const int n = t.rank;
    if (a < 1 || a > n) throw std::invalid_argument("reflection index out of range");
    if (static_cast<int>(w.size()) != n) throw std::invalid_argument("weight vector size mismatch");
    const auto m = cartan_matrix(t);
    Weight out = w;
    const int c = w[static_cast<size_t>(a - 1)];
    for (int i = 0; i < n; ++i) out[static_cast<size_t>(i)] -= c * m[static_cast<size_t>(i)][static_cast<size_t>(a - 1)];
    return out;
}

ReflectionWord reflection_word(const LieType& t, int start, DVariant variant, int hook_end) {
    validate(t);
    const int n = t.rank;
    if (start < 1 || start > n) throw std::invalid_argument("start index out of range");
    if (t.family == Family::D) {
        if (variant == DVariant::none) variant = DVariant::hatted;
        if (start > n - 1) throw std::invalid_argument("type D start must be <= rank-1");
    } else if (variant != DVariant::none) {
        throw std::invalid_argument("word variant only applies to type D");
    }
    if (hook_end != 0 && t.family != Family::A)
        throw std::invalid_argument("hook end only applies to type A");
    int top = n;
    if (t.family == Family::A && hook_end != 0) {
        if (hook_end < start || hook_end > n) throw std::invalid_argument("hook end out of range");
        top = hook_end;
    }

    ReflectionWord w;
    w.type = t;
    w.start = start;
    w.variant = variant;
    w.hook_end = (t.family == Family::A && top != n) ? top : 0;
    for (int l = start; l <= top; ++l) w.letters.push_back(l);
    const int back_from = (variant == DVariant::hatted) ? top - 2 : top - 1;
    for (int l = back_from; l >= start; --l) w.letters.push_back(l);
    return w;
}

ReflectionWord subword(const LieType& t, int start, int substart, DVariant variant) {
    validate(t);
    const int n = t.rank;
    if (t.family == Family::D && variant == DVariant::none) variant = DVariant::hatted;
    if (t.family == Family::D && variant == DVariant::full)
        throw std::invalid_argument("subwords of the type D full word are not supported");
    if (start < 1 || start > n) throw std::invalid_argument("start index out of range");
    if (substart <= start || substart > n) throw std::invalid_argument("substart must satisfy start < substart <= rank");
    if (t.family == Family::D && start > n - 1) throw std::invalid_argument("type D start must be <= rank-1");

    ReflectionWord w;
    w.type = t;
    w.start = start;
    w.variant = variant;
    for (int l = substart; l <= n; ++l) w.letters.push_back(l);
    const int back_from = (variant == DVariant::hatted) ? n - 2 : n - 1;
    for (int l = back_from; l >= start; --l) w.letters.push_back(l);
    return w;
}

Weight weyl_apply(const ReflectionWord& w, const Weight& m) {
    Weight v = m;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        v = reflect_weight_coords(w.type, *it, v);
    return v;
}

Coeffs weyl_apply_root(const ReflectionWord& w, const Coeffs& v) {
    Coeffs out = v;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        out = reflect_root_coords(w.type, *it, out);
    return out;
}

namespace {

bool is_negative_root_vector(const Coeffs& v) {
    bool nonzero = false;
    for (int c : v) {
        if (c > 0) return false;
        if (c < 0) nonzero = true;
    }
    return nonzero;
}

// Canonical chain order of R_w^- for the generated word families; doubles as
// the structural expectation the computed inversion set is checked against.
std::vector<Root> canonical_order(const ReflectionWord& w) {
    const LieType& t = w.type;
    const int n = t.rank;
    const int i = w.start;
    std::vector<Root> order;
    auto push = [&](int a, int b, bool barred) { order.push_back(root_from_label(t, a, b, barred)); };
    switch (t.family) {
        case Family::A: {
            const int k = w.hook_end ? w.hook_end : n;
            for (int j = i; j <= k; ++j) push(i, j, false);
            for (int b = i + 1; b <= k; ++b) push(b, k, false);
            break;
        }
        case Family::B:
            for (int j = i; j <= n; ++j) push(i, j, false);
            for (int l = n; l >= i + 1; --l) push(i, l, true);
            break;
        case Family::C:
            for (int j = i; j <= n; ++j) push(i, j, false);
            for (int l = n - 1; l >= i + 1; --l) push(i, l, true);
            push(i, i, true);
            break;
        case Family::D:
            if (w.variant == DVariant::full) {
                for (int j = i; j <= n - 2; ++j) push(i, j, false);
                for (int b = i; b <= n - 1; ++b) push(b, n, true);
            } else {
                for (int j = i; j <= n - 1; ++j) push(i, j, false);
                push(i, n, true);
                for (int l = n - 1; l >= i + 1; --l) push(i, l, true);
            }
            break;
    }
    return order;
}

}  // namespace

RootPoset inversion_set(const ReflectionWord& w) {
    const LieType& t = w.type;
    const auto all = build_positive_roots(t);
    std::vector<Root> found;
    for (const auto& r : all)
        if (is_negative_root_vector(weyl_apply_root(w, r.coeffs))) found.push_back(r);

    // Sort by position in the canonical chain of the corresponding full word;
    // the canonical sequence is a superset of every subword's inversion set.
    ReflectionWord full = reflection_word(t, w.start,
                                          t.family == Family::D ? w.variant : DVariant::none,
                                          w.hook_end);
    const auto canon = canonical_order(full);
    auto pos_of = [&](const Root& r) {
        for (size_t p = 0; p < canon.size(); ++p)
            if (canon[p] == r) return static_cast<int>(p);
        return -1;
    };
    for (const auto& r : found)
        if (pos_of(r) < 0)
            throw std::logic_error("inversion set element outside the canonical chain: " + root_label(r));
    std::sort(found.begin(), found.end(),
              [&](const Root& a, const Root& b) { return pos_of(a) < pos_of(b); });

    RootPoset poset;
    poset.elements = std::move(found);
    const int sz = static_cast<int>(poset.elements.size());

    // Covering relations.  Every generated poset is a chain in canonical
    // order except D-hatted when both branch roots alpha_{i,n-1} and
    // alpha_{i,-n} are present: those two are incomparable and the Hasse
    // diagram is the diamond of the displayed poset.
    int p_unb = -1, p_bar = -1;
    if (t.family == Family::D && w.variant != DVariant::full) {
        const int n = t.rank;
        for (int p = 0; p < sz; ++p) {
            const Root& r = poset.elements[static_cast<size_t>(p)];
            if (!r.barred && r.j == n - 1) p_unb = p;
            if (r.barred && r.j == n) p_bar = p;
        }
    }
    if (p_unb >= 0 && p_bar >= 0) {
        for (int p = 0; p + 1 < sz; ++p)
            if (!(p == p_unb && p + 1 == p_bar)) poset.covers.emplace_back(p, p + 1);
        if (p_unb > 0) poset.covers.emplace_back(p_unb - 1, p_bar);
        if (p_bar + 1 < sz) poset.covers.emplace_back(p_unb, p_bar + 1);
        std::sort(poset.covers.begin(), poset.covers.end());
    } else {
        for (int p = 0; p + 1 < sz; ++p) poset.covers.emplace_back(p, p + 1);
    }
    return poset;
}

bool is_reduced(const ReflectionWord& w) {
    return inversion_set(w).elements.size() == w.letters.size();
}

RootPoset inversion_set_checked(const ReflectionWord& w) {
    RootPoset p = inversion_set(w);
    if (p.elements.size() != w.letters.size())
        throw std::invalid_argument("non-reduced word: " + std::to_string(w.letters.size()) +
                                    " letters but " + std::to_string(p.elements.size()) + " inversions");
    return p;
}

ReflectionWord reduced_equivalent(const ReflectionWord& w) {
    if (is_reduced(w)) return w;
    if (!(w.type.family == Family::D && w.variant == DVariant::full))
        throw std::invalid_argument("no reduced form known for this non-reduced word");
    const int n = w.type.rank;
    const int i = w.start;
    ReflectionWord r;
    r.type = w.type;
    r.start = i;
    r.variant = DVariant::full;
    for (int l = i; l <= n - 2; ++l) r.letters.push_back(l);
    r.letters.push_back(n);
    for (int l = n - 2; l >= i; --l) r.letters.push_back(l);
    // Same Weyl element: agree on all simple roots.
    for (int a = 1; a <= n; ++a) {
        Coeffs e(static_cast<size_t>(n), 0);
        e[static_cast<size_t>(a - 1)] = 1;
        if (weyl_apply_root(w, e) != weyl_apply_root(r, e))
            throw std::logic_error("reduced_equivalent: element mismatch");
    }
    return r;
}

Weight weight_of_point(const std::vector<int>& s, const Weight& lambda, const RootPoset& poset,
                       const LieType& t) {
    if (s.size() != poset.elements.size())
        throw std::invalid_argument("multi-exponent length does not match poset size");
    const int n = t.rank;
    if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("weight size mismatch");
    const auto m = cartan_matrix(t);
    Weight out = lambda;
    for (size_t p = 0; p < s.size(); ++p) {
        if (s[p] == 0) continue;
        const Coeffs& rc = poset.elements[p].coeffs;
        for (int a = 0; a < n; ++a) {
            long long drop = 0;
            for (int b = 0; b < n; ++b)
                drop += static_cast<long long>(m[static_cast<size_t>(a)][static_cast<size_t>(b)]) *
                        rc[static_cast<size_t>(b)];
            out[static_cast<size_t>(a)] -= static_cast<int>(drop) * s[p];
        }
    }
    return out;
}

}  // namespace dempoly
