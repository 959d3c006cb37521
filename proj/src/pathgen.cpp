#include "dempoly/pathgen.hpp"

#include <algorithm>
#include <cstdio>

namespace dempoly {

std::string path_kind_name(PathKind k) {
    switch (k) {
        case PathKind::dyck: return "dyck";
        case PathKind::degree: return "degree";
        case PathKind::coeff: return "coeff";
    }
    return "?";
}

namespace {

struct Builder {
    const LieType& t;
    const RootPoset& poset;
    int n;

    int pos(int i, int j, bool barred) const {
        // Type C identification a[i,-n] == a[i,n].
        if (t.family == Family::C && barred && j == n) barred = false;
        for (size_t p = 0; p < poset.elements.size(); ++p) {
            const Root& r = poset.elements[p];
            if (r.i == i && r.j == j && r.barred == barred) return static_cast<int>(p);
        }
        throw std::logic_error("path root not in the coordinate set");
    }

    std::vector<int> msum(int lo, int hi, int c = 1, std::vector<int> base = {}) const {
        if (base.empty()) base.assign(static_cast<size_t>(n), 0);
        for (int l = lo; l <= hi; ++l) base[static_cast<size_t>(l - 1)] += c;
        return base;
    }
};

struct RawPath {
    std::string id;
    PathKind kind;
    std::map<std::string, int> params;
    std::vector<std::pair<std::pair<int, int>, bool>> roots;  // ((i,j),barred)
    std::vector<int> coeffs;
    std::vector<int> bound;
};

std::string make_id(const char* fam, const char* name, const std::map<std::string, int>& params) {
    std::string s = std::string(fam) + ":" + name;
    if (!params.empty()) {
        s += "[";
        bool first = true;
        for (const auto& [k, v] : params) {
            if (!first) s += ",";
            first = false;
            s += k + "=" + std::to_string(v);
        }
        s += "]";
    }
    return s;
}

void emit_type_A(std::vector<RawPath>& out, int i, int k, int n, int ks, bool include_redundant) {
    auto sum = [&](int lo, int hi, int c = 1, std::vector<int> base = std::vector<int>()) {
        if (base.empty()) base.assign(static_cast<size_t>(n), 0);
        for (int l = lo; l <= hi; ++l) base[static_cast<size_t>(l - 1)] += c;
        return base;
    };
    auto vert = [&](int to) {
        std::vector<std::pair<std::pair<int, int>, bool>> r;
        for (int j = i; j <= to; ++j) r.push_back({{i, j}, false});
        return r;
    };
    auto horiz_from = [&](std::vector<std::pair<std::pair<int, int>, bool>> r, int b) {
        for (int p = b; p <= k; ++p) r.push_back({{p, k}, false});
        return r;
    };
    (void)include_redundant;
    const int hmin = std::max(i + 1, ks + 1);

    // D1: vertical prefixes.
    const int d1_hi = (k == i) ? i : k - 1;
    for (int a = i; a <= d1_hi; ++a)
        out.push_back({make_id("A", "D1", {{"a", a}}), PathKind::dyck, {{"a", a}}, vert(a),
                       std::vector<int>(static_cast<size_t>(a - i + 1), 1), sum(i, a)});
    if (k == i) return;

    // Full vertical chain through the corner: maximal only when the whole
    // horizontal arm is cut away by the subword.
    if (ks == k)
        out.push_back({make_id("A", "chain", {}), PathKind::dyck, {}, vert(k),
                       std::vector<int>(static_cast<size_t>(k - i + 1), 1), sum(i, k)});

    // D2: horizontal suffixes.
    for (int b = hmin; b <= k; ++b)
        out.push_back({make_id("A", "D2", {{"b", b}}), PathKind::dyck, {{"b", b}},
                       horiz_from({}, b), std::vector<int>(static_cast<size_t>(k - b + 1), 1),
                       sum(b, k)});

    // D3: vertical prefix, corner, disjoint horizontal tail (a < b).
    for (int a = i; a <= k - 1; ++a)
        for (int b = std::max(a + 1, hmin); b <= k; ++b) {
            auto roots = vert(a);
            roots.push_back({{i, k}, false});
            roots = horiz_from(roots, b);
            out.push_back({make_id("A", "D3", {{"a", a}, {"b", b}}), PathKind::dyck,
                           {{"a", a}, {"b", b}}, roots,
                           std::vector<int>(roots.size(), 1), sum(i, k)});
        }

    // Degree paths: overlapping columns c..r.
    for (int c = hmin; c <= k - 1; ++c)
        for (int r = c; r <= k - 1; ++r) {
            auto roots = vert(r);
            roots.push_back({{i, k}, false});
            roots = horiz_from(roots, c);
            out.push_back({make_id("A", "deg", {{"c", c}, {"r", r}}), PathKind::degree,
                           {{"c", c}, {"r", r}}, roots,
                           std::vector<int>(roots.size(), 1), sum(c, r, 1, sum(i, k))});
        }
}

void emit_type_C(std::vector<RawPath>& out, int i, int n, int ks, bool include_redundant) {
    (void)include_redundant;
    auto sum = [&](int lo, int hi, int c = 1, std::vector<int> base = std::vector<int>()) {
        if (base.empty()) base.assign(static_cast<size_t>(n), 0);
        for (int l = lo; l <= hi; ++l) base[static_cast<size_t>(l - 1)] += c;
        return base;
    };
    auto prefix = [&](int to) {
        std::vector<std::pair<std::pair<int, int>, bool>> r;
        for (int j = i; j <= to; ++j) r.push_back({{i, j}, false});
        return r;
    };
    auto qbound = [&](int j) { return sum(j, n, 2, sum(i, j - 1)); };

    for (int j = i; j <= n - 1; ++j)
        out.push_back({make_id("C", "dyck", {{"j", j}}), PathKind::dyck, {{"j", j}}, prefix(j),
                       std::vector<int>(static_cast<size_t>(j - i + 1), 1), sum(i, j)});
    {
        auto roots = prefix(n - 1);
        roots.push_back({{i, i}, true});
        out.push_back({make_id("C", "special", {}), PathKind::dyck, {}, roots,
                       std::vector<int>(roots.size(), 1), sum(i, n)});
    }

    const int jmin = std::max(i + 1, ks + 1);
    for (int j = jmin; j <= n; ++j) {
        auto support = prefix(n);
        for (int l = n - 1; l >= j; --l) support.push_back({{i, l}, true});
        support.push_back({{i, i}, true});
        out.push_back({make_id("C", "deg", {{"j", j}}), PathKind::degree, {{"j", j}}, support,
                       std::vector<int>(support.size(), 1), qbound(j)});
        for (int kk = j - 1; kk <= n - 1; ++kk) {
            std::vector<int> coeffs;
            for (const auto& rt : support) {
                const bool doubled = (!rt.second && rt.first.second <= kk) ||
                                     (rt.second && rt.first.second == i);
                coeffs.push_back(doubled ? 2 : 1);
            }
            out.push_back({make_id("C", "coeff", {{"j", j}, {"k", kk}}), PathKind::coeff,
                           {{"j", j}, {"k", kk}}, support, coeffs, sum(i, kk, 1, qbound(j))});
        }
    }
}

void emit_type_B(std::vector<RawPath>& out, int i, int n, int ks, bool include_redundant) {
    auto sum = [&](int lo, int hi, int c = 1, std::vector<int> base = std::vector<int>()) {
        if (base.empty()) base.assign(static_cast<size_t>(n), 0);
        for (int l = lo; l <= hi; ++l) base[static_cast<size_t>(l - 1)] += c;
        return base;
    };
    auto prefix = [&](int to) {
        std::vector<std::pair<std::pair<int, int>, bool>> r;
        for (int j = i; j <= to; ++j) r.push_back({{i, j}, false});
        return r;
    };
    // q_j = 2 m_i + m_{i+1} + .. + m_{j-1} + 2 m_j + .. + 2 m_{n-1} + m_n
    auto qbound = [&](int j) {
        auto b = sum(i, i, 2);
        b = sum(i + 1, j - 1, 1, b);
        b = sum(j, n - 1, 2, b);
        b = sum(n, n, 1, b);
        return b;
    };

    if (i == n) {
        // Degenerate word [n]: the single short-root string s_{n,n} <= m_n.
        out.push_back({make_id("B", "dyck", {{"j", n}}), PathKind::dyck, {{"j", n}}, prefix(n),
                       std::vector<int>{1}, sum(n, n)});
        return;
    }
    for (int j = i; j <= n - 1; ++j)
        out.push_back({make_id("B", "dyck", {{"j", j}}), PathKind::dyck, {{"j", j}}, prefix(j),
                       std::vector<int>(static_cast<size_t>(j - i + 1), 1), sum(i, j)});

    const int jmin = std::max(i + 1, ks + 1);
    for (int j = jmin; j <= n; ++j) {
        auto support = prefix(n);
        for (int l = n; l >= j; --l) support.push_back({{i, l}, true});
        // t1 tuples: doubled prefix cutoffs.
        for (int kk = j - 1; kk <= n - 1; ++kk) {
            std::vector<int> coeffs;
            for (const auto& rt : support)
                coeffs.push_back((!rt.second && rt.first.second <= kk) ? 2 : 1);
            out.push_back({make_id("B", "t1", {{"j", j}, {"k", kk}}), PathKind::coeff,
                           {{"j", j}, {"k", kk}}, support, coeffs,
                           sum(i + 1, kk, 1, qbound(j))});
        }
        // t2 tuple: everything doubled except s_{i,n}.
        {
            std::vector<int> coeffs;
            for (const auto& rt : support)
                coeffs.push_back((!rt.second && rt.first.second == n) ? 1 : 2);
            auto b = sum(i + 1, n, 1, qbound(j));
            b = sum(j, n - 1, 1, b);
            out.push_back({make_id("B", "t2", {{"j", j}}), PathKind::coeff, {{"j", j}},
                           support, coeffs, b});
        }
        // The all-ones degree inequality is valid only for j = i+1, where it
        // is dominated by t1 with k = j-1; for larger j it contradicts the
        // polytope (see Table 3 and the 2 m_{a[i,n]} fundamental point).
        if (include_redundant && j == i + 1)
            out.push_back({make_id("B", "deg", {{"j", j}}), PathKind::degree, {{"j", j}},
                           support, std::vector<int>(support.size(), 1), qbound(j)});
    }

    if (ks == n) {
        // All barred coordinates are cut away; the unbarred chain keeps the
        // doubled-prefix inequality ending at the short root a[i,n].
        auto support = prefix(n);
        std::vector<int> coeffs;
        for (const auto& rt : support)
            coeffs.push_back((rt.first.second <= n - 1) ? 2 : 1);
        out.push_back({make_id("B", "chain", {}), PathKind::coeff, {}, support, coeffs,
                       sum(n, n, 1, sum(i, n - 1, 2))});
    }
}

void emit_type_D_hatted(std::vector<RawPath>& out, int i, int n, int ks, bool include_redundant) {
    (void)include_redundant;
    auto sum = [&](int lo, int hi, int c = 1, std::vector<int> base = std::vector<int>()) {
        if (base.empty()) base.assign(static_cast<size_t>(n), 0);
        for (int l = lo; l <= hi; ++l) base[static_cast<size_t>(l - 1)] += c;
        return base;
    };
    auto prefix = [&](int to) {
        std::vector<std::pair<std::pair<int, int>, bool>> r;
        for (int j = i; j <= to; ++j) r.push_back({{i, j}, false});
        return r;
    };
    auto Qbound = [&](int d) {
        auto b = sum(i, d - 1);
        b = sum(d, n - 2, 2, b);
        b = sum(n - 1, n, 1, b);
        return b;
    };
    const bool has_unb_top = (ks != n);           // alpha_{i,n-1} present
    const int bmin = (ks == n) ? n : std::max(i + 1, ks + 1);  // barred mid survivors l in [bmin, n-1]

    for (int j = i; j <= (has_unb_top ? n - 1 : n - 2); ++j)
        out.push_back({make_id("D", "dyck", {{"j", j}}), PathKind::dyck, {{"j", j}}, prefix(j),
                       std::vector<int>(static_cast<size_t>(j - i + 1), 1), sum(i, j)});
    {
        auto roots = prefix(n - 2);
        roots.push_back({{i, n}, true});
        out.push_back({make_id("D", "barn", {}), PathKind::dyck, {}, roots,
                       std::vector<int>(roots.size(), 1), sum(n, n, 1, sum(i, n - 2))});
    }
    if (has_unb_top && bmin <= n - 1) {
        auto r1 = prefix(n - 1);
        r1.push_back({{i, n - 1}, true});
        out.push_back({make_id("D", "barn1", {}), PathKind::dyck, {}, r1,
                       std::vector<int>(r1.size(), 1), sum(i, n)});
        auto r2 = prefix(n - 2);
        r2.push_back({{i, n}, true});
        r2.push_back({{i, n - 1}, true});
        out.push_back({make_id("D", "both", {}), PathKind::dyck, {}, r2,
                       std::vector<int>(r2.size(), 1), sum(i, n)});
    }

    const int dmin = std::max(i + 1, ks + 1);
    for (int d = dmin; d <= n - 2; ++d) {
        if (has_unb_top) {
            auto s1 = prefix(n - 1);
            for (int l = n - 1; l >= d; --l) s1.push_back({{i, l}, true});
            out.push_back({make_id("D", "deg1", {{"d", d}}), PathKind::degree, {{"d", d}}, s1,
                           std::vector<int>(s1.size(), 1), Qbound(d)});
        }
        auto s2 = prefix(n - 2);
        s2.push_back({{i, n}, true});
        for (int l = n - 1; l >= d; --l) s2.push_back({{i, l}, true});
        out.push_back({make_id("D", "deg2", {{"d", d}}), PathKind::degree, {{"d", d}}, s2,
                       std::vector<int>(s2.size(), 1), Qbound(d)});
    }
    if (has_unb_top)
        for (int d = dmin; d <= n - 1; ++d)
            for (int kk = d - 1; kk <= n - 2; ++kk) {
                auto support = prefix(n - 1);
                support.push_back({{i, n}, true});
                for (int l = n - 1; l >= d; --l) support.push_back({{i, l}, true});
                std::vector<int> coeffs;
                for (const auto& rt : support)
                    coeffs.push_back((!rt.second && rt.first.second <= kk) ? 2 : 1);
                out.push_back({make_id("D", "coeff", {{"d", d}, {"k", kk}}), PathKind::coeff,
                               {{"d", d}, {"k", kk}}, support, coeffs,
                               sum(i, kk, 1, Qbound(d))});
            }
}

void emit_type_D_full(std::vector<RawPath>& out, int i, int n) {
    auto sum = [&](int lo, int hi, int c = 1, std::vector<int> base = std::vector<int>()) {
        if (base.empty()) base.assign(static_cast<size_t>(n), 0);
        for (int l = lo; l <= hi; ++l) base[static_cast<size_t>(l - 1)] += c;
        return base;
    };
    auto vert = [&](int to) {
        std::vector<std::pair<std::pair<int, int>, bool>> r;
        for (int j = i; j <= to; ++j) r.push_back({{i, j}, false});
        return r;
    };
    auto horiz_from = [&](std::vector<std::pair<std::pair<int, int>, bool>> r, int b) {
        for (int p = b; p <= n - 1; ++p) r.push_back({{p, n}, true});
        return r;
    };
    auto corner_bound = sum(n, n, 1, sum(i, n - 2));

    if (i == n - 1) {
        // Degenerate corner-only word: a[n-1,-n] is the simple root alpha_n.
        out.push_back({make_id("Dfull", "D2", {{"b", n - 1}}), PathKind::dyck, {{"b", n - 1}},
                       horiz_from({}, n - 1), std::vector<int>{1}, sum(n, n)});
        return;
    }
    for (int a = i; a <= n - 2; ++a)
        out.push_back({make_id("Dfull", "D1", {{"a", a}}), PathKind::dyck, {{"a", a}}, vert(a),
                       std::vector<int>(static_cast<size_t>(a - i + 1), 1), sum(i, a)});
    for (int b = i + 1; b <= n - 1; ++b)
        out.push_back({make_id("Dfull", "D2", {{"b", b}}), PathKind::dyck, {{"b", b}},
                       horiz_from({}, b),
                       std::vector<int>(static_cast<size_t>(n - b), 1),
                       sum(n, n, 1, sum(b, n - 2))});
    for (int a = i; a <= n - 2; ++a)
        for (int b = a + 1; b <= n - 1; ++b) {
            auto roots = vert(a);
            roots.push_back({{i, n}, true});
            roots = horiz_from(roots, b);
            out.push_back({make_id("Dfull", "D3", {{"a", a}, {"b", b}}), PathKind::dyck,
                           {{"a", a}, {"b", b}}, roots, std::vector<int>(roots.size(), 1),
                           corner_bound});
        }
    for (int c = i + 1; c <= n - 2; ++c)
        for (int r = c; r <= n - 2; ++r) {
            auto roots = vert(r);
            roots.push_back({{i, n}, true});
            roots = horiz_from(roots, c);
            out.push_back({make_id("Dfull", "deg", {{"c", c}, {"r", r}}), PathKind::degree,
                           {{"c", c}, {"r", r}}, roots, std::vector<int>(roots.size(), 1),
                           sum(c, r, 1, corner_bound)});
        }
}

}  // namespace

System build_system(const LieType& t, int start, DVariant variant, int substart,
                    bool include_redundant, int hook_end) {
    validate(t);
    System sys;
    sys.type = t;
    sys.start = start;
    sys.hook_end = (t.family == Family::A && hook_end != 0 && hook_end != t.rank) ? hook_end : 0;
    if (t.family == Family::D && variant == DVariant::none) variant = DVariant::hatted;
    if (t.family != Family::D) variant = DVariant::none;
    sys.variant = variant;
    sys.substart = substart;
    sys.include_redundant = include_redundant;

    if (substart != 0) {
        if (sys.hook_end != 0)
            throw std::invalid_argument("subwords are only supported for hook end = rank");
        sys.word = subword(t, start, substart, variant);
    } else {
        sys.word = reflection_word(t, start, variant, hook_end);
    }
    sys.poset = inversion_set(sys.word);
    if (variant != DVariant::full && sys.poset.elements.size() != sys.word.letters.size())
        throw std::logic_error("generated word is unexpectedly non-reduced");

    const int n = t.rank;
    const int ks = substart;
    std::vector<RawPath> raw;
    switch (t.family) {
        case Family::A:
            emit_type_A(raw, start, sys.hook_end ? sys.hook_end : n, n, ks, include_redundant);
            break;
        case Family::C:
            emit_type_C(raw, start, n, ks, include_redundant);
            break;
        case Family::B:
            emit_type_B(raw, start, n, ks, include_redundant);
            break;
        case Family::D:
            if (variant == DVariant::full) emit_type_D_full(raw, start, n);
            else emit_type_D_hatted(raw, start, n, ks, include_redundant);
            break;
    }

    Builder bld{t, sys.poset, n};
    const size_t ncoord = sys.poset.elements.size();
    std::vector<PathSpec> specs;
    std::vector<std::vector<int>> dense;
    for (const auto& rp : raw) {
        PathSpec ps;
        ps.id = rp.id;
        ps.kind = rp.kind;
        ps.params = rp.params;
        ps.coeffs = rp.coeffs;
        ps.bound = rp.bound;
        std::vector<int> d(ncoord, 0);
        for (size_t q = 0; q < rp.roots.size(); ++q) {
            const int p = bld.pos(rp.roots[q].first.first, rp.roots[q].first.second, rp.roots[q].second);
            ps.roots.push_back(p);
            d[static_cast<size_t>(p)] += rp.coeffs[q];
        }
        specs.push_back(std::move(ps));
        dense.push_back(std::move(d));
    }

    if (!include_redundant) {
        // Drop inequalities implied componentwise by another one: larger or
        // equal coefficients with a smaller or equal bound form.
        auto le = [](const std::vector<int>& a, const std::vector<int>& b) {
            for (size_t q = 0; q < a.size(); ++q)
                if (a[q] > b[q]) return false;
            return true;
        };
        std::vector<bool> drop(specs.size(), false);
        for (size_t a = 0; a < specs.size(); ++a) {
            if (drop[a]) continue;
            for (size_t b = 0; b < specs.size(); ++b) {
                if (a == b || drop[b]) continue;
                const bool dominates = le(dense[a], dense[b]) && le(specs[b].bound, specs[a].bound);
                if (dominates) {
                    const bool identical = dense[a] == dense[b] && specs[a].bound == specs[b].bound;
                    if (!identical || b < a) drop[a] = true;
                    if (drop[a]) break;
                }
            }
        }
        for (size_t a = 0; a < specs.size(); ++a)
            if (!drop[a]) sys.paths.push_back(specs[a]);
    } else {
        sys.paths = std::move(specs);
    }
    return sys;
}

bool is_dyck_sequence_A(const std::vector<Root>& seq, const std::vector<Root>& rw) {
    auto in_rw = [&](int i, int j) {
        return std::any_of(rw.begin(), rw.end(),
                           [&](const Root& r) { return !r.barred && r.i == i && r.j == j; });
    };
    for (size_t a = 0; a < seq.size(); ++a) {
        if (seq[a].barred) return false;
        if (!in_rw(seq[a].i, seq[a].j)) return false;
    }
    for (size_t a = 0; a + 1 < seq.size(); ++a) {
        // strictly decreasing in >=
        const Root &x = seq[a], &y = seq[a + 1];
        if (!(x.i <= y.i && x.j <= y.j) || (x.i == y.i && x.j == y.j)) return false;
    }
    for (size_t a = 0; a < seq.size(); ++a)
        for (size_t b = a + 1; b < seq.size(); ++b) {
            const int i1 = seq[a].i, j1 = seq[a].j, i2 = seq[b].i, j2 = seq[b].j;
            if (!in_rw(i1, j2)) return false;        // always a root here
            if (i2 <= j1 && !in_rw(i2, j1)) return false;  // only when a genuine root
        }
    return true;
}

}  // namespace dempoly
