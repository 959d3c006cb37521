#include "dempoly/wire.hpp"

#include <algorithm>
#include <sstream>

namespace dempoly {

std::string weight_to_string(const Weight& m) {
    std::string s;
    for (size_t a = 0; a < m.size(); ++a) {
        if (a) s += ",";
        s += std::to_string(m[a]);
    }
    return s;
}

Weight parse_weight(const std::string& s, int rank) {
    Weight m;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(tok, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed weight component: " + tok);
        }
        if (used != tok.size()) throw std::invalid_argument("malformed weight component: " + tok);
        m.push_back(v);
    }
    if (static_cast<int>(m.size()) != rank)
        throw std::invalid_argument("weight has " + std::to_string(m.size()) +
                                    " components, expected " + std::to_string(rank));
    return m;
}

std::vector<std::string> order_labels(const RootPoset& poset) {
    std::vector<std::string> out;
    out.reserve(poset.elements.size());
    for (const auto& r : poset.elements) out.push_back(root_label(r));
    return out;
}

json roots_json(const LieType& t) {
    json arr = json::array();
    for (const auto& r : build_positive_roots(t)) {
        arr.push_back({{"label", root_label(r)}, {"coeffs", r.coeffs}});
    }
    return json{{"type", std::string(1, family_to_char(t.family))},
                {"rank", t.rank},
                {"count", arr.size()},
                {"roots", arr}};
}

json poset_json(const System& sys) {
    json covers = json::array();
    for (const auto& [a, b] : sys.poset.covers)
        covers.push_back({root_label(sys.poset.elements[static_cast<size_t>(a)]),
                          root_label(sys.poset.elements[static_cast<size_t>(b)])});
    return json{{"order", order_labels(sys.poset)}, {"covers", covers}};
}

json word_json(const ReflectionWord& w) {
    json j{{"type", std::string(1, family_to_char(w.type.family))},
           {"rank", w.type.rank},
           {"start", w.start},
           {"letters", w.letters},
           {"reduced", is_reduced(w)},
           {"inversions", inversion_set(w).elements.size()}};
    if (w.type.family == Family::D)
        j["variant"] = (w.variant == DVariant::full) ? "full" : "hatted";
    if (!is_reduced(w)) j["reduced_word"] = reduced_equivalent(w).letters;
    return j;
}

json path_json(const PathSpec& p, const System& sys) {
    json roots = json::array();
    for (int pos : p.roots) roots.push_back(root_label(sys.poset.elements[static_cast<size_t>(pos)]));
    return json{{"id", p.id},
                {"kind", path_kind_name(p.kind)},
                {"roots", roots},
                {"coeffs", p.coeffs},
                {"bound", p.bound},
                {"params", p.params}};
}

json paths_json(const System& sys) {
    json arr = json::array();
    for (const auto& p : sys.paths) arr.push_back(path_json(p, sys));
    return json{{"order", order_labels(sys.poset)}, {"count", arr.size()}, {"paths", arr}};
}

json inequalities_json(const System& sys) {
    const size_t ncoord = sys.poset.elements.size();
    json arr = json::array();
    for (const auto& p : sys.paths) {
        std::vector<int> dense(ncoord, 0);
        for (size_t q = 0; q < p.roots.size(); ++q)
            dense[static_cast<size_t>(p.roots[q])] += p.coeffs[q];
        arr.push_back({{"id", p.id},
                       {"kind", path_kind_name(p.kind)},
                       {"coeffs", dense},
                       {"bound", p.bound},
                       {"params", p.params}});
    }
    return json{{"order", order_labels(sys.poset)}, {"count", arr.size()}, {"inequalities", arr}};
}

json point_set_json(const System& sys, const Weight& lambda,
                    const std::vector<MultiExponent>& points) {
    json pts = json::array();
    for (const auto& s : points) pts.push_back(s);
    return json{{"lambda", lambda},
                {"order", order_labels(sys.poset)},
                {"points", pts},
                {"count", points.size()}};
}

std::string point_set_csv(const System& sys, const std::vector<MultiExponent>& points) {
    std::string out;
    const auto labels = order_labels(sys.poset);
    for (size_t a = 0; a < labels.size(); ++a) {
        if (a) out += ",";
        out += labels[a];
    }
    out += "\n";
    for (const auto& s : points) {
        for (size_t a = 0; a < s.size(); ++a) {
            if (a) out += ",";
            out += std::to_string(s[a]);
        }
        out += "\n";
    }
    return out;
}

json character_json(const ReflectionWord& word, const Weight& lambda, const CharacterPoly& c) {
    json terms = json::array();
    for (const auto& [w, mult] : c.terms) terms.push_back({{"weight", w}, {"mult", mult}});
    return json{{"lambda", lambda},
                {"word", word.letters},
                {"dim", dimension(c)},
                {"terms", terms}};
}

json generators_json(const System& sys, const Weight& lambda, const GeneratorSet& gs) {
    std::vector<std::pair<MultiExponent, GeneratorInfo>> sorted(gs.generators.begin(),
                                                                gs.generators.end());
    std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
        return canonical_monomial_key(a.first) < canonical_monomial_key(b.first);
    });
    json arr = json::array();
    for (const auto& [s, info] : sorted)
        arr.push_back({{"point", s},
                       {"path", info.path_id},
                       {"kind", path_kind_name(info.kind)},
                       {"weighted_sum", info.weighted_sum}});
    return json{{"lambda", lambda},
                {"order", order_labels(sys.poset)},
                {"count", arr.size()},
                {"generators", arr}};
}

std::vector<MultiExponent> parse_point_set_json(const json& j, const System& sys) {
    const auto labels = order_labels(sys.poset);
    const auto got = j.at("order").get<std::vector<std::string>>();
    if (got != labels) throw std::invalid_argument("point set order does not match the system");
    std::vector<MultiExponent> out;
    for (const auto& p : j.at("points")) {
        MultiExponent s = p.get<MultiExponent>();
        if (s.size() != labels.size()) throw std::invalid_argument("point length mismatch");
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace dempoly
