#include "dempoly/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dempoly/fixtures.hpp"
#include "dempoly/verify.hpp"
#include "dempoly/wire.hpp"

namespace dempoly {

namespace {

struct RunConfig {
    std::string type_str = "A";
    int rank = 0;
    int start = 1;
    int hook_end = 0;
    int substart = 0;
    std::string weight_str;
    std::string weight2_str;
    std::string point_str;
    std::string word_variant = "hatted";
    bool include_redundant = false;
    std::string format = "text";
    std::string out_path;
    int jobs = 1;
    long long max_points = 0;
    int kmax = 3;
    int box_pad = 2;
    // sweep options
    std::string sweep_types = "A,C";
    int min_rank = 2;
    int max_rank = 4;
    int max_summ = 2;
    bool all_starts = false;
    bool with_minkowski = false;
    bool with_normality = false;
};

LieType lie_type(const RunConfig& cfg) {
    if (cfg.type_str.size() != 1) throw std::invalid_argument("bad --type: " + cfg.type_str);
    LieType t{family_from_char(cfg.type_str[0]), cfg.rank};
    validate(t);
    return t;
}

DVariant variant_of(const RunConfig& cfg, const LieType& t) {
    if (t.family != Family::D) return DVariant::none;
    if (cfg.word_variant == "hatted") return DVariant::hatted;
    if (cfg.word_variant == "full") return DVariant::full;
    throw std::invalid_argument("bad --word: " + cfg.word_variant);
}

Weight need_weight(const RunConfig& cfg, const LieType& t) {
    if (cfg.weight_str.empty()) throw std::invalid_argument("this command needs --weight");
    return parse_weight(cfg.weight_str, t.rank);
}

struct Sink {
    std::ostream& fallback;
    std::ofstream file;
    explicit Sink(const RunConfig& cfg, std::ostream& out) : fallback(out) {
        if (!cfg.out_path.empty()) {
            file.open(cfg.out_path);
            if (!file) throw std::invalid_argument("cannot open output path: " + cfg.out_path);
        }
    }
    std::ostream& stream() { return file.is_open() ? static_cast<std::ostream&>(file) : fallback; }
};

void emit_json(const RunConfig& cfg, std::ostream& os, const json& j) {
    if (cfg.format == "json") os << j.dump(2) << "\n";
    else os << j.dump() << "\n";
}

int cmd_points(const RunConfig& cfg, std::ostream& os, bool count_only) {
    const LieType t = lie_type(cfg);
    System sys = build_system(t, cfg.start, variant_of(cfg, t), cfg.substart,
                              cfg.include_redundant, cfg.hook_end);
    const Weight lam = need_weight(cfg, t);
    const auto pts = enumerate_points(sys, lam, cfg.max_points);
    if (count_only) {
        if (cfg.format == "text") os << pts.size() << "\n";
        else emit_json(cfg, os, json{{"lambda", lam}, {"count", pts.size()}});
        return 0;
    }
    if (cfg.format == "csv") os << point_set_csv(sys, pts);
    else if (cfg.format == "text") {
        os << "# order:";
        for (const auto& l : order_labels(sys.poset)) os << " " << l;
        os << "\n";
        for (const auto& s : pts) {
            for (size_t a = 0; a < s.size(); ++a) os << (a ? " " : "") << s[a];
            os << "\n";
        }
    } else emit_json(cfg, os, point_set_json(sys, lam, pts));
    return 0;
}

int cmd_check(const RunConfig& cfg, std::ostream& os, bool weights_too) {
    const LieType t = lie_type(cfg);
    const Weight lam = need_weight(cfg, t);
    const CellResult cell = check_cell(t, cfg.start, variant_of(cfg, t), lam);
    const bool pass = weights_too ? cell.report.pass() : cell.report.dims_match;
    json j{{"check", weights_too ? "weight-check" : "dim-check"},
           {"points", cell.report.points},
           {"dim", cell.report.dim},
           {"dims_match", cell.report.dims_match},
           {"weights_match", cell.report.weights_match},
           {"pass", pass}};
    if (cell.report.first_mismatch) j["first_mismatch"] = *cell.report.first_mismatch;
    if (cfg.format == "text")
        os << (pass ? "pass" : "FAIL") << ": " << cell.report.points << " points, dim "
           << cell.report.dim << (weights_too ? (cell.report.weights_match
                                                     ? ", weight multisets agree"
                                                     : ", weight multisets DIFFER")
                                              : "")
           << "\n";
    else emit_json(cfg, os, j);
    return pass ? 0 : 1;
}

int run(RunConfig& cfg, const std::string& command, std::ostream& out) {
    Sink sink(cfg, out);
    std::ostream& os = sink.stream();

    if (command == "roots") {
        const LieType t = lie_type(cfg);
        emit_json(cfg, os, roots_json(t));
        return 0;
    }
    if (command == "poset" || command == "word" || command == "paths" || command == "inequalities") {
        const LieType t = lie_type(cfg);
        System sys = build_system(t, cfg.start, variant_of(cfg, t), cfg.substart,
                                  cfg.include_redundant, cfg.hook_end);
        if (command == "poset") emit_json(cfg, os, poset_json(sys));
        else if (command == "word") emit_json(cfg, os, word_json(sys.word));
        else if (command == "paths") emit_json(cfg, os, paths_json(sys));
        else emit_json(cfg, os, inequalities_json(sys));
        return 0;
    }
    if (command == "points") return cmd_points(cfg, os, false);
    if (command == "count") return cmd_points(cfg, os, true);
    if (command == "dim-check") return cmd_check(cfg, os, false);
    if (command == "weight-check") return cmd_check(cfg, os, true);
    if (command == "character") {
        const LieType t = lie_type(cfg);
        ReflectionWord w = reflection_word(t, cfg.start, variant_of(cfg, t), cfg.hook_end);
        const Weight lam = need_weight(cfg, t);
        const ReflectionWord red = is_reduced(w) ? w : reduced_equivalent(w);
        emit_json(cfg, os, character_json(red, lam, demazure_character(red, lam)));
        return 0;
    }
    if (command == "minkowski") {
        const LieType t = lie_type(cfg);
        System sys = build_system(t, cfg.start, variant_of(cfg, t), cfg.substart,
                                  cfg.include_redundant, cfg.hook_end);
        const Weight lam = need_weight(cfg, t);
        if (cfg.weight2_str.empty()) throw std::invalid_argument("minkowski needs --weight2");
        const Weight mu = parse_weight(cfg.weight2_str, t.rank);
        const auto res = minkowski_check(sys, lam, mu);
        json j{{"check", "minkowski"}, {"equal", res.equal}, {"sum_subset", res.sum_subset}};
        if (res.witness) j["witness"] = *res.witness;
        if (cfg.format == "text")
            os << (res.equal ? "pass: S(lambda)+S(mu) = S(lambda+mu)"
                             : "FAIL: Minkowski sets differ")
               << "\n";
        else emit_json(cfg, os, j);
        return res.equal ? 0 : 1;
    }
    if (command == "normality") {
        const LieType t = lie_type(cfg);
        System sys = build_system(t, cfg.start, variant_of(cfg, t), cfg.substart,
                                  cfg.include_redundant, cfg.hook_end);
        const Weight lam = need_weight(cfg, t);
        const auto res = normality_check(sys, lam, cfg.kmax);
        const bool all = std::all_of(res.begin(), res.end(), [](bool b) { return b; });
        json ks = json::array();
        for (size_t k = 0; k < res.size(); ++k)
            ks.push_back({{"k", k + 1}, {"pass", static_cast<bool>(res[k])}});
        if (cfg.format == "text") os << (all ? "pass" : "FAIL") << " (k <= " << cfg.kmax << ")\n";
        else emit_json(cfg, os, json{{"check", "normality"}, {"per_k", ks}, {"pass", all}});
        return all ? 0 : 1;
    }
    if (command == "decompose") {
        const LieType t = lie_type(cfg);
        System sys = build_system(t, cfg.start, variant_of(cfg, t), cfg.substart,
                                  cfg.include_redundant, cfg.hook_end);
        const Weight lam = need_weight(cfg, t);
        if (cfg.point_str.empty()) throw std::invalid_argument("decompose needs --point");
        const Weight raw = parse_weight(cfg.point_str, static_cast<int>(sys.poset.elements.size()));
        const MultiExponent s(raw.begin(), raw.end());
        const auto parts = minkowski_decompose(sys, s, lam);
        json arr = json::array();
        for (const auto& [fund, part] : parts) arr.push_back({{"omega", fund}, {"point", part}});
        emit_json(cfg, os, json{{"lambda", lam}, {"point", s}, {"summands", arr}});
        return 0;
    }
    if (command == "ideal-gens" || command == "ideal-min-gens" || command == "ideal-check") {
        const LieType t = lie_type(cfg);
        System sys = build_system(t, cfg.start, variant_of(cfg, t), cfg.substart,
                                  cfg.include_redundant, cfg.hook_end);
        const Weight lam = need_weight(cfg, t);
        if (command == "ideal-gens") {
            emit_json(cfg, os, generators_json(sys, lam, theorem_generators(sys, lam)));
            return 0;
        }
        const auto box = default_box(sys, lam, cfg.box_pad);
        if (command == "ideal-min-gens") {
            const auto mins = complement_min_generators(sys, lam, box);
            json arr = json::array();
            for (const auto& s : mins) arr.push_back(s);
            emit_json(cfg, os,
                      json{{"lambda", lam}, {"box", box}, {"count", mins.size()}, {"generators", arr}});
            return 0;
        }
        const auto rep = upset_equality(sys, lam, box);
        json j{{"check", "ideal-upset-equality"}, {"box", box}, {"pass", rep.equal}};
        if (!rep.uncovered.empty()) j["uncovered"] = rep.uncovered;
        if (!rep.unsound.empty()) j["unsound"] = rep.unsound;
        if (cfg.format == "text") os << (rep.equal ? "pass" : "FAIL") << "\n";
        else emit_json(cfg, os, j);
        return rep.equal ? 0 : 1;
    }
    if (command == "face-check") {
        const LieType t = lie_type(cfg);
        if (cfg.substart == 0) throw std::invalid_argument("face-check needs --substart");
        const Weight lam = need_weight(cfg, t);
        const auto res = face_embedding_check(t, cfg.start, cfg.substart, lam, variant_of(cfg, t));
        json j{{"check", "face-embedding"},
               {"pass", res.equal},
               {"face_points", res.face_points},
               {"slice_points", res.slice_points}};
        if (res.witness) j["witness"] = *res.witness;
        if (cfg.format == "text")
            os << (res.equal ? "pass" : "FAIL") << ": " << res.face_points << " face points, "
               << res.slice_points << " slice points\n";
        else emit_json(cfg, os, j);
        return res.equal ? 0 : 1;
    }
    if (command == "fixtures") {
        const auto results = fixtures_check();
        bool all = true;
        json arr = json::array();
        for (const auto& r : results) {
            all = all && r.pass;
            arr.push_back({{"id", r.id},
                           {"mode", r.mode},
                           {"pass", r.pass},
                           {"flags", r.flags},
                           {"detail", r.detail}});
            if (cfg.format == "text") {
                os << (r.pass ? "[PASS] " : "[FAIL] ") << r.id << " (" << r.mode << "): "
                   << r.detail << "\n";
                for (const auto& f : r.flags) os << "       flagged: " << f << "\n";
            }
        }
        if (cfg.format != "text") emit_json(cfg, os, json{{"fixtures", arr}, {"pass", all}});
        return all ? 0 : 1;
    }
    if (command == "sweep") {
        SweepOptions opt;
        opt.families.clear();
        std::stringstream ss(cfg.sweep_types);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) opt.families.push_back(family_from_char(tok[0]));
        if (opt.families.empty()) {
            os << "cell,check,pass,gate,detail\n";
            return 0;
        }
        opt.min_rank = cfg.min_rank;
        opt.max_rank = cfg.max_rank;
        opt.max_sum = cfg.max_summ;
        opt.all_starts = cfg.all_starts;
        opt.with_minkowski = cfg.with_minkowski;
        opt.with_normality = cfg.with_normality;
        opt.jobs = cfg.jobs;
        const auto summary = sweep(opt);
        os << summary.csv();
        return summary.hard_failures == 0 ? 0 : 1;
    }
    return -1;  // unknown command, handled by the caller
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Demazure polytopes: lattice-point bases and their character oracle"};
    app.name("dempoly");
    RunConfig cfg;
    std::string command;

    app.add_option("command", command,
                   "one of: roots poset word paths inequalities points count character dim-check "
                   "weight-check minkowski normality decompose ideal-gens ideal-min-gens "
                   "ideal-check face-check fixtures sweep")
        ->required();
    app.add_option("--type", cfg.type_str, "type family A|B|C|D");
    app.add_option("--rank", cfg.rank, "rank n");
    app.add_option("--start", cfg.start, "word start index i (default 1)");
    app.add_option("--hook-end", cfg.hook_end, "type A hook end k (default rank)");
    app.add_option("--substart", cfg.substart, "face subword parameter k (start < k <= rank)");
    app.add_option("--weight", cfg.weight_str, "weight m1,...,mn");
    app.add_option("--weight2", cfg.weight2_str, "second weight for minkowski");
    app.add_option("--point", cfg.point_str, "multi-exponent s1,...,sm in chain order");
    app.add_option("--word", cfg.word_variant, "type D word variant: hatted|full")
        ->check(CLI::IsMember({"hatted", "full"}));
    app.add_flag("--include-redundant", cfg.include_redundant,
                 "keep inequalities dominated by others");
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--out", cfg.out_path, "write output to file");
    app.add_option("--jobs", cfg.jobs, "worker threads for sweep")->check(CLI::PositiveNumber);
    app.add_option("--max-points", cfg.max_points, "abort enumeration beyond this many points");
    app.add_option("--kmax", cfg.kmax, "dilations for normality (default 3)");
    app.add_option("--box-pad", cfg.box_pad, "ideal box padding (default 2)");
    app.add_option("--types", cfg.sweep_types, "sweep families, e.g. A,C");
    app.add_option("--min-rank", cfg.min_rank, "sweep minimum rank");
    app.add_option("--max-rank", cfg.max_rank, "sweep maximum rank");
    app.add_option("--max-summ", cfg.max_summ, "sweep cap on sum(m)");
    app.add_flag("--all-starts", cfg.all_starts, "sweep all start indices");
    app.add_flag("--with-minkowski", cfg.with_minkowski, "sweep also checks Minkowski sums");
    app.add_flag("--with-normality", cfg.with_normality, "sweep also checks normality");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 2;
    }
    try {
        const int code = run(cfg, command, out);
        if (code == -1) {
            err << "error: unknown command: " << command << "\n" << app.help();
            return 2;
        }
        return code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace dempoly
