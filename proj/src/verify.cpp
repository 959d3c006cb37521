#include "dempoly/verify.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "dempoly/wire.hpp"

namespace dempoly {

CellResult check_cell(const LieType& t, int start, DVariant variant, const Weight& lambda) {
    System sys = build_system(t, start, variant);
    CellResult cell;
    cell.type = t;
    cell.start = start;
    cell.variant = sys.variant;
    cell.lambda = lambda;
    cell.hard_gate = is_hard_gate(t);
    const auto points = enumerate_points(sys, lambda);
    cell.report = verify_against_points(sys.word, lambda, points, sys.poset);
    return cell;
}

bool is_hard_gate(const LieType& t) {
    switch (t.family) {
        case Family::A:
        case Family::C:
            return true;
        case Family::B:
            return true;  // rank 2 by hand values; higher ranks promoted (green)
        case Family::D:
            return true;  // promoted (green)
    }
    return false;
}

std::vector<Weight> dominant_weights_up_to(int rank, int max_sum) {
    std::vector<Weight> out;
    Weight cur(static_cast<size_t>(rank), 0);
    auto rec = [&](auto&& self, int at, int left) -> void {
        if (at == rank) {
            out.push_back(cur);
            return;
        }
        for (int v = 0; v <= left; ++v) {
            cur[static_cast<size_t>(at)] = v;
            self(self, at + 1, left - v);
        }
        cur[static_cast<size_t>(at)] = 0;
    };
    rec(rec, 0, max_sum);
    std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
        const int sa = weight_total(a), sb = weight_total(b);
        if (sa != sb) return sa < sb;
        return a < b;
    });
    return out;
}

namespace {

std::string cell_name(const LieType& t, int start, DVariant variant, const Weight& lambda) {
    std::ostringstream os;
    os << family_to_char(t.family) << t.rank << " start=" << start;
    if (t.family == Family::D) os << " word=" << (variant == DVariant::full ? "full" : "hatted");
    os << " lambda=" << weight_to_string(lambda);
    return os.str();
}

struct CellSpec {
    LieType type;
    int start;
    DVariant variant;
    Weight lambda;
};

}  // namespace

std::string SweepSummary::csv() const {
    std::string out = "cell,check,pass,gate,detail\n";
    for (const auto& r : rows) {
        out += r.cell + "," + r.check + "," + (r.pass ? "pass" : "FAIL") + "," +
               (r.hard ? "hard" : "soft") + "," + r.detail + "\n";
    }
    return out;
}

SweepSummary sweep(const SweepOptions& opt) {
    std::vector<CellSpec> cells;
    for (Family fam : opt.families) {
        const int lo = std::max(opt.min_rank, fam == Family::A ? 1 : fam == Family::D ? 4 : 2);
        for (int n = lo; n <= opt.max_rank; ++n) {
            LieType t{fam, n};
            std::vector<int> starts{1};
            if (opt.all_starts) {
                starts.clear();
                const int top = (fam == Family::D) ? n - 1 : n;
                for (int i = 1; i <= top; ++i) starts.push_back(i);
            }
            std::vector<DVariant> variants{DVariant::none};
            if (fam == Family::D) variants = {DVariant::hatted, DVariant::full};
            for (int start : starts)
                for (DVariant v : variants)
                    for (const auto& lam : dominant_weights_up_to(n, opt.max_sum))
                        cells.push_back({t, start, v, lam});
        }
    }

    std::vector<std::vector<SweepRow>> results(cells.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const size_t at = next.fetch_add(1);
            if (at >= cells.size()) return;
            const auto& c = cells[at];
            std::vector<SweepRow>& rows = results[at];
            const std::string name = cell_name(c.type, c.start, c.variant, c.lambda);
            const bool hard = is_hard_gate(c.type);
            try {
                System sys = build_system(c.type, c.start, c.variant);
                const auto points = enumerate_points(sys, c.lambda, opt.max_points);
                const auto rep = verify_against_points(sys.word, c.lambda, points, sys.poset);
                rows.push_back({name, "dim", rep.dims_match, hard,
                                std::to_string(rep.points) + "=" + std::to_string(rep.dim)});
                rows.push_back({name, "weights", rep.weights_match, hard,
                                rep.weights_match ? "multisets agree"
                                                  : "first mismatch at " +
                                                        (rep.first_mismatch
                                                             ? weight_to_string(*rep.first_mismatch)
                                                             : std::string("?"))});
                if (opt.with_minkowski) {
                    for (const auto& mu : dominant_weights_up_to(c.type.rank, opt.max_sum)) {
                        if (mu < c.lambda) continue;  // unordered pairs once
                        const auto mk = minkowski_check(sys, c.lambda, mu);
                        rows.push_back({name + " mu=" + weight_to_string(mu), "minkowski", mk.equal,
                                        hard, mk.equal ? "sets equal" : "sets differ"});
                    }
                }
                if (opt.with_normality && weight_total(c.lambda) > 0) {
                    const auto nk = normality_check(sys, c.lambda, 3);
                    const bool all = std::all_of(nk.begin(), nk.end(), [](bool b) { return b; });
                    rows.push_back({name, "normality", all, hard, "k<=3"});
                }
            } catch (const std::runtime_error& e) {
                rows.push_back({name, "resource-limit", false, hard, e.what()});
            } catch (const std::exception& e) {
                rows.push_back({name, "error", false, hard, e.what()});
            }
        }
    };
    const int jobs = std::max(1, opt.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int q = 0; q < jobs; ++q) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    SweepSummary sum;
    for (auto& rows : results)
        for (auto& r : rows) {
            if (!r.pass) {
                ++sum.failures;
                if (r.hard) ++sum.hard_failures;
                if (r.check == "resource-limit") ++sum.resource_errors;
            }
            sum.rows.push_back(std::move(r));
        }
    return sum;
}

}  // namespace dempoly
