#include "latreg/verify.hpp"

#include <atomic>
#include <chrono>
#include <algorithm>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace latreg {

namespace {

/// Runs task(0..count-1) on up to `jobs` threads. Results must be written to
/// per-index slots by the caller so the outcome does not depend on scheduling.
template <class Task>
void parallel_for(std::size_t count, std::size_t jobs, Task task) {
    jobs = std::max<std::size_t>(1, std::min(jobs, count));
    if (jobs == 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < jobs; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(error_mutex);
                    if (!error) error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

class Stopwatch {
public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - start_).count();
        start_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

EntryResult check_entry(const CatalogEntry& e, bool group_laws) {
    EntryResult r;
    r.family = e.family;
    r.dim = e.dim;
    r.variant = e.variant;
    r.schlafli = e.schlafli;
    const FaceLattice lattice = face_lattice(e.polytope);
    const SymmetryGroup group = symmetry_group(e.polytope, lattice);
    r.regular = group.is_flag_transitive();
    r.elementary = is_elementary(e.polytope);
    r.volume = lattice_volume(e.polytope, lattice);
    r.expected_volume = e.expected.lattice_volume;
    r.flag_count = group.flag_count;
    r.expected_flag_count = e.expected.flag_count;
    r.group_order = group.order();
    r.group_laws = group_laws ? verify_group_laws(e.polytope, group).ok() : true;
    r.passed = r.regular == e.expected_regular && r.elementary && r.volume == r.expected_volume &&
               r.flag_count == r.expected_flag_count && r.group_laws;
    return r;
}

unsigned smallest_non_divisor(std::size_t m) {
    unsigned p = 2;
    while (m % p == 0) ++p;
    return p;
}

struct Control {
    std::string name;
    std::string expectation;
    std::size_t min_dim;
    std::function<bool()> check;
};

std::vector<Control> controls_up_to(std::size_t max_dim) {
    std::vector<Control> out;
    auto not_regular = [](Polytope p) { return [p] { return !is_lattice_regular(p).regular; }; };
    for (std::size_t n = 2; n <= max_dim; ++n) {
        const unsigned p = smallest_non_divisor(n + 1);
        out.push_back({"simplex n=" + std::to_string(n) + " p=" + std::to_string(p),
                       "not lattice-regular (p does not divide n+1)", n,
                       not_regular(build(Family::simplex, n, p).polytope)});
    }
    out.push_back({"triangle (0,0),(1,0),(0,2)", "not lattice-regular", 2,
                   not_regular(Polytope::from_vertices({{0, 0}, {1, 0}, {0, 2}}, 2))});
    out.push_back({"second-family simplex S3(2;0,0,2)", "not lattice-regular", 3,
                   not_regular(second_family_simplex(3, 2, {0, 0, 2}))});
    out.push_back({"24-cell from cube variant 1", "no lattice 24-cell", 4,
                   [] { return !derive_cell24(build(Family::cube, 4, 1)).has_value(); }});
    for (unsigned v : {2u, 3u}) {
        const unsigned target = v - 1;
        out.push_back({"24-cell from cube variant " + std::to_string(v),
                       "congruent to 24-cell variant " + std::to_string(target), 4, [v, target] {
                           const auto cell = derive_cell24(build(Family::cube, 4, v));
                           return cell && are_congruent(*cell, build(Family::cell24, 4, target).polytope).has_value();
                       }});
    }
    std::erase_if(out, [&](const Control& c) { return c.min_dim > max_dim; });
    return out;
}

}  // namespace

VerifyReport run_verify_theorem(std::size_t max_dim, const VerifyOptions& options) {
    if (max_dim < 1 || max_dim > 6) throw ArgumentError("max_dim must be between 1 and 6");
    VerifyReport report;
    report.max_dim = max_dim;
    Stopwatch clock;

    const std::vector<CatalogEntry> entries = all_entries(max_dim);
    report.entries.resize(entries.size());
    parallel_for(entries.size(), options.jobs,
                 [&](std::size_t i) { report.entries[i] = check_entry(entries[i], options.check_group_laws); });
    report.timings.push_back({"entries", clock.lap()});

    std::vector<PairResult> all_pairs;
    for (std::size_t i = 0; i < entries.size(); ++i)
        for (std::size_t j = i + 1; j < entries.size(); ++j)
            if (entries[i].dim == entries[j].dim) all_pairs.push_back({i, j, false});
    parallel_for(all_pairs.size(), options.jobs, [&](std::size_t k) {
        auto& pr = all_pairs[k];
        pr.congruent = are_congruent(entries[pr.first].polytope, entries[pr.second].polytope).has_value();
    });
    for (const auto& pr : all_pairs) {
        const std::size_t d = entries[pr.first].dim;
        if (report.congruence.empty() || report.congruence.back().dim != d) report.congruence.push_back({d, {}});
        report.congruence.back().pairs.push_back(pr);
    }
    report.timings.push_back({"pairs", clock.lap()});

    const std::vector<Control> controls = controls_up_to(max_dim);
    report.controls.resize(controls.size());
    parallel_for(controls.size(), options.jobs, [&](std::size_t i) {
        report.controls[i] = {controls[i].name, controls[i].expectation, controls[i].check()};
    });
    report.timings.push_back({"controls", clock.lap()});

    report.passed = std::all_of(report.entries.begin(), report.entries.end(), [](const auto& e) { return e.passed; }) &&
                    std::none_of(all_pairs.begin(), all_pairs.end(), [](const auto& p) { return p.congruent; }) &&
                    std::all_of(report.controls.begin(), report.controls.end(), [](const auto& c) { return c.passed; });
    return report;
}

Json to_json(const VerifyReport& r, bool with_timings) {
    Json j;
    j["max_dim"] = r.max_dim;
    Json entries = Json::array();
    for (const auto& e : r.entries) {
        Json x;
        x["family"] = to_string(e.family);
        x["dim"] = e.dim;
        x["variant"] = e.variant;
        x["schlafli"] = e.schlafli;
        x["regular"] = e.regular;
        x["elementary"] = e.elementary;
        x["lattice_volume"] = to_json(e.volume);
        x["expected_lattice_volume"] = to_json(e.expected_volume);
        x["flag_count"] = e.flag_count;
        x["group_order"] = e.group_order;
        x["passed"] = e.passed;
        entries.push_back(std::move(x));
    }
    j["entries"] = std::move(entries);

    Json congruence = Json::array();
    for (const auto& dp : r.congruence) {
        std::vector<std::size_t> members;
        for (const auto& p : dp.pairs)
            for (std::size_t k : {p.first, p.second})
                if (std::find(members.begin(), members.end(), k) == members.end()) members.push_back(k);
        std::sort(members.begin(), members.end());
        const std::size_t m = members.size();
        std::vector<std::vector<bool>> matrix(m, std::vector<bool>(m, false));
        auto pos = [&](std::size_t k) {
            return static_cast<std::size_t>(std::find(members.begin(), members.end(), k) - members.begin());
        };
        for (std::size_t i = 0; i < m; ++i) matrix[i][i] = true;
        for (const auto& p : dp.pairs) matrix[pos(p.first)][pos(p.second)] = matrix[pos(p.second)][pos(p.first)] = p.congruent;
        Json names = Json::array();
        for (std::size_t k : members) names.push_back(r.entries[k].schlafli);
        Json x;
        x["dim"] = dp.dim;
        x["entries"] = std::move(names);
        x["congruent"] = matrix;
        x["pairs_checked"] = dp.pairs.size();
        congruence.push_back(std::move(x));
    }
    j["congruence"] = std::move(congruence);

    Json controls = Json::array();
    for (const auto& c : r.controls)
        controls.push_back({{"name", c.name}, {"expectation", c.expectation}, {"passed", c.passed}});
    j["controls"] = std::move(controls);
    if (with_timings) {
        Json t = Json::object();
        for (const auto& s : r.timings) t[s.stage] = s.seconds;
        j["timings_seconds"] = std::move(t);
    }
    j["passed"] = r.passed;
    return j;
}

}  // namespace latreg
