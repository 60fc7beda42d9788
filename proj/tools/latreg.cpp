// latreg: command-line front end for the lattice-regular polytope toolkit.
//
// Exit status: 0 on success, 1 when verify-theorem or classify-2d finds a failing
// check, 2 on usage or input errors.

#include <fstream>
#include <iostream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "latreg/verify.hpp"

namespace {

using namespace latreg;

constexpr int kCheckFailed = 1;
constexpr int kUsageError = 2;

void write_json(const Json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << j.dump(2) << '\n';
}

std::string matrix_text(const AffineMap& f) {
    std::ostringstream os;
    for (std::size_t i = 0; i < f.dim(); ++i) {
        os << "  [";
        for (std::size_t k = 0; k < f.dim(); ++k) os << (k ? " " : "") << to_string(f.linear()(i, k));
        os << " | " << to_string(f.translation()[i]) << "]\n";
    }
    return os.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice-regular polytopes: exact invariants, symmetries and congruence"};
    app.require_subcommand(1);

    std::size_t max_dim = 4;
    std::string format = "text";
    auto* catalog = app.add_subcommand("catalog", "List the catalog of lattice-regular polytopes");
    catalog->add_option("--max-dim", max_dim, "Largest dimension")->check(CLI::Range(1, 12));
    catalog->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

    std::string file_a, file_b;
    auto* volume = app.add_subcommand("volume", "Normalized lattice volume");
    volume->add_option("file", file_a, "Polytope JSON")->required();
    auto* regular = app.add_subcommand("regular", "Test lattice regularity");
    regular->add_option("file", file_a, "Polytope JSON")->required();
    auto* elementary = app.add_subcommand("elementary", "Test whether the polytope is elementary");
    elementary->add_option("file", file_a, "Polytope JSON")->required();

    bool emit_map = false;
    auto* congruent = app.add_subcommand("congruent", "Test lattice congruence of two polytopes");
    congruent->add_option("first", file_a, "Polytope JSON")->required();
    congruent->add_option("second", file_b, "Polytope JSON")->required();
    congruent->add_flag("--emit-map", emit_map, "Print a witness map as JSON");

    bool emit_matrices = false;
    auto* symmetries = app.add_subcommand("symmetries", "Lattice symmetry group");
    symmetries->add_option("file", file_a, "Polytope JSON")->required();
    symmetries->add_flag("--emit-matrices", emit_matrices, "Print every group element");

    std::size_t verify_dim = 4;
    std::size_t jobs = 1;
    std::string report_path;
    bool timings = false;
    bool group_laws = false;
    auto* verify = app.add_subcommand("verify-theorem", "Check the classification over the catalog");
    verify->add_option("--max-dim", verify_dim, "Largest dimension (1-6)")->required();
    verify->add_option("--jobs", jobs, "Worker threads (0 = hardware concurrency)");
    verify->add_option("--report", report_path, "Write the JSON report here");
    verify->add_flag("--timings", timings, "Include wall times in the report");
    verify->add_flag("--group-laws", group_laws, "Also check closure, inverses and free action exhaustively");

    long radius = 2;
    std::string classify_report;
    auto* classify = app.add_subcommand("classify-2d", "Classify small lattice-regular polygons");
    classify->add_option("--radius", radius, "Grid radius (>= 2)")->required();
    classify->add_option("--report", classify_report, "Write the JSON report here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*catalog) {
            const auto entries = all_entries(max_dim);
            if (format == "json") {
                write_json(to_json(entries), "");
            } else {
                for (const auto& e : entries)
                    std::cout << e.schlafli << "  dim " << e.dim << "  vertices " << e.polytope.vertex_count()
                              << "  volume " << e.expected.lattice_volume << "  flags " << e.expected.flag_count << '\n';
            }
        } else if (*volume) {
            std::cout << lattice_volume(read_polytope_file(file_a)) << '\n';
        } else if (*regular) {
            const auto r = is_lattice_regular(read_polytope_file(file_a));
            std::cout << (r.regular ? "regular" : "not regular") << " (" << r.flag_count << " flags)\n";
        } else if (*elementary) {
            std::cout << (is_elementary(read_polytope_file(file_a)) ? "elementary" : "not elementary") << '\n';
        } else if (*congruent) {
            const auto map = are_congruent(read_polytope_file(file_a), read_polytope_file(file_b));
            if (emit_map && map)
                write_json(to_json(*map), "");
            else
                std::cout << (map ? "congruent" : "not congruent") << '\n';
        } else if (*symmetries) {
            const Polytope p = read_polytope_file(file_a);
            const auto group = symmetry_group(p);
            std::cout << "order " << group.order() << ", flags " << group.flag_count
                      << (group.is_flag_transitive() ? ", flag-transitive" : "") << '\n';
            if (emit_matrices)
                for (const auto& g : group.elements) std::cout << matrix_text(g) << '\n';
        } else if (*verify) {
            if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
            const auto report = run_verify_theorem(verify_dim, {jobs, group_laws});
            for (const auto& e : report.entries)
                std::cout << (e.passed ? "PASS " : "FAIL ") << e.schlafli << " (dim " << e.dim << "): regular="
                          << e.regular << " elementary=" << e.elementary << " volume=" << e.volume
                          << " flags=" << e.flag_count << " group=" << e.group_order << '\n';
            for (const auto& dp : report.congruence) {
                std::size_t hits = 0;
                for (const auto& p : dp.pairs) hits += p.congruent;
                std::cout << (hits == 0 ? "PASS " : "FAIL ") << "dim " << dp.dim << ": " << dp.pairs.size()
                          << " pairs, " << hits << " congruent\n";
            }
            for (const auto& c : report.controls)
                std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.expectation << '\n';
            if (!report_path.empty()) write_json(to_json(report, timings), report_path);
            std::cout << (report.passed ? "theorem verified up to dimension " : "verification FAILED up to dimension ")
                      << verify_dim << '\n';
            return report.passed ? 0 : kCheckFailed;
        } else if (*classify) {
            const auto report = run_classify_2d(radius);
            std::cout << "examined " << report.examined << " polygons, " << report.passing
                      << " elementary and regular, " << report.regular_pentagons << " pentagons\n";
            for (const auto& c : report.classes) {
                std::cout << "class of " << c.representative.vertex_count() << "-gon";
                for (const auto& v : c.representative.vertices()) std::cout << " (" << v[0] << "," << v[1] << ")";
                std::cout << " -> ";
                for (const auto& m : c.catalog_matches) std::cout << m << ' ';
                std::cout << '\n';
            }
            if (!classify_report.empty()) write_json(to_json(report), classify_report);
            std::cout << report.classes.size() << " congruence classes" << (report.passed ? "" : " (MISMATCH)") << '\n';
            return report.passed ? 0 : kCheckFailed;
        }
    } catch (const std::exception& e) {
        std::cerr << "latreg: " << e.what() << '\n';
        return kUsageError;
    }
    return 0;
}
