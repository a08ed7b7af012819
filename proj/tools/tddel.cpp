#include "tddel/errors.hpp"
#include "tddel/io.hpp"
#include "tddel/rational.hpp"
#include "tddel/rdel.hpp"
#include "tddel/tdsystem.hpp"
#include "tddel/witness.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using tddel::io::json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path);
    if (!in) throw tddel::InputError("cannot open input file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw tddel::InputError("cannot open output file '" + path + "'");
    out << text;
}

struct IoOptions {
    std::string in = "-";
    std::string out = "-";
};

void add_io(CLI::App* cmd, IoOptions& io) {
    cmd->add_option("--in", io.in, "input file (default: stdin)");
    cmd->add_option("--out", io.out, "output file (default: stdout)");
}

int run_selftest() {
    int failures = 0;
    const auto check = [&](const char* name, bool ok) {
        std::cout << (ok ? "ok " : "FAIL ") << name << "\n";
        if (!ok) ++failures;
    };

    // The worked 5-element example: three orders, facets 12 / 234 / 245.
    const tddel::Representation five({{"1", "2", "5", "4", "3"},
                                      {"3", "2", "1", "4", "5"},
                                      {"5", "4", "3", "2", "1"}});
    const auto five_facets = tddel::sigma(five).facets();
    check("five-element sigma facets",
          five_facets == std::set<tddel::Face>{{"1", "2"}, {"2", "3", "4"}, {"2", "4", "5"}});
    check("five-element sigma rejects 123",
          !tddel::sigma(five).contains(tddel::Face{"1", "2", "3"}));

    // The triangle example: system matrix dimensions and feasibility.
    const tddel::Representation triangle({{"b", "c", "a"}, {"a", "c", "b"}, {"a", "b", "c"}});
    const auto system = tddel::build_system(triangle);
    check("triangle system is 9 x 6",
          system.rows.size() == 9 && system.num_cols() == 6);
    const auto verdict = tddel::decide(triangle);
    check("triangle system is feasible", verdict.feasible());

    // The counterexample: pinned certificate and infeasibility.
    const auto cex = tddel::counterexample_representation();
    check("counterexample is standard", tddel::standardness(cex).is_standard);
    const auto family = tddel::deduce_family(tddel::sigma(cex));
    const auto pinned = tddel::pinned_certificate(family, cex);
    check("pinned certificate verifies",
          tddel::verify_multiflow(cex, pinned).certifies());
    check("counterexample system is infeasible", !tddel::decide(cex).feasible());

    return failures == 0 ? 0 : 1;
}

int dispatch(const std::string& verb, const IoOptions& io, const std::string& format,
             bool exhaustive) {
    using namespace tddel;
    if (verb == "sigma") {
        const auto r = io::representation_from_json(io::parse(read_input(io.in)));
        write_output(io.out, io::dump(io::to_json(sigma(r))));
    } else if (verb == "tdd") {
        const auto p = io::points_from_json(io::parse(read_input(io.in)));
        write_output(io.out, io::dump(io::to_json(tdd(p))));
    } else if (verb == "rep-of") {
        const auto p = io::points_from_json(io::parse(read_input(io.in)));
        write_output(io.out, io::dump(io::to_json(representation_of(p))));
    } else if (verb == "system") {
        const auto r = io::representation_from_json(io::parse(read_input(io.in)));
        const auto s = build_system(r);
        if (format == "csv")
            write_output(io.out, io::system_to_csv(s));
        else
            write_output(io.out, io::dump(io::to_json(s)));
    } else if (verb == "decide") {
        const auto r = io::representation_from_json(io::parse(read_input(io.in)));
        write_output(io.out, io::dump(io::to_json(decide(r))));
    } else if (verb == "realize") {
        const auto r = io::representation_from_json(io::parse(read_input(io.in)));
        if (const auto p = realize(r))
            write_output(io.out, io::dump(io::to_json(*p)));
        else
            write_output(io.out, io::dump(json{{"realizable", false}}));
    } else if (verb == "rdel") {
        const auto p = io::planar_from_json(io::parse(read_input(io.in)));
        write_output(io.out, io::dump(io::to_json(rdelaunay(p))));
    } else if (verb == "rdel-realize") {
        const auto p = io::planar_from_json(io::parse(read_input(io.in)));
        write_output(io.out, io::dump(io::to_json(rdel_realize(p))));
    } else if (verb == "standard") {
        const auto r = io::representation_from_json(io::parse(read_input(io.in)));
        write_output(io.out, io::dump(io::to_json(standardness(r))));
    } else if (verb == "counterexample") {
        const auto start = std::chrono::steady_clock::now();
        SweepOptions options;
        options.exhaustive = exhaustive;
        const auto report = verify_counterexample(options);
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                                 std::chrono::steady_clock::now() - start)
                                 .count();
        write_output(io.out, io::dump(io::to_json(report)));
        std::cerr << "candidates: " << report.candidates_total
                  << ", matching: " << report.candidates_matching
                  << ", all infeasible: " << (report.all_infeasible ? "yes" : "no")
                  << ", pinned certificate everywhere: "
                  << (report.pinned_all_ok ? "yes" : "no") << " (" << elapsed
                  << " ms, " << worker_count() << " workers)\n";
        if (!report.all_infeasible || !report.pinned_all_ok) return 1;
    } else {
        throw InputError("unknown verb '" + verb + "'");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dushnik-Miller representations and TD-Delaunay complexes"};
    app.require_subcommand(1);

    static const std::vector<std::pair<const char*, const char*>> verbs = {
        {"sigma", "complex generated by a representation"},
        {"tdd", "TD-Delaunay complex of points on H_d"},
        {"rep-of", "coordinate orders of a point configuration"},
        {"system", "the TD-Delaunay inequality system of a representation"},
        {"decide", "exact feasibility: solution or multi-flow certificate"},
        {"realize", "point set on H_d realizing a feasible representation"},
        {"rdel", "rectangular Delaunay complex of planar points"},
        {"rdel-realize", "TD-Delaunay realization of a rectangular Delaunay complex"},
        {"standard", "standardness of a representation"},
        {"counterexample", "sweep the dimension-4 counterexample family"},
        {"selftest", "run the built-in example checks"},
    };

    std::map<std::string, IoOptions> io_options;
    std::string system_format = "json";
    bool exhaustive = false;
    unsigned seed = 0;

    for (const auto& [name, description] : verbs) {
        CLI::App* cmd = app.add_subcommand(name, description);
        if (std::string(name) == "selftest") continue;
        add_io(cmd, io_options[name]);
        if (std::string(name) == "system")
            cmd->add_option("--format", system_format, "json or csv")
                ->check(CLI::IsMember({"json", "csv"}));
        if (std::string(name) == "counterexample")
            cmd->add_flag("--exhaustive", exhaustive,
                          "also enumerate every middle arrangement (slow)");
    }
    app.add_option("--seed", seed, "seed for randomized verbs (none are randomized yet)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    const std::string verb = app.get_subcommands().front()->get_name();
    try {
        if (verb == "selftest") return run_selftest();
        return dispatch(verb, io_options[verb], system_format, exhaustive);
    } catch (const tddel::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const tddel::InternalError& e) {
        std::cerr << "internal invariant violated: " << e.what() << "\n";
        return 1;
    }
}
