#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "qshelf/errors.hpp"
#include "qshelf/verify.hpp"

using namespace qshelf;

int main(int argc, char** argv)
{
    CLI::App app{"exact verification runs over the shelf series"};
    app.set_config("--config", "", "flat key = value file with the same keys as the flags");

    std::string suite;
    std::string k = "3", shelves = "0..3", start = "0..1", format = "text", out;
    Config cfg;
    std::vector<std::string> faults;
    bool list = false;

    app.add_option("suite", suite, "identities, shelves, empirical, matrices, combinatorics, axq or all")->required();
    app.add_option("--k", k, "k or A..B");
    app.add_option("--degree", cfg.degree, "truncation: coefficients of q^0 .. q^(N-1)");
    app.add_option("--shelves", shelves, "J..Jmax, or Jmax alone for 0..Jmax");
    app.add_option("--start-shelf", start, "starting shelf J or J..J'");
    app.add_option("--depth", cfg.depth, "matrix and partition checks run j = J+1 .. J+depth");
    app.add_option("--nmax", cfg.nmax, "largest n for partition counts");
    app.add_option("--nmax-over", cfg.nmax_over, "largest n for overpartition counts");
    app.add_option("--axq-degree", cfg.axq_degree, "q-precision of the (a;x;q) series");
    app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", out, "write the report here instead of stdout");
    app.add_option("--inject-fault", faults, "CHECK:lhs|rhs:EXP, flips one coefficient (test hook)");
    app.add_flag("--witness", cfg.witness, "list accepted partitions at a counting mismatch");
    app.add_flag("--list", list, "print check ids and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        cfg.k = parse_range(k);
        cfg.shelves = parse_range(shelves);
        if (shelves.find("..") == std::string::npos)
            cfg.shelves.lo = 0;
        cfg.start_shelf = parse_range(start);
        for (const auto& f : faults)
            cfg.faults.push_back(parse_fault(f));

        if (list) {
            for (const auto& id : list_checks(suite, cfg))
                std::cout << id << "\n";
            return 0;
        }

        Report rep = run_suite(suite, cfg);
        std::string text = format == "json" ? emit_json(rep) : emit_text(rep);
        if (out.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out, std::ios::binary);
            if (!f)
                throw std::runtime_error("cannot open " + out + " for writing");
            f << text;
            if (!f)
                throw std::runtime_error("write to " + out + " failed");
        }
        return rep.ok() ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
