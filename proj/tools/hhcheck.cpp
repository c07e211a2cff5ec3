#include "hhset/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv)
{
    CLI::App app{"Checks Hermite-Hadamard type inclusions for strongly harmonic convex set-valued maps"};
    std::string config;
    hhset::Overrides o;
    app.add_option("--config", config, "Config document (JSON)")->required()->check(CLI::ExistingFile);
    app.add_option("--mode", o.mode, "Override mode: verify, search or baseline");
    app.add_option("--format", o.format, "Report format: json or text");
    app.add_option("--out", o.out, "Report path (stdout when absent)");
    app.add_option("--seed", o.seed, "Override seed");
    app.add_option("--tol", o.tol, "Override relative inclusion tolerance");
    app.add_option("--threads", o.threads, "Worker threads");
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    return hhset::execute(config, o, std::cout, std::cerr);
}
