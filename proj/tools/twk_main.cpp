#include "twk/cli.hpp"

#include <CLI11.hpp>

#include <iostream>

int main(int argc, char** argv) {
    CLI::App app{"twk: exact equivariant higher twisted K-theory of SU(2) and SU(3)"};

    twk::RunConfig cfg;
    std::string group = "su2", mode = "compute", emit = "text", route = "koszul";

    app.add_option("--group", group, "su2 or su3")->check(CLI::IsMember({"su2", "su3"}));
    app.add_option("--functor", cfg.functor,
                   "functor DSL: ext_top, ext_full, fw(b), poly:<laurent in t>, combined with "
                   "* and ^m");
    app.add_option("--mode", mode, "compute, verify or export-matrices")
        ->check(CLI::IsMember({"compute", "verify", "export-matrices"}));
    app.add_option("--emit", emit, "json, tex or text")
        ->check(CLI::IsMember({"json", "tex", "text"}));
    app.add_option("--oracle-points", cfg.oracle_points, "number of oracle sample points")
        ->check(CLI::PositiveNumber);
    app.add_option("--seed", cfg.seed, "oracle RNG seed");
    app.add_option("--route", route, "koszul, complex or both (su3 only)")
        ->check(CLI::IsMember({"koszul", "complex", "both"}));
    app.add_option("--output", cfg.output_path, "output path (default stdout)");
    app.add_option("--batch", cfg.batch_path,
                   "file of functor specs, one per line; emits a CSV summary");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : twk::kExitUsage;
    }

    if (cfg.functor.empty() && cfg.batch_path.empty()) {
        std::cerr << "either --functor or --batch is required\n";
        return twk::kExitUsage;
    }

    cfg.group = group == "su2" ? twk::Group::SU2 : twk::Group::SU3;
    cfg.mode = mode == "compute"  ? twk::Mode::Compute
               : mode == "verify" ? twk::Mode::Verify
                                  : twk::Mode::ExportMatrices;
    cfg.emit = emit == "json" ? twk::EmitFormat::Json
               : emit == "tex" ? twk::EmitFormat::Tex
                               : twk::EmitFormat::Text;
    cfg.route = route == "koszul"    ? twk::SU3Route::Koszul
                : route == "complex" ? twk::SU3Route::Complex
                                     : twk::SU3Route::Both;

    return twk::run(cfg, std::cout, std::cerr);
}
