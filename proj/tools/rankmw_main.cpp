#include <rankmw/cli.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

struct CommonArgs {
    std::string field_file;
    std::string generator_file;
    std::string metric = "rank";
    std::string format = "json";
    std::uint64_t guard = rankmw::kDefaultEnumGuard;
    unsigned workers = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args, bool needs_generator) {
    cmd->add_option("--field", args.field_file, "field description JSON file");
    if (needs_generator)
        cmd->add_option("--generator", args.generator_file,
                        "generator JSON file (array of rows, or an object with "
                        "\"field\" and \"generator\")");
    cmd->add_option("--metric", args.metric, "rank, hamming, or both")
        ->check(CLI::IsMember({"rank", "hamming", "both"}));
    cmd->add_option("--guard", args.guard, "enumeration size guard");
    cmd->add_option("--workers", args.workers, "enumeration worker threads");
    cmd->add_option("--format", args.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));
}

rankmw::JobSpec build_spec(const std::string& command, const CommonArgs& args) {
    rankmw::JobSpec spec;
    spec.command = command;
    spec.metric = args.metric;
    spec.format = args.format;
    spec.guard = args.guard;
    spec.workers = args.workers;
    if (!args.generator_file.empty()) {
        rankmw::Json g = rankmw::load_json_file(args.generator_file);
        if (g.is_object()) {
            if (g.contains("field")) spec.field = g.at("field");
            spec.generator = g.at("generator");
        } else {
            spec.generator = g;
        }
    }
    if (!args.field_file.empty()) spec.field = rankmw::load_json_file(args.field_file);
    return spec;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact weight enumerators and MacWilliams transforms for codes over GF(q^m)"};
    app.require_subcommand(0, 1);

    std::string spec_file;
    app.add_option("--spec", spec_file, "run a job described by a JSON file");

    CommonArgs enum_args, dual_args, macw_args, mom_args, mrd_args, verify_args;
    unsigned mom_nu = 0, mrd_n = 0, mrd_k = 0;
    bool mom_nu_set = false;

    CLI::App* c_enum = app.add_subcommand("enumerate", "brute-force weight enumerator");
    add_common(c_enum, enum_args, true);
    CLI::App* c_dual = app.add_subcommand("dual", "dual code generator and enumerators");
    add_common(c_dual, dual_args, true);
    CLI::App* c_macw =
        app.add_subcommand("macwilliams", "analytic dual enumerator via the MacWilliams identity");
    add_common(c_macw, macw_args, true);
    CLI::App* c_mom = app.add_subcommand("moments", "moment identity table for nu = 0..n");
    add_common(c_mom, mom_args, true);
    c_mom->add_option("--nu", mom_nu, "restrict to a single nu")->each([&](const std::string&) {
        mom_nu_set = true;
    });
    CLI::App* c_mrd = app.add_subcommand("mrd", "MRD rank distribution from parameters");
    add_common(c_mrd, mrd_args, false);
    c_mrd->add_option("--n", mrd_n, "code length")->required();
    c_mrd->add_option("--k", mrd_k, "code dimension")->required();
    CLI::App* c_verify = app.add_subcommand("verify", "run the full identity suite on a code");
    add_common(c_verify, verify_args, true);

    CLI11_PARSE(app, argc, argv);

    try {
        rankmw::JobSpec spec;
        if (!spec_file.empty()) {
            spec = rankmw::job_from_json(rankmw::load_json_file(spec_file));
        } else if (c_enum->parsed()) {
            spec = build_spec("enumerate", enum_args);
        } else if (c_dual->parsed()) {
            spec = build_spec("dual", dual_args);
        } else if (c_macw->parsed()) {
            spec = build_spec("macwilliams", macw_args);
        } else if (c_mom->parsed()) {
            spec = build_spec("moments", mom_args);
            if (mom_nu_set) spec.nu = mom_nu;
        } else if (c_mrd->parsed()) {
            spec = build_spec("mrd", mrd_args);
            spec.n = mrd_n;
            spec.k = mrd_k;
        } else if (c_verify->parsed()) {
            spec = build_spec("verify", verify_args);
        } else {
            std::cerr << app.help();
            return 2;
        }
        return rankmw::run_job(spec, std::cout, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
