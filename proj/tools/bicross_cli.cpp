#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bicross/commands.hpp"

namespace {

struct Options {
    std::vector<std::string> positionals;
    std::string preset;
    std::optional<int> radius;
    std::string format = "json";
    int max_simples = bicross::kDefaultMaxSimples;
};

void print(const bicross::Report& r, const std::string& format) {
    if (format == "text") {
        std::cout << r.to_text();
    } else {
        std::cout << r.to_json().dump(2) << "\n";
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bicrossed-product Hopf algebras: axioms, simple comodules, characters and fusion rules"};
    app.require_subcommand(1);
    app.set_version_flag("--version", bicross::kToolVersion);

    Options opt;
    struct Usage {
        const char* name;
        const char* help;
        const char* args;
    };
    const std::vector<Usage> usages{
        {"verify", "check the matched pair, the cocycle laws and every Hopf axiom on the ball", ""},
        {"simples", "list the simple comodules over the ball with the dimension audit", ""},
        {"character", "irreducible character of one simple", "<f> <chi-index> | <f>:<i>"},
        {"fuse", "decompose the product of two simples", "<f1>:<i1> <f2>:<i2>"},
        {"dual", "dual of a simple", "<f>:<i>"},
        {"indicators", "duals and Frobenius-Schur indicators over the ball", ""},
        {"fusion-table", "all products of simples over the ball, with based-ring checks", ""},
        {"cqg-check", "unitarity, *-structure and Haar state checks", ""},
    };
    for (const auto& u : usages) {
        CLI::App* sub = app.add_subcommand(u.name, u.help);
        sub->add_option("items", opt.positionals,
                        std::string("[config.json] ") + u.args + " (config path omitted when --preset is given)");
        sub->add_option("--preset", opt.preset, "named preset, e.g. h_z_z2, h_z_z2n:2, drinfeld:S3");
        sub->add_option("--radius", opt.radius, "ball radius in F (defaults to the config's radius)")
            ->check(CLI::NonNegativeNumber);
        sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"json", "text"}));
        if (std::string(u.name) == "fusion-table") {
            sub->add_option("--max-simples", opt.max_simples, "refuse tables with more simples than this")
                ->check(CLI::PositiveNumber);
        }
    }
    app.add_subcommand("presets", "list the shipped presets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : bicross::kExitInvalid;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string command = sub->get_name();
    if (command == "presets") {
        for (const auto& p : bicross::list_presets()) std::cout << p << "\n";
        return 0;
    }

    std::optional<bicross::Config> cfg;
    bicross::CommandRequest req;
    req.command = command;
    req.radius = opt.radius;
    req.max_simples = opt.max_simples;
    try {
        std::vector<std::string> args = opt.positionals;
        if (!opt.preset.empty()) {
            cfg = bicross::load_preset(opt.preset);
        } else {
            if (args.empty()) throw bicross::InvalidInput("a config path or --preset is required");
            cfg = bicross::load_config_file(args.front());
            args.erase(args.begin());
        }
        req.args = std::move(args);
    } catch (const bicross::Error& e) {
        const auto r = bicross::error_report(command, nullptr, e);
        print(r, opt.format);
        return r.exit_code;
    }

    try {
        const auto r = bicross::run_command(*cfg, req);
        print(r, opt.format);
        return r.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return bicross::kExitInternal;
    }
}
