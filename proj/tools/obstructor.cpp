#include <iostream>

#include "CLI11.hpp"
#include "obs/scenarios.hpp"

namespace {

std::vector<obs::Rat> parseSeed(const std::string& s) {
    std::vector<obs::Rat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(obs::parseRational(item));
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant obstruction computations for mass partition test maps"};
    app.require_subcommand(1);

    obs::ScenarioConfig cfg;
    std::string format = "text", seed, variant = "section-equations", convention;
    std::vector<int> alpha;
    int a = 0, b = 0, r = 0, n = 0;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
        sub->add_flag("--timing", cfg.timing, "append wall-clock time");
    };

    auto* hyp = app.add_subcommand("hyperplane", "two-hyperplane partition of W_n for a six-tuple (a1,a2,a3,a1,a2,a3)");
    hyp->add_option("--alpha", alpha, "a1,a2,a3")->required()->delimiter(',')->expected(3);
    hyp->add_option("--seed", seed, "image of t, comma separated rationals summing to 0");
    hyp->add_option("--variant", variant)->check(
        CLI::IsMember({"section-equations", "general-formula", "literal-sum8"}));
    hyp->add_option("--convention", convention)->check(CLI::IsMember({"forward", "inverted"}));
    common(hyp);

    auto* fan = app.add_subcommand("fan", "3-fan partition with fractions (a,b,a)/n");
    fan->add_option("--a", a)->required();
    fan->add_option("--b", b)->required();
    fan->add_option("--seed", seed);
    fan->add_option("--convention", convention)->check(CLI::IsMember({"forward", "inverted"}));
    common(fan);

    auto* lov = app.add_subcommand("lovasz", "torus arrangement check");
    lov->add_option("--r", r)->required();
    lov->add_option("--n", n)->required();
    common(lov);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 3;
    }

    try {
        if (hyp->parsed()) {
            cfg.kind = obs::ScenarioKind::HyperplaneSixTuple;
            cfg.parameters = alpha;
            cfg.tenVariant = obs::parseTenVariant(variant);
        } else if (fan->parsed()) {
            cfg.kind = obs::ScenarioKind::FanTriple;
            cfg.parameters = {a, b};
        } else {
            cfg.kind = obs::ScenarioKind::LovaszCheck;
            cfg.parameters = {r, n};
        }
        if (!convention.empty()) cfg.invertEpsilon = convention == "inverted";
        if (!seed.empty()) cfg.seedImage = parseSeed(seed);

        obs::Report rep = obs::runScenario(cfg);
        std::cout << (format == "json" ? obs::renderJson(rep.data) : obs::renderText(rep.data));
        if (rep.exitCode == 2) std::cerr << "general position fails for this seed; pass another one with --seed\n";
        return rep.exitCode;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid parameters: " << e.what() << "\n";
        return 3;
    }
}
