#include "cli/job.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <iterator>

namespace {

int fail(const std::string& kind, const std::string& message) {
    std::cerr << okb::cli::error_json(kind, message).dump() << "\n";
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    using namespace okb::cli;

    CLI::App app{"Cones, volumes and Newton-Okounkov bodies on P(E) from Harder-Narasimhan data"};
    app.require_subcommand(0, 1);

    bool from_stdin = false;
    app.add_flag("--stdin", from_stdin, "Read a JSON job document from standard input");

    std::string hn, cls, t, tau, w, output = "json";
    unsigned m = 0, svg_scale = 100;
    bool through = false;

    const char* commands[] = {"cones", "volume", "restricted", "body", "slice", "global", "zariski", "polygon", "sympow"};
    for (const char* name : commands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--hn", hn, "HN data as rank:slope,... with increasing slopes")->required();
        sub->add_option("--class", cls, "Class a,b meaning a(xi - mu_max f) + b f");
        sub->add_option("--t", t, "Parameter t of xi - t f");
        sub->add_option("--tau", tau, "Slice position nu_1 = tau");
        sub->add_option("--w", w, "Flag permutation w(1),...,w(r)");
        sub->add_option("--m", m, "Symmetric power exponent");
        sub->add_flag("--through", through, "Flag point on the negative section (ruled surfaces)");
        sub->add_option("--output", output, "json or svg")->check(CLI::IsMember({"json", "svg"}));
        sub->add_option("--svg-scale", svg_scale, "Pixels per unit")->check(CLI::PositiveNumber);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return fail("InvalidArgument", e.what());
    }

    try {
        JobSpec job;
        if (from_stdin) {
            if (!app.get_subcommands().empty())
                return fail("InvalidArgument", "--stdin cannot be combined with a subcommand");
            const std::string text{std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
            nlohmann::json doc;
            try {
                doc = nlohmann::json::parse(text);
            } catch (const nlohmann::json::exception& e) {
                return fail("InvalidArgument", std::string("malformed job JSON: ") + e.what());
            }
            job = job_from_json(doc);
        } else {
            if (app.get_subcommands().empty()) return fail("InvalidArgument", "a subcommand or --stdin is required");
            job.command = parse_command(app.get_subcommands().front()->get_name());
            job.hn = parse_hn(hn);
            if (!cls.empty()) job.cls = parse_class(cls);
            if (!t.empty()) job.t = okb::parse_rat(t);
            if (!tau.empty()) job.tau = okb::parse_rat(tau);
            if (!w.empty()) job.w = parse_permutation(w);
            if (m > 0) job.m = m;
            job.through = through;
            job.output = output == "svg" ? Output::svg : Output::json;
            job.svg_scale = svg_scale;
        }
        std::cout << run(job);
        return 0;
    } catch (const okb::Error& e) {
        return fail(okb::to_string(e.kind()), e.what());
    }
}
