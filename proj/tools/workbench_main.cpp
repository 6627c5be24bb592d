#include <CLI11.hpp>

#include <iostream>

#include "wb/workbench.hpp"

namespace {

std::optional<std::pair<int, int>> parse_range(const std::string& text) {
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw wb::usage_error("invalid-range", text + " (expected a..b)");
    try {
        int a = std::stoi(text.substr(0, dots));
        int b = std::stoi(text.substr(dots + 2));
        if (a > b) throw wb::usage_error("invalid-range", text);
        return std::make_pair(a, b);
    } catch (const wb::Error&) {
        throw;
    } catch (...) {
        throw wb::usage_error("invalid-range", text);
    }
}

void emit(const wb::Json& rep, bool as_json) {
    if (as_json)
        std::cout << rep.dump(2) << "\n";
    else
        std::cout << wb::render_report(rep);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"stable cohomology workbench"};
    app.require_subcommand(1);

    std::string ring_path, n_range_text, field_text, f_text;
    int window = -1;
    bool as_json = false;
    int sh_e = 2, sh_N = 8, sh_D = 14;
    int mm_e = 2, mm_deg = 3, mm_socle = 3;
    std::string rings_dir = WB_RINGS_DIR;

    auto add_common = [&](CLI::App* cmd, bool with_ring) {
        if (with_ring)
            cmd->add_option("ring", ring_path, "ring presentation JSON")
                ->required();
        cmd->add_option("--n-range", n_range_text, "cohomological range a..b");
        cmd->add_option("--field", field_text, "field override: prime p or Q");
        cmd->add_option("--window", window, "homological window");
        cmd->add_flag("--json", as_json, "emit the JSON report");
    };

    std::vector<std::string> ring_commands = {"info",     "betti",  "bass",
                                              "bounded",  "stable", "classify",
                                              "sjodin",   "duality"};
    for (const auto& name : ring_commands) add_common(app.add_subcommand(name), true);

    auto* sh = app.add_subcommand("shamash", "hypersurface resolution from a Koszul complex");
    sh->add_option("--e", sh_e, "number of variables")->required();
    sh->add_option("--f", f_text, "hypersurface polynomial")->required();
    sh->add_option("--N", sh_N, "homological length");
    sh->add_option("--D", sh_D, "internal truncation degree");
    sh->add_option("--field", field_text, "field override: prime p or Q");
    sh->add_flag("--json", as_json, "emit the JSON report");

    auto* mm = app.add_subcommand("matrix-model", "periodic block matrix checks");
    mm->add_option("--e", mm_e, "base");
    mm->add_option("--max-degree", mm_deg, "word degree window");
    mm->add_option("--socle-base", mm_socle, "base exponent window");
    mm->add_option("--field", field_text, "field override: prime p or Q");
    mm->add_flag("--json", as_json, "emit the JSON report");

    auto* st = app.add_subcommand("selftest", "run the acceptance suite");
    st->add_option("--rings-dir", rings_dir, "directory with the ring fixtures");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 1 : 0;
    }

    try {
        auto* cmd = app.get_subcommands().front();
        const std::string name = cmd->get_name();
        wb::FieldSpec fs = wb::FieldSpec::prime(32003);
        if (!field_text.empty()) fs = wb::parse_field_override(field_text);

        if (name == "selftest") {
            bool ok = wb::run_acceptance(rings_dir, std::cout);
            return ok ? 0 : 3;
        }
        if (name == "shamash") {
            emit(wb::run_shamash(sh_e, f_text, sh_N, sh_D, fs), as_json);
            return 0;
        }
        if (name == "matrix-model") {
            emit(wb::run_matrix_model(mm_e, mm_deg, mm_socle, fs), as_json);
            return 0;
        }
        wb::RunFlags flags;
        if (!field_text.empty()) flags.field_override = field_text;
        if (window >= 0) flags.window = window;
        if (!n_range_text.empty()) flags.n_range = parse_range(n_range_text);
        flags.json = as_json;
        auto doc = wb::parse_ring(ring_path);
        emit(wb::run_command(name, doc, flags), as_json);
        return 0;
    } catch (const wb::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return static_cast<int>(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
