// toric2fano: intersection numbers and 2-Fano tests for smooth complete toric varieties.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"

#include "toric/io.hpp"

namespace {

using namespace toric;

constexpr int kExitUsage = 1;
constexpr int kExitInvalid = 2;

struct Options {
    bool pretty = false;
    std::string input = "-";
    std::string cone;
    bool fast = false;
    unsigned jobs = 1;
    std::size_t m = 2;
    std::size_t n = 2;
    std::string twists;
    std::size_t dim = 2;
    long long budget = 2;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ToricError(ErrorKind::MalformedInput, "cannot open " + path);
    return {std::istreambuf_iterator<char>(in), {}};
}

Fan read_fan(const std::string& path) { return fan_from_json(parse_json_text(read_input(path))); }

std::vector<long long> parse_int_list(const std::string& text) {
    std::vector<long long> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) continue;
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(part, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != part.size()) throw CLI::ValidationError("list", "not an integer: " + part);
        out.push_back(v);
    }
    return out;
}

Cone parse_cone(const std::string& text) {
    std::vector<RayId> ids;
    for (long long v : parse_int_list(text)) {
        if (v < 0) throw CLI::ValidationError("--cone", "negative ray index");
        ids.push_back(static_cast<RayId>(v));
    }
    return Cone(std::move(ids));
}

void emit(const Json& value, const Options& opt) {
    if (opt.pretty) {
        std::cout << render_pretty(value);
    } else {
        std::cout << value.dump(2) << '\n';
    }
}

unsigned default_jobs() {
    if (const char* env = std::getenv("TORIC2FANO_JOBS")) {
        const long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

Json surface_json(const Fan& fan, IntersectionEngine& engine, const Cone& tau) {
    const SurfaceKind kind = classify_surface(fan, tau);
    const CycleClass cls = surface_class(engine, tau, kind);
    Json out = to_json(kind, tau);
    out["ch2_pair"] = to_fraction_string(ch2_pair(cls));
    out["class"] = to_json(cls);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intersection theory and 2-Fano tests for smooth complete toric varieties"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    Options opt;
    opt.jobs = default_jobs();
    app.add_flag("--pretty", opt.pretty, "Aligned text output instead of JSON");

    auto add_input = [&](CLI::App* sub) { sub->add_option("input", opt.input, "Fan JSON file, '-' for stdin"); };

    auto* check = app.add_subcommand("check", "Validate a fan (smooth and complete)");
    add_input(check);
    auto* cls = app.add_subcommand("class", "Class polynomial I_{Y/X} of the orbit closure of a cone");
    add_input(cls);
    cls->add_option("--cone", opt.cone, "Comma-separated ray ids (default: the whole variety)");
    auto* curve = app.add_subcommand("curve", "Wall relation and class of a torus-invariant curve");
    add_input(curve);
    curve->add_option("--wall", opt.cone, "Comma-separated ray ids of a (d-1)-cone")->required();
    auto* surface = app.add_subcommand("surface", "Recognize torus-invariant surfaces and pair them with ch2");
    add_input(surface);
    surface->add_option("--cone", opt.cone, "A (d-2)-cone (default: every one)");
    auto* chern = app.add_subcommand("chern", "Chern degrees c1^d, c1^{d-2}c2, c1^{d-2}ch2 and Euler number");
    add_input(chern);
    auto* two_fano = app.add_subcommand("two-fano", "Fano and 2-Fano report for one fan");
    add_input(two_fano);
    two_fano->add_flag("--fast", opt.fast, "Stop early when not Fano or the degree filter fails");
    auto* scan_cmd = app.add_subcommand("scan", "Scan a JSON-lines fan database");
    add_input(scan_cmd);
    scan_cmd->add_flag("--fast", opt.fast, "Run the degree filter before the surface sweep");
    scan_cmd->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    auto* bundle = app.add_subcommand("bundle", "Fan of P_{P^{n-1}}(O + O(a_1) + ... + O(a_{m-1}))");
    bundle->add_option("--m", opt.m, "Fiber rank m")->required();
    bundle->add_option("--n", opt.n, "Base P^{n-1}")->required();
    bundle->add_option("--twists", opt.twists, "a_1,...,a_{m-1}, non-increasing")->required();
    auto* del_pezzo = app.add_subcommand("delpezzo", "The five toric del Pezzo surfaces as JSON lines");
    auto* sweep = app.add_subcommand("sweep-rank2", "Check the Picard-number-two classification");
    sweep->add_option("--dim", opt.dim, "Dimension")->required();
    sweep->add_option("--budget", opt.budget, "Bound on the twist sum")->required();
    sweep->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    auto* ne2 = app.add_subcommand("ne2-rank", "dim N_2(X) from the surface pairing matrix");
    add_input(ne2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (check->parsed()) {
            const Fan fan = read_fan(opt.input);
            emit({{"smooth", true}, {"complete", true}, {"picard", fan.picard_number()}}, opt);
        } else if (cls->parsed()) {
            const Fan fan = read_fan(opt.input);
            emit(to_json(class_polynomial(fan, parse_cone(opt.cone))), opt);
        } else if (curve->parsed()) {
            const Fan fan = read_fan(opt.input);
            const Cone wall = parse_cone(opt.cone);
            Json out = to_json(wall_relation(fan, wall));
            out["class"] = to_json(curve_class(fan, wall));
            emit(out, opt);
        } else if (surface->parsed()) {
            const Fan fan = read_fan(opt.input);
            IntersectionEngine engine(fan);
            if (surface->count("--cone")) {
                emit(surface_json(fan, engine, parse_cone(opt.cone)), opt);
            } else {
                if (fan.dim() < 2) throw ToricError(ErrorKind::WrongDimension, "a curve has no surfaces");
                Json all = Json::array();
                for (const auto& tau : faces(fan, fan.dim() - 2)) all.push_back(surface_json(fan, engine, tau));
                emit(all, opt);
            }
        } else if (chern->parsed()) {
            emit(to_json(chern_degrees(read_fan(opt.input))), opt);
        } else if (two_fano->parsed()) {
            emit(to_json(is_two_fano(read_fan(opt.input), TwoFanoOptions{opt.fast})), opt);
        } else if (scan_cmd->parsed()) {
            const std::string text = read_input(opt.input);
            const ScanResult result = scan(parse_database(text), ScanOptions{opt.fast, opt.jobs});
            emit(scan_report(result, "sha256:" + sha256_hex(text), opt.fast), opt);
            if (result.counts.invalid != 0) {
                for (const auto& rec : result.records) {
                    if (!rec.report) std::cerr << "line " << rec.line << ": " << rec.error << '\n';
                }
                return kExitInvalid;
            }
        } else if (bundle->parsed()) {
            BundleSpec spec{opt.m, opt.n, {}};
            for (long long a : parse_int_list(opt.twists)) spec.twists.emplace_back(a);
            emit(fan_to_json(kleinschmidt_bundle(spec), spec.str()), opt);
        } else if (del_pezzo->parsed()) {
            for (const auto& [name, fan] : del_pezzo_database()) std::cout << fan_to_json(fan, name).dump() << '\n';
        } else if (sweep->parsed()) {
            emit(to_json(rank2_sweep(opt.dim, opt.budget, opt.jobs)), opt);
        } else if (ne2->parsed()) {
            emit({{"n2_rank", n2_rank(read_fan(opt.input))}}, opt);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << '\n';
        return kExitUsage;
    } catch (const ToricError& e) {
        std::cerr << Json{{"error", std::string(to_string(e.kind()))}, {"message", e.what()}}.dump() << '\n';
        return kExitInvalid;
    }
    return 0;
}
