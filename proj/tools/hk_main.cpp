#include <CLI11.hpp>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "hk/render.hpp"
#include "hk/report.hpp"

namespace {

using namespace hk;
namespace fs = std::filesystem;

struct Options {
    std::string spec_path;
    std::string out;
    std::string format = "json";
    std::string svg_path;
    bool no_cache = false;
    bool latex = false;
    long long dilation = 0;  // 0 = first prime raised to e_max
};

void write_file(const std::string& path, const std::string& bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    out << bytes;
    out.close();
    if (!out) throw ValidationError("cannot write " + path);
}

// Cache lookup by content hash; a miss computes the report and stores it via
// a temp file + rename so readers never see a torn entry.
std::string cached_or_run(const ProblemSpec& spec, bool no_cache) {
    fs::path entry = fs::path(default_cache_dir()) / (spec_content_hash(spec) + ".json");
    if (!no_cache) {
        std::ifstream in(entry, std::ios::binary);
        if (in) {
            std::ostringstream ss;
            ss << in.rdbuf();
            return ss.str();
        }
    }
    std::string bytes = report_bytes(run_tasks(spec));
    if (!no_cache) {
        std::error_code ec;
        fs::create_directories(entry.parent_path(), ec);
        if (!ec) {
            fs::path tmp = entry;
            tmp += ".tmp." + std::to_string(::getpid());
            std::ofstream out(tmp, std::ios::binary);
            out << bytes;
            out.close();
            if (out)
                fs::rename(tmp, entry, ec);
            else
                ec = std::make_error_code(std::errc::io_error);
            if (ec) fs::remove(tmp, ec);
        }
    }
    return bytes;
}

std::string spec_svg(const ProblemSpec& spec, const Int& n) {
    if (spec.kind != "semigroup") throw ValidationError("SVG requires a semigroup spec");
    if (spec.dimension != 2) throw ValidationError("SVG only for dimension 2");
    AffineSemigroup m = spec.semigroup();
    Polycell pc = Polycell::create(m, spec.ideal(m));
    std::optional<std::vector<ConicClass>> classes;
    try {
        std::vector<ArrangementCell> cells = cells_in_polycell(pc);
        classes = classify_cells(cells, m.hyperplanes());
    } catch (const ValidationError&) {
        // the ideal does not cut the maximal-ideal region: draw without cells
    }
    return emit_svg(pc, n, classes ? &*classes : nullptr);
}

Int svg_dilation(const ProblemSpec& spec, long long flag) {
    if (flag > 0) return Int(flag);
    return int_pow(spec.primes.empty() ? Int(2) : spec.primes[0], spec.e_max);
}

int cmd_report(const Options& o, const std::vector<std::string>* task_override) {
    ProblemSpec spec = parse_spec_file(o.spec_path);
    if (task_override) {
        const std::vector<std::string>& ok = valid_tasks(spec.kind);
        for (const std::string& t : *task_override)
            if (std::find(ok.begin(), ok.end(), t) == ok.end())
                throw ValidationError("task '" + t + "' not available for kind \"" + spec.kind +
                                      "\"");
        spec.tasks = *task_override;
    }

    std::string bytes = cached_or_run(spec, o.no_cache);
    std::string payload = o.format == "table" ? report_table(Json::parse(bytes)) : bytes;
    if (!o.out.empty())
        write_file(o.out, payload);
    else if (!o.latex)
        std::cout << payload;

    if (!o.svg_path.empty()) write_file(o.svg_path, spec_svg(spec, svg_dilation(spec, 0)));

    if (o.latex) {
        Json report = Json::parse(bytes);
        std::string tex;
        if (report["results"].contains("interpolate")) {
            tex = report["results"]["interpolate"]["latex"].get<std::string>();
        } else {
            if (spec.kind != "semigroup")
                throw ValidationError("LaTeX output requires a semigroup spec");
            AffineSemigroup m = spec.semigroup();
            tex = ehrhart_quasipolynomial(Polycell::create(m, spec.ideal(m))).latex("n");
        }
        std::cout << tex << "\n";
    }
    return 0;
}

int cmd_render(const Options& o) {
    ProblemSpec spec = parse_spec_file(o.spec_path);
    std::string svg = spec_svg(spec, svg_dilation(spec, o.dilation));
    const std::string& target = !o.svg_path.empty() ? o.svg_path : o.out;
    if (!target.empty())
        write_file(target, svg);
    else
        std::cout << svg;
    return 0;
}

// ---- bundled example specs --------------------------------------------

std::string regcone_toml(int g) {
    std::string gens;
    for (int k = 0; k <= g; ++k) {
        if (k) gens += ", ";
        gens += "[1, " + std::to_string(k) + "]";
    }
    return "# Rational normal cone of degree " + std::to_string(g) +
           ": generators (1, k) for k = 0.." + std::to_string(g) +
           ".\n"
           "kind = \"semigroup\"\n"
           "generators = [" +
           gens +
           "]\n"
           "primes = [2, 3]\n"
           "e_max = 3\n"
           "tasks = [\"count\", \"interpolate\", \"multiplicity\", \"hs-multiplicity\", \"bg\", "
           "\"oracle\"]\n";
}

const char* kToricNonprojToml =
    "# Two-dimensional cone between the rays (2, 1) and (1, 2).\n"
    "kind = \"semigroup\"\n"
    "generators = [[2, 1], [1, 1], [1, 2]]\n"
    "primes = [2, 3, 5]\n"
    "e_max = 3\n"
    "tasks = [\"count\", \"interpolate\", \"multiplicity\", \"hs-multiplicity\", \"bg\", "
    "\"oracle\"]\n";

const char* kHirzebruch1Toml =
    "# Cone over a Hirzebruch surface, twist 1.\n"
    "kind = \"semigroup\"\n"
    "generators = [[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1], [1, 1, 2]]\n"
    "primes = [2]\n"
    "e_max = 3\n"
    "tasks = [\"count\", \"interpolate\", \"multiplicity\", \"hs-multiplicity\", \"bg\", "
    "\"oracle\"]\n";

const char* kHirzebruch2Toml =
    "# Cone over a Hirzebruch surface, twist 2.\n"
    "kind = \"semigroup\"\n"
    "generators = [[1, 0, 0], [1, 1, 0], [1, 0, 1], [1, 1, 1], [1, 1, 2], [1, 1, 3]]\n"
    "primes = [3]\n"
    "e_max = 2\n"
    "tasks = [\"count\", \"interpolate\", \"multiplicity\", \"hs-multiplicity\", \"oracle\"]\n";

const char* kKunzToml =
    "# Plane curve y^4 - x^3 y over F_7.\n"
    "kind = \"hypersurface\"\n"
    "p = 7\n"
    "vars = 2\n"
    "f = [{exp = [0, 4], c = 1}, {exp = [3, 1], c = -1}]\n"
    "e_max = 2\n"
    "tasks = [\"oracle\"]\n";

const char* kMonskyToml =
    "# Plane quintic x^5 - y^5 over F_2.\n"
    "kind = \"hypersurface\"\n"
    "p = 2\n"
    "vars = 2\n"
    "f = [{exp = [5, 0], c = 1}, {exp = [0, 5], c = -1}]\n"
    "e_max = 3\n"
    "tasks = [\"oracle\"]\n";

const char* kDiagonalQuarticJson =
    "{\n"
    "  \"kind\": \"hypersurface\",\n"
    "  \"p\": 5,\n"
    "  \"vars\": 4,\n"
    "  \"f\": [\n"
    "    {\"exp\": [4, 0, 0, 0], \"c\": 1},\n"
    "    {\"exp\": [0, 4, 0, 0], \"c\": 1},\n"
    "    {\"exp\": [0, 0, 4, 0], \"c\": 1},\n"
    "    {\"exp\": [0, 0, 0, 4], \"c\": 1}\n"
    "  ],\n"
    "  \"e_max\": 1,\n"
    "  \"tasks\": [\"oracle\"]\n"
    "}\n";

int cmd_examples(const std::string& dir) {
    fs::create_directories(dir);
    std::vector<std::pair<std::string, std::string>> files;
    for (int g = 2; g <= 5; ++g)
        files.emplace_back("regcone_g" + std::to_string(g) + ".toml", regcone_toml(g));
    files.emplace_back("toricnonproj.toml", kToricNonprojToml);
    files.emplace_back("hirzebruch_s1.toml", kHirzebruch1Toml);
    files.emplace_back("hirzebruch_s2.toml", kHirzebruch2Toml);
    files.emplace_back("exkunz_p7.toml", kKunzToml);
    files.emplace_back("exmonsky_p2.toml", kMonskyToml);
    files.emplace_back("diagonal_quartic_p5.json", kDiagonalQuarticJson);
    for (const auto& [name, body] : files) {
        std::string path = (fs::path(dir) / name).string();
        write_file(path, body);
        std::cout << "wrote " << path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hilbert-Kunz functions of normal affine semigroup rings"};
    app.set_version_flag("--version", tool_version());
    app.require_subcommand(1);

    Options o;
    std::string examples_dir = "hk-examples";

    auto add_common = [&](CLI::App* sub, bool with_dilation) {
        sub->add_option("--spec", o.spec_path, "problem spec file (TOML or JSON)")->required();
        sub->add_option("--out", o.out, "write the output here instead of stdout");
        sub->add_option("--format", o.format, "report format: json (default) or table")
            ->check(CLI::IsMember({"json", "table"}));
        sub->add_flag("--no-cache", o.no_cache, "recompute even if a cached report exists");
        sub->add_flag("--latex", o.latex, "print the fitted quasipolynomial as LaTeX");
        sub->add_option("--svg", o.svg_path, "also draw n*P to this SVG file (dimension 2)");
        if (with_dilation)
            sub->add_option("--dilation", o.dilation, "dilation n (default: first prime ^ e_max)")
                ->check(CLI::PositiveNumber);
    };

    CLI::App* c_run = app.add_subcommand("run", "execute the task list from the spec file");
    CLI::App* c_count = app.add_subcommand("count", "lattice-point counts at q = p^e");
    CLI::App* c_interp =
        app.add_subcommand("interpolate", "fit the counting quasipolynomial and closed forms");
    CLI::App* c_mult = app.add_subcommand(
        "multiplicity", "leading and second coefficients plus the classical multiplicity");
    CLI::App* c_bg = app.add_subcommand("bg", "cell decomposition by conic classes");
    CLI::App* c_oracle = app.add_subcommand("oracle", "independent length computations");
    for (CLI::App* sub : {c_run, c_count, c_interp, c_mult, c_bg, c_oracle})
        add_common(sub, false);

    CLI::App* c_render = app.add_subcommand("render", "draw n*P as an SVG document");
    add_common(c_render, true);

    CLI::App* c_examples = app.add_subcommand("examples", "write ready-made spec files");
    c_examples->add_option("--dir", examples_dir, "output directory (default hk-examples)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (c_examples->parsed()) return cmd_examples(examples_dir);
        if (c_render->parsed()) return cmd_render(o);
        std::optional<std::vector<std::string>> tasks;
        if (c_count->parsed()) tasks = {{"count"}};
        if (c_interp->parsed()) tasks = {{"interpolate"}};
        if (c_mult->parsed()) tasks = {{"multiplicity", "hs-multiplicity"}};
        if (c_bg->parsed()) tasks = {{"bg"}};
        if (c_oracle->parsed()) tasks = {{"oracle"}};
        return cmd_report(o, tasks ? &*tasks : nullptr);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const InfeasibleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
