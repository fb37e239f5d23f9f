#include "hk/report.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <optional>

#include "hk/oracles.hpp"

#ifndef HK_VERSION
#define HK_VERSION "0.0.0"
#endif

namespace hk {

std::string tool_version() { return std::string("hk ") + HK_VERSION; }

std::string sha256_hex(const std::string& bytes) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string spec_content_hash(const ProblemSpec& spec) {
    return sha256_hex(spec.canonical().dump() + "\n" + tool_version() + "\n");
}

namespace {

Json row_json(const QVec& coeffs) {
    Json a = Json::array();
    for (const Rat& c : coeffs) a.push_back(json_rat(c));
    return a;
}

}  // namespace

Json qp_to_json(const QuasiPolynomial& qp) {
    Json j = Json::object();
    j["degree"] = qp.degree;
    j["period"] = json_int(qp.period);
    Json tables = Json::array();
    for (const QVec& row : qp.tables) tables.push_back(row_json(row));
    j["tables"] = std::move(tables);
    return j;
}

Json hk_form_to_json(const HKFunctionForm& f) {
    Json j = Json::object();
    j["prime"] = json_int(f.prime);
    j["degree"] = f.degree;
    j["alpha"] = json_rat(f.alpha);
    j["beta"] = json_rat(f.beta);
    j["period"] = json_int(f.qp_period);
    j["preperiod"] = f.preperiod;
    j["e_period"] = f.e_period;
    Json prefix = Json::array();
    for (unsigned e = 0; e < f.preperiod; ++e) {
        Json row = Json::object();
        row["e"] = e;
        row["residue"] = json_int(int_pow(f.prime, e) % f.qp_period);
        row["coefficients"] = row_json(f.prefix[e]);
        prefix.push_back(std::move(row));
    }
    j["prefix"] = std::move(prefix);
    Json cycle = Json::array();
    for (unsigned k = 0; k < f.e_period; ++k) {
        Json row = Json::object();
        row["residue"] = json_int(int_pow(f.prime, f.preperiod + k) % f.qp_period);
        row["coefficients"] = row_json(f.branches[k]);
        cycle.push_back(std::move(row));
    }
    j["residue_cycle"] = std::move(cycle);
    return j;
}

namespace {

// Direct lattice scans cost on the order of q^dim cells; refuse runaway
// requests so the CLI fails fast instead of grinding.
void check_budget(const Int& q, size_t dim) {
    static const Int kBudget("10000000000");
    Int cells = 1;
    for (size_t i = 0; i < dim; ++i) cells *= q;
    if (cells > kBudget)
        throw InfeasibleError("lattice scan at q = " + to_string(q) + " covers q^" +
                              std::to_string(dim) + " = " + to_string(cells) +
                              " cells, over the 10^10 budget");
}

struct TaskContext {
    const ProblemSpec& sp;
    std::optional<AffineSemigroup> m;
    std::optional<Polycell> pc;
    std::optional<QuasiPolynomial> qp;

    const AffineSemigroup& semigroup() {
        if (!m) m = sp.semigroup();
        return *m;
    }
    const Polycell& polycell() {
        if (!pc) pc = Polycell::create(semigroup(), sp.ideal(semigroup()));
        return *pc;
    }
    const QuasiPolynomial& ehrhart() {
        if (!qp) qp = ehrhart_quasipolynomial(polycell());
        return *qp;
    }
};

Json task_count(TaskContext& c) {
    const Polycell& pc = c.polycell();
    Json per = Json::array();
    for (const Int& p : c.sp.primes) {
        check_budget(int_pow(p, c.sp.e_max), pc.dim());
        Json counts = Json::array();
        for (unsigned e = 1; e <= c.sp.e_max; ++e) counts.push_back(json_int(hk_value(pc, p, e)));
        Json row = Json::object();
        row["prime"] = json_int(p);
        row["counts"] = std::move(counts);
        per.push_back(std::move(row));
    }
    Json res = Json::object();
    res["per_prime"] = std::move(per);
    return res;
}

Json task_interpolate(TaskContext& c) {
    const Polycell& pc = c.polycell();
    const QuasiPolynomial& qp = c.ehrhart();

    // The fit samples n = 1..r0*(d+2); re-check three dilations past that
    // window against fresh direct counts.
    Int r0 = 1;
    for (const QVec& v : pc.vertices())
        for (const Rat& x : v) r0 = boost::multiprecision::lcm(r0, den(x));
    Int window = r0 * Int(pc.dim() + 2);
    bool match = true;
    Json held = Json::array();
    for (int k = 1; k <= 3; ++k) {
        Int n = window + k;
        if (qp.evaluate(n) != pc.count(n)) match = false;
        held.push_back(json_int(n));
    }

    Json res = Json::object();
    res["quasipolynomial"] = qp_to_json(qp);
    res["latex"] = qp.latex("n");
    Json holdout = Json::object();
    holdout["dilations"] = std::move(held);
    holdout["match"] = match;
    res["holdout"] = std::move(holdout);
    Json forms = Json::array();
    for (const Int& p : c.sp.primes) {
        check_budget(int_pow(p, c.sp.e_max), pc.dim());
        forms.push_back(hk_form_to_json(hk_form(pc, p, c.sp.e_max)));
    }
    res["hk_forms"] = std::move(forms);
    return res;
}

Json task_multiplicity(TaskContext& c) {
    auto [alpha, beta] = hk_coefficients(c.ehrhart());
    Json res = Json::object();
    res["alpha"] = json_rat(alpha);
    res["beta"] = json_rat(beta);
    res["degree"] = c.ehrhart().degree;
    try {
        Rat vol = volume_via_cells(c.polycell());
        res["volume_via_cells"] = json_rat(vol);
        res["alpha_equals_volume"] = alpha == vol;
    } catch (const ValidationError& e) {
        res["volume_note"] = e.what();  // cell decomposition unavailable here
    }
    return res;
}

Json task_hs_multiplicity(TaskContext& c) {
    Json res = Json::object();
    res["multiplicity"] = json_rat(c.polycell().hilbert_samuel_multiplicity());
    return res;
}

Json task_bg(TaskContext& c) {
    const Polycell& pc = c.polycell();
    const AffineSemigroup& m = c.semigroup();
    const SupportHyperplanes& h = m.hyperplanes();

    std::vector<ArrangementCell> cells = cells_in_polycell(pc);
    std::vector<ConicClass> classes = classify_cells(cells, h);
    for (ConicClass& cls : classes) cls.mu = min_generators(m, cls.representative);

    Json jclasses = Json::array();
    for (const ConicClass& cls : classes) {
        Json jc = Json::object();
        jc["label"] = json_ivec(cls.representative.label);
        jc["multiplicity_in_P"] = cls.members.size();
        jc["mu"] = json_int(cls.mu);
        Json nus = Json::array();
        for (int n = 1; n <= static_cast<int>(pc.dim()) + 2; ++n)
            nus.push_back(json_int(nu(h, cls.representative, n)));
        jc["nu_samples"] = std::move(nus);
        jclasses.push_back(std::move(jc));
    }

    bool consistent = true;
    for (const Int& p : c.sp.primes) {
        check_budget(int_pow(p, c.sp.e_max), pc.dim());
        for (unsigned e = 0; e <= c.sp.e_max; ++e) {
            Int q = int_pow(p, e);
            Int total = 0;
            for (const ConicClass& cls : classes) total += cls.mu * nu(h, cls.representative, q);
            if (total != pc.count(q)) consistent = false;
        }
    }

    Json res = Json::object();
    res["class_count"] = classes.size();
    res["classes"] = std::move(jclasses);
    res["consistent"] = consistent;
    return res;
}

Json task_oracle_semigroup(TaskContext& c) {
    const AffineSemigroup& m = c.semigroup();
    MonomialIdeal ideal = c.sp.ideal(m);
    const Polycell& pc = c.polycell();
    Json per = Json::array();
    bool consistent = true;
    for (const Int& p : c.sp.primes) {
        check_budget(int_pow(p, c.sp.e_max), m.dim());
        Json lengths = Json::array();
        for (unsigned e = 1; e <= c.sp.e_max; ++e) {
            Int v = semigroup_bfs_hk(m, ideal, p, e);
            if (v != hk_value(pc, p, e)) consistent = false;
            lengths.push_back(json_int(v));
        }
        Json row = Json::object();
        row["prime"] = json_int(p);
        row["lengths"] = std::move(lengths);
        per.push_back(std::move(row));
    }
    Json res = Json::object();
    res["per_prime"] = std::move(per);
    res["consistent"] = consistent;
    return res;
}

Json task_hypersurface_lengths(TaskContext& c) {
    HypersurfacePresentation f = c.sp.hypersurface();
    Json lengths = Json::array();
    for (unsigned e = 1; e <= c.sp.e_max; ++e) lengths.push_back(json_int(hk_hypersurface(f, e)));
    Json res = Json::object();
    res["prime"] = json_int(c.sp.hs_p);
    res["lengths"] = std::move(lengths);
    return res;
}

}  // namespace

Json run_tasks(const ProblemSpec& spec) {
    Json report = Json::object();
    report["tool"] = tool_version();
    report["input"] = spec.canonical();
    report["input_sha256"] = spec_content_hash(spec);

    TaskContext ctx{spec};
    Json results = Json::object();
    Json timing = Json::object();
    for (const std::string& task : spec.tasks) {
        auto t0 = std::chrono::steady_clock::now();
        Json r;
        if (spec.kind == "hypersurface") {
            r = task_hypersurface_lengths(ctx);
        } else if (task == "count") {
            r = task_count(ctx);
        } else if (task == "interpolate") {
            r = task_interpolate(ctx);
        } else if (task == "multiplicity") {
            r = task_multiplicity(ctx);
        } else if (task == "hs-multiplicity") {
            r = task_hs_multiplicity(ctx);
        } else if (task == "bg") {
            r = task_bg(ctx);
        } else {
            r = task_oracle_semigroup(ctx);
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        results[task] = std::move(r);
        timing[task] = ms;
    }
    report["results"] = std::move(results);
    report["timing_ms"] = std::move(timing);
    return report;
}

std::string default_cache_dir() {
    if (const char* dir = std::getenv("HK_CACHE_DIR"); dir && *dir) return dir;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::string(xdg) + "/hk";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::string(home) + "/.cache/hk";
    return ".hk-cache";
}

std::string report_bytes(const Json& report) { return report.dump(2) + "\n"; }

namespace {

void flatten(const Json& j, const std::string& path, std::string& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten(value, path.empty() ? key : path + "." + key, out);
    } else if (j.is_array()) {
        size_t i = 0;
        for (const Json& v : j) flatten(v, path + "[" + std::to_string(i++) + "]", out);
    } else {
        out += path + " = ";
        out += j.is_string() ? j.get<std::string>() : j.dump();
        out += "\n";
    }
}

}  // namespace

std::string report_table(const Json& report) {
    std::string out;
    flatten(report, "", out);
    return out;
}

}  // namespace hk
