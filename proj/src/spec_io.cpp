#include "hk/spec_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace hk {

namespace {

// ---- TOML subset ----------------------------------------------------------

struct Cursor {
    const std::string& s;
    const std::string& name;
    size_t i = 0;
    int line = 1;

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    char take() {
        char c = s[i++];
        if (c == '\n') ++line;
        return c;
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ValidationError(name + ":" + std::to_string(line) + ": " + msg);
    }
};

void skip_space(Cursor& c, bool cross_lines) {
    while (!c.done()) {
        char ch = c.peek();
        if (ch == '#') {
            while (!c.done() && c.peek() != '\n') c.take();
        } else if (ch == ' ' || ch == '\t' || ch == '\r' || (cross_lines && ch == '\n')) {
            c.take();
        } else {
            return;
        }
    }
}

bool key_char(char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' || ch == '-';
}

std::string parse_key(Cursor& c) {
    std::string k;
    while (!c.done() && key_char(c.peek())) k += c.take();
    if (k.empty()) c.fail("expected a key");
    return k;
}

Json parse_value(Cursor& c);

Json parse_string(Cursor& c) {
    c.take();  // opening quote
    std::string out;
    while (true) {
        if (c.done() || c.peek() == '\n') c.fail("unterminated string");
        char ch = c.take();
        if (ch == '"') return Json(out);
        if (ch == '\\') {
            if (c.done()) c.fail("unterminated string");
            char esc = c.take();
            if (esc == '"' || esc == '\\')
                out += esc;
            else
                c.fail(std::string("unsupported escape '\\") + esc + "'");
        } else {
            out += ch;
        }
    }
}

Json parse_integer(Cursor& c) {
    std::string digits;
    if (c.peek() == '+' || c.peek() == '-') digits += c.take();
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) digits += c.take();
    if (digits.empty() || digits == "+" || digits == "-") c.fail("expected a value");
    if (!c.done() && (c.peek() == '.' || c.peek() == 'e' || c.peek() == 'E'))
        c.fail("floating point values are not accepted; use exact integers");
    // Small integers become JSON numbers; anything wider rides as a string
    // so no precision is lost.
    if (digits.size() <= 18 || (digits[0] == '-' && digits.size() <= 19))
        return Json(std::stoll(digits));
    return Json(digits);
}

Json parse_array(Cursor& c) {
    c.take();  // '['
    Json arr = Json::array();
    while (true) {
        skip_space(c, true);
        if (c.done()) c.fail("unterminated array");
        if (c.peek() == ']') {
            c.take();
            return arr;
        }
        arr.push_back(parse_value(c));
        skip_space(c, true);
        if (c.done()) c.fail("unterminated array");
        if (c.peek() == ',') {
            c.take();
        } else if (c.peek() != ']') {
            c.fail("expected ',' or ']' in array");
        }
    }
}

Json parse_inline_table(Cursor& c) {
    c.take();  // '{'
    Json obj = Json::object();
    skip_space(c, true);
    if (!c.done() && c.peek() == '}') {
        c.take();
        return obj;
    }
    while (true) {
        skip_space(c, true);
        std::string k = parse_key(c);
        if (obj.contains(k)) c.fail("duplicate key '" + k + "'");
        skip_space(c, false);
        if (c.done() || c.peek() != '=') c.fail("expected '=' after key '" + k + "'");
        c.take();
        skip_space(c, true);
        obj[k] = parse_value(c);
        skip_space(c, true);
        if (c.done()) c.fail("unterminated inline table");
        if (c.peek() == ',') {
            c.take();
        } else if (c.peek() == '}') {
            c.take();
            return obj;
        } else {
            c.fail("expected ',' or '}' in inline table");
        }
    }
}

Json parse_value(Cursor& c) {
    skip_space(c, false);
    if (c.done()) c.fail("expected a value");
    char ch = c.peek();
    if (ch == '"') return parse_string(c);
    if (ch == '[') return parse_array(c);
    if (ch == '{') return parse_inline_table(c);
    if (c.s.compare(c.i, 4, "true") == 0 && (c.i + 4 == c.s.size() || !key_char(c.s[c.i + 4]))) {
        c.i += 4;
        return Json(true);
    }
    if (c.s.compare(c.i, 5, "false") == 0 && (c.i + 5 == c.s.size() || !key_char(c.s[c.i + 5]))) {
        c.i += 5;
        return Json(false);
    }
    return parse_integer(c);
}

// ---- field readers over the parsed object ---------------------------------

[[noreturn]] void field_fail(const std::string& key, const std::string& msg) {
    throw ValidationError("spec field '" + key + "': " + msg);
}

Int json_to_int(const Json& v, const std::string& key) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
            field_fail(key, "'" + v.get<std::string>() + "' is not an integer");
        }
    }
    field_fail(key, "expected an integer");
}

long long json_to_small(const Json& v, const std::string& key) {
    Int x = json_to_int(v, key);
    if (x < -1000000 || x > 1000000) field_fail(key, "value out of range");
    return x.convert_to<long long>();
}

std::vector<IVec> json_to_ivecs(const Json& v, const std::string& key) {
    if (!v.is_array() || v.empty()) field_fail(key, "expected a nonempty array of integer vectors");
    std::vector<IVec> out;
    for (const Json& row : v) {
        if (!row.is_array() || row.empty())
            field_fail(key, "expected a nonempty array of integer vectors");
        IVec r;
        for (const Json& x : row) r.push_back(json_to_int(x, key));
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

Json parse_toml_subset(const std::string& text, const std::string& name) {
    Cursor c{text, name};
    Json obj = Json::object();
    while (true) {
        skip_space(c, true);
        if (c.done()) return obj;
        if (c.peek() == ',') {  // pair separator, interchangeable with newline
            c.take();
            continue;
        }
        if (c.peek() == '[') c.fail("table headers are not accepted; use key = value pairs");
        std::string k = parse_key(c);
        if (obj.contains(k)) c.fail("duplicate key '" + k + "'");
        skip_space(c, false);
        if (c.done() || c.peek() != '=') c.fail("expected '=' after key '" + k + "'");
        c.take();
        obj[k] = parse_value(c);
        skip_space(c, false);
        if (!c.done() && c.peek() != '\n' && c.peek() != ',')
            c.fail("unexpected text after value for key '" + k + "'");
    }
}

namespace {

ProblemSpec from_json_object(const Json& j) {
    if (!j.is_object()) throw ValidationError("spec must be a table of key = value pairs");

    static const std::vector<std::string> known = {"kind",  "dimension", "generators", "ideal",
                                                   "prime", "primes",    "p",          "vars",
                                                   "f",     "e_max",     "tasks"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (std::find(known.begin(), known.end(), it.key()) == known.end())
            throw ValidationError("unknown spec field '" + it.key() + "'");
    }

    ProblemSpec sp;
    sp.kind = "semigroup";
    if (j.contains("kind")) {
        if (!j["kind"].is_string()) field_fail("kind", "expected \"semigroup\" or \"hypersurface\"");
        sp.kind = j["kind"].get<std::string>();
    }
    if (sp.kind != "semigroup" && sp.kind != "hypersurface")
        field_fail("kind", "expected \"semigroup\" or \"hypersurface\", got \"" + sp.kind + "\"");

    if (!j.contains("e_max")) field_fail("e_max", "required");
    long long em = json_to_small(j["e_max"], "e_max");
    if (em < 1 || em > 40) field_fail("e_max", "must be between 1 and 40");
    sp.e_max = static_cast<unsigned>(em);

    if (sp.kind == "semigroup") {
        for (const char* k : {"p", "vars", "f"})
            if (j.contains(k)) field_fail(k, "only valid for kind \"hypersurface\"");
        if (!j.contains("generators")) field_fail("generators", "required");
        sp.generators = json_to_ivecs(j["generators"], "generators");
        size_t d = sp.generators[0].size();
        if (j.contains("dimension")) {
            long long dim = json_to_small(j["dimension"], "dimension");
            if (dim < 1) field_fail("dimension", "must be positive");
            d = static_cast<size_t>(dim);
        }
        sp.dimension = d;
        for (const IVec& g : sp.generators)
            if (g.size() != d) field_fail("generators", "vector arity differs from the dimension");
        if (j.contains("ideal")) {
            sp.ideal_exps = json_to_ivecs(j["ideal"], "ideal");
            for (const IVec& g : sp.ideal_exps)
                if (g.size() != d) field_fail("ideal", "vector arity differs from the dimension");
        }
        if (j.contains("prime") && j.contains("primes"))
            field_fail("prime", "give either 'prime' or 'primes', not both");
        if (j.contains("prime")) sp.primes.push_back(json_to_int(j["prime"], "prime"));
        if (j.contains("primes")) {
            if (!j["primes"].is_array() || j["primes"].empty())
                field_fail("primes", "expected a nonempty array");
            for (const Json& v : j["primes"]) sp.primes.push_back(json_to_int(v, "primes"));
        }
        if (sp.primes.empty()) sp.primes.push_back(2);
        for (const Int& p : sp.primes)
            if (!is_prime(p)) field_fail("primes", to_string(p) + " is not prime");
    } else {
        for (const char* k : {"dimension", "generators", "ideal", "prime", "primes"})
            if (j.contains(k)) field_fail(k, "only valid for kind \"semigroup\"");
        if (!j.contains("p")) field_fail("p", "required");
        sp.hs_p = json_to_int(j["p"], "p");
        if (!is_prime(sp.hs_p)) field_fail("p", to_string(sp.hs_p) + " is not prime");
        if (!j.contains("vars")) field_fail("vars", "required");
        long long vars = json_to_small(j["vars"], "vars");
        if (vars < 1) field_fail("vars", "must be positive");
        sp.hs_vars = static_cast<size_t>(vars);
        if (!j.contains("f") || !j["f"].is_array() || j["f"].empty())
            field_fail("f", "required: a nonempty array of {exp, c} terms");
        for (const Json& term : j["f"]) {
            if (!term.is_object() || !term.contains("exp") || !term.contains("c"))
                field_fail("f", "each term needs 'exp' and 'c'");
            for (auto it = term.begin(); it != term.end(); ++it)
                if (it.key() != "exp" && it.key() != "c")
                    field_fail("f", "unknown term field '" + it.key() + "'");
            if (!term["exp"].is_array()) field_fail("f", "'exp' must be an array of integers");
            IVec exp;
            for (const Json& x : term["exp"]) exp.push_back(json_to_int(x, "f"));
            sp.hs_terms.emplace_back(std::move(exp), json_to_int(term["c"], "f"));
        }
        sp.primes.push_back(sp.hs_p);
    }

    if (j.contains("tasks")) {
        if (!j["tasks"].is_array() || j["tasks"].empty())
            field_fail("tasks", "expected a nonempty array of task names");
        for (const Json& t : j["tasks"]) {
            if (!t.is_string()) field_fail("tasks", "expected task names");
            sp.tasks.push_back(t.get<std::string>());
        }
    } else {
        sp.tasks.push_back("count");
    }
    const std::vector<std::string>& ok = valid_tasks(sp.kind);
    for (const std::string& t : sp.tasks) {
        if (std::find(ok.begin(), ok.end(), t) == ok.end())
            field_fail("tasks", "unknown task '" + t + "' for kind \"" + sp.kind + "\"");
        if (std::count(sp.tasks.begin(), sp.tasks.end(), t) > 1)
            field_fail("tasks", "duplicate task '" + t + "'");
    }
    return sp;
}

}  // namespace

Json json_int(const Int& v) {
    static const Int kLimit = Int(1) << 53;
    if (v > -kLimit && v < kLimit) return Json(v.convert_to<long long>());
    return Json(v.str());
}

Json json_rat(const Rat& r) { return Json(to_string(r)); }

Json json_ivec(const IVec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(json_int(x));
    return a;
}

const std::vector<std::string>& valid_tasks(const std::string& kind) {
    static const std::vector<std::string> semigroup = {"count", "interpolate",   "multiplicity",
                                                       "bg",    "hs-multiplicity", "oracle"};
    static const std::vector<std::string> hypersurface = {"count", "oracle"};
    return kind == "hypersurface" ? hypersurface : semigroup;
}

Json ProblemSpec::canonical() const {
    Json j = Json::object();
    j["kind"] = kind;
    if (kind == "semigroup") {
        j["dimension"] = dimension;
        Json gens = Json::array();
        for (const IVec& g : generators) gens.push_back(json_ivec(g));
        j["generators"] = std::move(gens);
        Json ide = Json::array();
        const std::vector<IVec>& exps = ideal_exps.empty() ? generators : ideal_exps;
        for (const IVec& g : exps) ide.push_back(json_ivec(g));
        j["ideal"] = std::move(ide);
        Json ps = Json::array();
        for (const Int& p : primes) ps.push_back(json_int(p));
        j["primes"] = std::move(ps);
    } else {
        j["p"] = json_int(hs_p);
        j["vars"] = hs_vars;
        Json f = Json::array();
        for (const auto& [exp, c] : hs_terms) {
            Json term = Json::object();
            term["exp"] = json_ivec(exp);
            term["c"] = json_int(c);
            f.push_back(std::move(term));
        }
        j["f"] = std::move(f);
    }
    j["e_max"] = e_max;
    j["tasks"] = tasks;
    return j;
}

AffineSemigroup ProblemSpec::semigroup() const {
    return AffineSemigroup::create(generators, dimension);
}

MonomialIdeal ProblemSpec::ideal(const AffineSemigroup& m) const {
    return MonomialIdeal::create(m, ideal_exps.empty() ? generators : ideal_exps);
}

HypersurfacePresentation ProblemSpec::hypersurface() const {
    return HypersurfacePresentation::create(hs_p, hs_vars, hs_terms);
}

ProblemSpec parse_spec_text(const std::string& text, const std::string& name, bool is_json) {
    if (is_json) {
        Json j;
        try {
            j = Json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ValidationError(name + ": " + e.what());
        }
        return from_json_object(j);
    }
    return from_json_object(parse_toml_subset(text, name));
}

ProblemSpec parse_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open spec file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();

    bool is_json;
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        is_json = true;
    } else if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".toml") == 0) {
        is_json = false;
    } else {
        size_t k = text.find_first_not_of(" \t\r\n");
        is_json = k != std::string::npos && text[k] == '{';
    }
    return parse_spec_text(text, path, is_json);
}

}  // namespace hk
