#ifndef HK_SPEC_IO_HPP
#define HK_SPEC_IO_HPP

#include <json.hpp>
#include <string>

#include "hk/oracles.hpp"
#include "hk/polycell.hpp"

namespace hk {

using Json = nlohmann::ordered_json;

// Integers ride as JSON numbers while |v| < 2^53 and as decimal strings
// beyond, so lossy consumers never silently round. Rationals are always
// "num/den" (or plain "num") strings; both round-trip through parse_rat.
Json json_int(const Int& v);
Json json_rat(const Rat& r);
Json json_ivec(const IVec& v);

// Problem description read from a spec file.
//
// kind "semigroup": dimension (optional, inferred from the generators),
// generators, ideal (optional, defaults to the generators), primes (or a
// single prime; defaults to [2]), e_max, tasks.
// kind "hypersurface": p, vars, f (list of {exp, c} terms), e_max, tasks.
// tasks defaults to ["count"].
struct ProblemSpec {
    std::string kind;
    size_t dimension = 0;
    std::vector<IVec> generators;
    std::vector<IVec> ideal_exps;  // empty means "use the generators"
    Int hs_p = 0;
    size_t hs_vars = 0;
    std::vector<std::pair<IVec, Int>> hs_terms;
    std::vector<Int> primes;
    unsigned e_max = 1;
    std::vector<std::string> tasks;

    // Deterministic echo of the parsed problem: fixed key order, single
    // prime normalized to a list, ideal made explicit. Equal problems
    // canonicalize to equal bytes, which is what gets hashed for caching.
    Json canonical() const;

    AffineSemigroup semigroup() const;
    MonomialIdeal ideal(const AffineSemigroup& m) const;
    HypersurfacePresentation hypersurface() const;
};

// Tasks accepted for the given kind.
const std::vector<std::string>& valid_tasks(const std::string& kind);

// Dispatches on the extension (.json / .toml); other names are sniffed: a
// first non-space '{' means JSON. Throws ValidationError carrying
// "file:line" or field context on malformed input.
ProblemSpec parse_spec_file(const std::string& path);
ProblemSpec parse_spec_text(const std::string& text, const std::string& name, bool is_json);

// The accepted TOML subset: key = value pairs separated by newlines or
// commas; values are integers, booleans, quoted strings, arrays, and inline
// tables; '#' starts a comment. Returned as an object for the shared field
// reader.
Json parse_toml_subset(const std::string& text, const std::string& name);

}  // namespace hk

#endif
