#ifndef HK_ARITH_HPP
#define HK_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace hk {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using IVec = std::vector<Int>;
using QVec = std::vector<Rat>;

// Validation failures (bad input data); mapped to exit code 2 by the CLI.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requests whose size guard trips; mapped to exit code 3 by the CLI.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int floor_div(const Int& a, const Int& b) {
    // b > 0 assumed
    Int q = a / b;
    if (a % b != 0 && a < 0) --q;
    return q;
}

inline Int ceil_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && a > 0) ++q;
    return q;
}

inline Int rat_floor(const Rat& r) { return floor_div(num(r), den(r)); }
inline Int rat_ceil(const Rat& r) { return ceil_div(num(r), den(r)); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline Int dot(const IVec& a, const IVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dotq(const IVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += Rat(a[i]) * b[i];
    return s;
}

inline Rat dotqq(const QVec& a, const QVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IVec vsub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec vadd(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline QVec qsub(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline QVec to_qvec(const IVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = Rat(a[i]);
    return r;
}

inline bool is_zero(const IVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

// Content gcd; 0 for the zero vector.
inline Int content(const IVec& a) {
    Int g = 0;
    for (const auto& x : a) {
        g = boost::multiprecision::gcd(g, x);
        if (g == 1) break;
    }
    return g;
}

// Divide by the content, keeping direction. Rejects the zero vector.
inline IVec primitive_vector(const IVec& a) {
    Int g = content(a);
    if (g == 0) throw ValidationError("zero direction");
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

// Scale a rational vector to its primitive integer direction.
inline IVec primitive_direction(const QVec& a) {
    Int l = 1;
    for (const auto& x : a) l = boost::multiprecision::lcm(l, den(x));
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = num(a[i]) * (l / den(a[i]));
    return primitive_vector(r);
}

inline std::string to_string(const Int& x) { return x.str(); }

inline std::string to_string(const Rat& r) {
    if (den(r) == 1) return num(r).str();
    return num(r).str() + "/" + den(r).str();
}

inline std::string to_string(const IVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += v[i].str();
    }
    return s + ")";
}

inline std::string to_string(const QVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

// Parse "p" or "p/q" with q > 0 after reduction.
inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    Int p, q(1);
    try {
        if (slash == std::string::npos) {
            p = Int(s);
        } else {
            p = Int(s.substr(0, slash));
            q = Int(s.substr(slash + 1));
        }
    } catch (const std::runtime_error&) {
        throw ValidationError("not a rational: " + s);
    }
    if (q == 0) throw ValidationError("rational with zero denominator: " + s);
    if (q < 0) {
        p = -p;
        q = -q;
    }
    return Rat(p, q);
}

}  // namespace hk

#endif
