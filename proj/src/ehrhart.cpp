#include "hk/ehrhart.hpp"

#include <algorithm>
#include <map>

#include "hk/linalg.hpp"

namespace hk {

namespace {

size_t to_index(const Int& v) { return static_cast<size_t>(v.convert_to<unsigned long long>()); }

std::string poly_latex(const QVec& coeffs, const std::string& var) {
    std::string out;
    for (size_t jj = coeffs.size(); jj-- > 0;) {
        const Rat& a = coeffs[jj];
        if (a == 0) continue;
        bool negative = a < 0;
        Rat mag = negative ? Rat(-a) : a;
        bool unit_coeff = false;
        std::string coeff;
        if (den(mag) == 1) {
            if (num(mag) == 1 && jj > 0)
                unit_coeff = true;
            else
                coeff = num(mag).str();
        } else {
            coeff = "\\frac{" + num(mag).str() + "}{" + den(mag).str() + "}";
        }
        std::string varpart;
        if (jj == 1) {
            varpart = var;
        } else if (jj > 1) {
            std::string e = std::to_string(jj);
            varpart = var + "^" + (e.size() == 1 ? e : "{" + e + "}");
        }
        std::string term;
        if (unit_coeff)
            term = varpart;
        else if (varpart.empty())
            term = coeff;
        else
            term = coeff + " " + varpart;
        if (out.empty())
            out = (negative ? "-" : "") + term;
        else
            out += (negative ? " - " : " + ") + term;
    }
    return out.empty() ? "0" : out;
}

}  // namespace

Rat QuasiPolynomial::evaluate(const Int& n) const {
    if (n < n_min)
        throw ValidationError("quasipolynomial evaluated below its validity threshold n = " +
                              n_min.str());
    const QVec& c = tables[to_index(n % period)];
    Rat qn(n), acc(0);
    for (size_t jj = c.size(); jj-- > 0;) acc = acc * qn + c[jj];
    return acc;
}

std::string QuasiPolynomial::latex(const std::string& var) const {
    if (period == 1) return poly_latex(tables[0], var);
    // Residue classes sharing a polynomial collapse into one case row.
    std::vector<std::vector<size_t>> groups;
    for (size_t k = 0; k < tables.size(); ++k) {
        bool placed = false;
        for (auto& g : groups) {
            if (tables[g[0]] == tables[k]) {
                g.push_back(k);
                placed = true;
                break;
            }
        }
        if (!placed) groups.push_back({k});
    }
    std::string out = "\\begin{cases}\n";
    for (size_t gi = 0; gi < groups.size(); ++gi) {
        out += "  " + poly_latex(tables[groups[gi][0]], var) + " & " + var + " \\equiv ";
        for (size_t t = 0; t < groups[gi].size(); ++t)
            out += (t ? ", " : "") + std::to_string(groups[gi][t]);
        out += " \\pmod{" + period.str() + "}";
        if (gi + 1 < groups.size()) out += " \\\\";
        out += "\n";
    }
    return out + "\\end{cases}";
}

QuasiPolynomial interpolate(const std::vector<std::pair<Int, Int>>& samples, size_t degree,
                            const Int& period_bound) {
    if (period_bound < 1) throw ValidationError("period bound must be positive");
    size_t r0 = to_index(period_bound);
    std::vector<std::vector<IVec>> lhs(r0);
    std::vector<IVec> rhs(r0);
    for (const auto& [n, count] : samples) {
        size_t k = to_index(((n % period_bound) + period_bound) % period_bound);
        IVec row(degree + 1);
        Int p = 1;
        for (size_t j = 0; j <= degree; ++j) {
            row[j] = p;
            p *= n;
        }
        lhs[k].push_back(std::move(row));
        rhs[k].push_back(count);
    }

    QuasiPolynomial qp;
    qp.degree = degree;
    qp.period = period_bound;
    qp.tables.resize(r0);
    for (size_t k = 0; k < r0; ++k) {
        if (lhs[k].size() < degree + 2)
            throw ValidationError("too few samples in residue class " + std::to_string(k));
        auto sol = solve_unique(lhs[k], rhs[k]);
        if (!sol) throw ValidationError("inconsistent samples");
        qp.tables[k] = std::move(*sol);
    }

    // Smallest divisor of the bound onto which the tables collapse.
    for (Int r = 1; r <= period_bound; ++r) {
        if (period_bound % r != 0) continue;
        size_t rs = to_index(r);
        bool collapses = true;
        for (size_t k = 0; k < r0 && collapses; ++k) collapses = qp.tables[k] == qp.tables[k % rs];
        if (collapses) {
            qp.period = r;
            qp.tables.resize(rs);
            break;
        }
    }
    return qp;
}

QuasiPolynomial ehrhart_quasipolynomial(const Polycell& pc) {
    size_t d = pc.dim();
    const std::vector<QVec> verts = d <= 3 ? pc.vertices() : pc.candidate_vertices();
    Int r0 = 1;
    for (const QVec& v : verts) {
        for (const Rat& c : v) {
            Int dd = den(c);
            r0 = r0 / gcd(r0, dd) * dd;
        }
    }
    std::vector<std::pair<Int, Int>> samples;
    for (Int n = 1; n <= r0 * Int(d + 2); ++n) samples.emplace_back(n, pc.count(n));
    return interpolate(samples, d, r0);
}

std::pair<Rat, Rat> hk_coefficients(const QuasiPolynomial& qp) {
    Rat alpha = qp.tables[0][qp.degree];
    for (const QVec& t : qp.tables)
        if (t[qp.degree] != alpha) throw ValidationError("leading coefficient not constant");
    Rat beta(0);
    if (qp.degree >= 1) {
        beta = qp.tables[0][qp.degree - 1];
        for (const QVec& t : qp.tables)
            if (t[qp.degree - 1] != beta) throw ValidationError("second coefficient not constant");
    }
    return {alpha, beta};
}

const QVec& HKFunctionForm::row(unsigned e) const {
    if (e < preperiod) return prefix[e];
    return branches[(e - preperiod) % e_period];
}

Rat HKFunctionForm::value(unsigned e) const {
    const QVec& c = row(e);
    Rat q(int_pow(prime, e)), acc(0);
    for (size_t jj = c.size(); jj-- > 0;) acc = acc * q + c[jj];
    return acc;
}

HKFunctionForm hk_form(const Polycell& pc, const Int& p, unsigned e_max) {
    if (!is_prime(p)) throw ValidationError("p must be prime");
    QuasiPolynomial qp = ehrhart_quasipolynomial(pc);
    auto [alpha, beta] = hk_coefficients(qp);

    HKFunctionForm form;
    form.prime = p;
    form.degree = qp.degree;
    form.alpha = alpha;
    form.beta = beta;
    form.qp_period = qp.period;

    // Orbit of q = p^e mod period: find the first repeated residue.
    std::map<Int, unsigned> first_seen;
    std::vector<Int> orbit;
    Int qr = Int(1) % qp.period;
    while (true) {
        auto it = first_seen.find(qr);
        if (it != first_seen.end()) {
            form.preperiod = it->second;
            form.e_period = static_cast<unsigned>(orbit.size()) - it->second;
            break;
        }
        first_seen.emplace(qr, static_cast<unsigned>(orbit.size()));
        orbit.push_back(qr);
        qr = (qr * p) % qp.period;
    }
    for (unsigned e = 0; e < form.preperiod; ++e)
        form.prefix.push_back(qp.tables[to_index(orbit[e])]);
    for (unsigned t = 0; t < form.e_period; ++t)
        form.branches.push_back(qp.tables[to_index(orbit[form.preperiod + t])]);

    for (unsigned e = 0; e <= e_max; ++e) {
        if (form.value(e) != Rat(hk_value(pc, p, e)))
            throw ValidationError("closed form disagrees with the direct count at e = " +
                                  std::to_string(e));
    }
    return form;
}

}  // namespace hk
