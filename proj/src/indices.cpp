#include "rescoal/indices.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

#include "rescoal/errors.hpp"

namespace rescoal {

std::string index_name(IndexKind k) {
    switch (k) {
    case IndexKind::kirchhoff: return "kirchhoff";
    case IndexKind::kemeny: return "kemeny";
    case IndexKind::additive_dk: return "additive_dk";
    case IndexKind::multiplicative_dk: return "multiplicative_dk";
    case IndexKind::mixed_dk: return "mixed_dk";
    case IndexKind::resistance_energy: return "resistance_energy";
    }
    return "?";
}

IndexKind parse_index(const std::string& name) {
    for (IndexKind k :
         {IndexKind::kirchhoff, IndexKind::kemeny, IndexKind::additive_dk,
          IndexKind::multiplicative_dk, IndexKind::mixed_dk,
          IndexKind::resistance_energy})
        if (index_name(k) == name) return k;
    throw parse_error("unknown index '" + name + "'");
}

namespace {

void check_consistent(const Graph& g, const ResistanceMatrix& r) {
    if (g.n() != r.n())
        throw invalid_parameter_error("graph and resistance matrix sizes differ");
}

} // namespace

double kirchhoff_index(const ResistanceMatrix& r) {
    double s = 0.0;
    for (int i = 0; i < r.n(); ++i)
        for (int j = i + 1; j < r.n(); ++j) s += r(i, j);
    return s;
}

double kemeny_constant(const Graph& g, const ResistanceMatrix& r) {
    check_consistent(g, r);
    if (g.m() == 0)
        throw invalid_parameter_error("kemeny_constant needs at least one edge");
    const auto& d = g.degrees();
    double s = 0.0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = 0; j < g.n(); ++j) s += double(d[i]) * d[j] * r(i, j);
    return s / (4.0 * g.m());
}

double additive_dk(const Graph& g, const ResistanceMatrix& r) {
    check_consistent(g, r);
    const auto& d = g.degrees();
    double s = 0.0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) s += (d[i] + d[j]) * r(i, j);
    return s;
}

double multiplicative_dk(const Graph& g, const ResistanceMatrix& r) {
    check_consistent(g, r);
    const auto& d = g.degrees();
    double s = 0.0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j) s += double(d[i]) * d[j] * r(i, j);
    return s;
}

double mixed_dk(const Graph& g, const ResistanceMatrix& r) {
    check_consistent(g, r);
    const auto& d = g.degrees();
    for (int i = 0; i < g.n(); ++i)
        if (d[i] == 0)
            throw invalid_parameter_error(
                "mixed_dk undefined for degree-0 vertex " + std::to_string(i));
    double s = 0.0;
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            s += (double(d[i]) / d[j] + double(d[j]) / d[i]) * r(i, j);
    return s;
}

double resistance_energy(const ResistanceMatrix& r) {
    SymEigen e = sym_eigen(r.sym());
    return e.values.cwiseAbs().sum();
}

double definition_value(IndexKind k, const Graph& g, const ResistanceMatrix& r) {
    switch (k) {
    case IndexKind::kirchhoff: return kirchhoff_index(r);
    case IndexKind::kemeny: return kemeny_constant(g, r);
    case IndexKind::additive_dk: return additive_dk(g, r);
    case IndexKind::multiplicative_dk: return multiplicative_dk(g, r);
    case IndexKind::mixed_dk: return mixed_dk(g, r);
    case IndexKind::resistance_energy: return resistance_energy(r);
    }
    throw invalid_parameter_error("unknown index kind");
}

std::vector<IndexValue> all_indices(const Graph& g) {
    const ResistanceMatrix r = resistance_oracle(g);
    std::vector<IndexValue> out;
    for (IndexKind k :
         {IndexKind::kirchhoff, IndexKind::kemeny, IndexKind::additive_dk,
          IndexKind::multiplicative_dk, IndexKind::mixed_dk,
          IndexKind::resistance_energy})
        out.push_back({k, definition_value(k, g, r), Route::definition});
    return out;
}

// ---------------------------------------------------------------------------
// Closed-form index statements, evaluated exactly as printed.

namespace {

using rat = boost::multiprecision::cpp_rational;

rat rdiv(const rat& a, const rat& b) {
    if (b == 0)
        throw formula_undefined_error(
            "printed formula divides by zero at these parameters");
    return a / b;
}

rat kcoal_kirchhoff(const KCoalComplete& s) {
    const rat p1 = s.p1, p2 = s.p2, k = s.k, t = p1 + p2 - k;
    const rat inner = p1 * (k + t) + p2 + rdiv(p2 * k, k + 1) +
                      rdiv(p2 * k * (p1 * k + p1 * t - t), (p2 - k) * (k + 1));
    const rat bracket =
        (p1 - k) * (p2 - k) * (k + 1) * inner +
        k * p1 * (p2 - k) * (p2 * (t + 2 * k) - t * (k + 1) + k * p2 * (k - 1));
    return rdiv(bracket, k * p1 * p2 * t);
}

// Shared bracket of the Kemeny and multiplicative propositions.
rat kcoal_kappa_bracket(const KCoalComplete& s) {
    const rat p1 = s.p1, p2 = s.p2, k = s.k, t = p1 + p2 - k;
    const rat a = p1 * (t - 1) *
                  (p2 * k * (k - 1) +
                   (p2 - 1) * (p2 - k) * ((k + 1) * (p1 - k) + 2 * p2 * k));
    const rat b = p2 * (p1 - 1) * (p1 - k) * (2 * p1 * k + (p2 - k) * (k + 1));
    const rat c = p1 * (p2 - k) * (p2 - 1) * (p2 - 1) * (p2 - k - 1);
    const rat d = (p1 - k) * (p1 - 1) *
                  (p2 * k * (p1 - k - 1) * (p1 - 1) +
                   (p2 - k) * (p2 - 1) * (p1 + p2) * (k + 1));
    return rdiv((t - 1) * (a + b), t) + c + rdiv(d, k);
}

rat kcoal_kemeny(const KCoalComplete& s) {
    const rat p1 = s.p1, p2 = s.p2, k = s.k;
    const rat m = rdiv(p1 * (p1 - 1), 2) + rdiv(p2 * (p2 - 1), 2) -
                  rdiv(k * (k - 1), 2);
    return rdiv(kcoal_kappa_bracket(s), 2 * m * p1 * p2);
}

rat kcoal_additive(const KCoalComplete& s) {
    const rat p1 = s.p1, p2 = s.p2, k = s.k, t = p1 + p2 - k;
    const rat t1 = rdiv(2 * p1 * k * (k - 1) * (t - 1) +
                            k * (p1 - k) * (2 * t - 2) * (2 * t + p2 - k),
                        p1 * t);
    const rat t2 = rdiv((p1 - k) * (p2 - k) * (p1 + p2 - 2) * (p1 + p2) * (k + 1),
                        k * p1 * p2);
    const rat t3 = rdiv((p2 - k) * (p1 + 2 * p2 - k - 2) *
                            ((k + 1) * (p1 - k) + 2 * p2 * k),
                        p2 * t);
    const rat t4 = rdiv(2 * p2 * (p1 - k) * (p1 - k - 1) * (p1 - 1) +
                            2 * p1 * (p2 - k) * (p2 - k - 1) * (p2 - 1),
                        p1 * p2);
    return t1 + t2 + t3 + t4;
}

rat kcoal_multiplicative(const KCoalComplete& s) {
    const rat p1 = s.p1, p2 = s.p2;
    return rdiv(kcoal_kappa_bracket(s), p1 * p2);
}

rat kcoal_mixed(const KCoalComplete& s) {
    const rat p1 = s.p1, p2 = s.p2, k = s.k, t = p1 + p2 - k;
    const rat t1 = rdiv(2 * k * (k - 1), t);
    const rat t2 = rdiv((p1 - k) * ((t - 1) * (t - 1) + (p1 - 1) * (p1 - 1)) *
                            (k * 2 * t + (p2 - k)),
                        p1 * (p1 - 1) * t * (t - 1));
    const rat t3 = rdiv((p2 - k) * ((t - 1) * (t - 1) + (p2 - 1) * (p2 - 1)) *
                            ((k + 1) * (p1 - k) + 2 * p2 * k),
                        p2 * (p2 - 1) * t * (t - 1));
    const rat t4 = rdiv(2 * (p1 - k) * (p1 - k - 1), p1);
    const rat t5 = rdiv(2 * (p2 - k) * (p2 - k - 1), p2);
    const rat t6 = rdiv((p1 - k) * (p2 - k) *
                            ((p1 - 1) * (p1 - 1) + (p2 - 1) * (p2 - 1)) *
                            (p1 + p2) * (k + 1),
                        k * p1 * p2 * (p1 - 1) * (p2 - 1));
    return t1 + t2 + t3 + t4 + t5 + t6;
}

rat windmill_kirchhoff(const Windmill& s) {
    const rat n = s.n, t = s.t;
    return rdiv(2 * n * n * t * t - n * n * t + n * t, n + 1);
}

rat windmill_kemeny(const Windmill& s) {
    const rat n = s.n, t = s.t;
    return rdiv(n * n * (2 * t - 1), n + 1);
}

rat pineapple_kirchhoff(const Pineapple& s) {
    const rat p = s.p, q = s.q;
    return q * (p + q + 3) + p + 1 - rdiv(rat(2), p) * (q + 1);
}

rat pineapple_kemeny(const Pineapple& s) {
    const rat p = s.p, q = s.q;
    const rat num = p * p * p * p - p * p * p + p * p * p * q +
                    3 * p * p * q + 2 * p * q * q - 3 * p * p - 7 * p * q +
                    7 * p + 4 * q - 2;
    return rdiv(num, p * (p - 1) + 2 * q);
}

rat dandelion_kirchhoff(const Dandelion& s) {
    const rat n = s.n, l = s.l;
    return rdiv(l * l * (3 * n - 2 * l + 2) + l * (5 - 9 * n) +
                    6 * (n * n - 1),
                rat(6));
}

rat dandelion_kemeny(const Dandelion& s) {
    const rat n = s.n, l = s.l;
    return rdiv((n + 1) * (2 * l * l - 1) + 2 * n * (n - 3 * l), 2 * (n - 1)) +
           rdiv(l * (5 - 2 * l * l), 3 * (n - 1));
}

bool is_kirchhoff_or_kemeny(IndexKind k) {
    return k == IndexKind::kirchhoff || k == IndexKind::kemeny;
}

} // namespace

bool formula_supported(IndexKind k, const FamilySpec& spec) {
    if (k == IndexKind::resistance_energy) return false; // table only, no formula
    if (std::holds_alternative<KCoalComplete>(spec) ||
        std::holds_alternative<Kite>(spec))
        return true; // five propositions (kite is KCoalComplete(p,2,1))
    if (std::holds_alternative<Windmill>(spec) ||
        std::holds_alternative<Rose3>(spec) ||
        std::holds_alternative<Pineapple>(spec) ||
        std::holds_alternative<Dandelion>(spec))
        return is_kirchhoff_or_kemeny(k);
    return false;
}

double paper_formula(IndexKind k, const FamilySpec& spec) {
    validate(spec);
    if (!formula_supported(k, spec))
        throw unsupported_pair_error("no printed formula for (" + index_name(k) +
                                     ", " + family_name(spec) + ")");

    // Aliases: kite is KCoalComplete(p,2,1); the 3-rose is Windmill(2,3).
    FamilySpec resolved = spec;
    if (const auto* kite = std::get_if<Kite>(&spec))
        resolved = KCoalComplete{kite->p, 2, 1};
    else if (std::holds_alternative<Rose3>(spec))
        resolved = Windmill{2, 3};

    rat v;
    if (const auto* s = std::get_if<KCoalComplete>(&resolved)) {
        switch (k) {
        case IndexKind::kirchhoff: v = kcoal_kirchhoff(*s); break;
        case IndexKind::kemeny: v = kcoal_kemeny(*s); break;
        case IndexKind::additive_dk: v = kcoal_additive(*s); break;
        case IndexKind::multiplicative_dk: v = kcoal_multiplicative(*s); break;
        case IndexKind::mixed_dk: v = kcoal_mixed(*s); break;
        default: throw unsupported_pair_error("unreachable");
        }
    } else if (const auto* s2 = std::get_if<Windmill>(&resolved)) {
        v = k == IndexKind::kirchhoff ? windmill_kirchhoff(*s2)
                                      : windmill_kemeny(*s2);
    } else if (const auto* s3 = std::get_if<Pineapple>(&resolved)) {
        v = k == IndexKind::kirchhoff ? pineapple_kirchhoff(*s3)
                                      : pineapple_kemeny(*s3);
    } else if (const auto* s4 = std::get_if<Dandelion>(&resolved)) {
        v = k == IndexKind::kirchhoff ? dandelion_kirchhoff(*s4)
                                      : dandelion_kemeny(*s4);
    } else {
        throw unsupported_pair_error("unreachable family");
    }
    return static_cast<double>(v);
}

VerificationReport verify(IndexKind k, const FamilySpec& spec, double tol) {
    VerificationReport rep;
    rep.spec = spec;
    rep.index = k;
    rep.tol = tol;
    rep.formula_value = paper_formula(k, spec);
    const Graph g = build_family(spec);
    rep.oracle_value = definition_value(k, g, resistance_oracle(g));
    rep.abs_diff = std::abs(rep.formula_value - rep.oracle_value);
    rep.rel_diff = rep.abs_diff / std::max(1.0, std::abs(rep.oracle_value));
    rep.match = rep.abs_diff <= tol * std::max(1.0, std::abs(rep.oracle_value));
    return rep;
}

} // namespace rescoal
