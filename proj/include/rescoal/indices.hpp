// Resistance indices: definition-route computation from a resistance matrix,
// literal evaluation of the closed-form index statements, and the
// formula-vs-definition verification record.
#pragma once

#include <string>
#include <vector>

#include "rescoal/family.hpp"
#include "rescoal/resistance.hpp"

namespace rescoal {

enum class IndexKind {
    kirchhoff,
    kemeny,
    additive_dk,
    multiplicative_dk,
    mixed_dk,
    resistance_energy,
};

std::string index_name(IndexKind k);
IndexKind parse_index(const std::string& name); // throws parse_error

enum class Route { definition, paper_formula };

struct IndexValue {
    IndexKind index;
    double value;
    Route route;
};

// Kf = sum of r_ij over unordered pairs.
double kirchhoff_index(const ResistanceMatrix& r);

// kappa = (1/4m) * sum over ordered pairs of d_i d_j r_ij.
double kemeny_constant(const Graph& g, const ResistanceMatrix& r);

// R+ = sum_{i<j} (d_i+d_j) r_ij.
double additive_dk(const Graph& g, const ResistanceMatrix& r);

// R* = sum_{i<j} d_i d_j r_ij.
double multiplicative_dk(const Graph& g, const ResistanceMatrix& r);

// Rhat = sum_{i<j} (d_i/d_j + d_j/d_i) r_ij; degree-0 vertices are an error.
double mixed_dk(const Graph& g, const ResistanceMatrix& r);

// RE = sum of |eigenvalue| of R.
double resistance_energy(const ResistanceMatrix& r);

// Dispatch one definition-route index.
double definition_value(IndexKind k, const Graph& g, const ResistanceMatrix& r);

// All six definition-route values from one oracle solve.
std::vector<IndexValue> all_indices(const Graph& g);

// True when the closed-form catalogue covers (index, family).
bool formula_supported(IndexKind k, const FamilySpec& spec);

// Literal evaluation of the printed closed form in exact rational
// arithmetic, converted to double once at the end. Throws
// unsupported_pair_error or formula_undefined_error (printed expression
// divides by zero at these parameters).
double paper_formula(IndexKind k, const FamilySpec& spec);

struct VerificationReport {
    FamilySpec spec;
    IndexKind index;
    double formula_value = 0.0;
    double oracle_value = 0.0;
    double abs_diff = 0.0;
    double rel_diff = 0.0; // abs_diff / max(1, |oracle_value|)
    double tol = 0.0;
    bool match = false; // abs_diff <= tol * max(1, |oracle_value|)
};

// formula route vs definition route over the oracle resistances.
VerificationReport verify(IndexKind k, const FamilySpec& spec, double tol);

} // namespace rescoal
