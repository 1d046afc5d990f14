#ifndef DESING_DIFFDESING_HPP
#define DESING_DIFFDESING_HPP

#include "desing/diffop.hpp"

#include <utility>
#include <vector>

namespace desing {

/// Local data of a differential operator at a rational point.
struct LocalData {
    Rat point;
    bool ordinary = false; // no coefficient of the monic operator has a pole here
    bool regular = true;   // false for an irregular singularity
    Poly indicial;         // in the exponent variable s
    std::vector<Rat> exponents; // rational roots with multiplicity, ascending
    int series_dim = 0;
    int truncation = 0;    // T used for series_dim
};

/// Smallest admissible truncation order for series_solution_dim at p:
/// (largest non-negative integer exponent, or 0) + ord L + 2.
int series_margin(const DiffOp& L, const Rat& p);

LocalData local_exponents(const DiffOp& L, const Rat& p);

/// Dimension of the space of formal power series solutions at p, from the
/// truncated coefficient system of size T. Throws if T is below
/// series_margin(L, p).
int series_solution_dim(const DiffOp& L, const Rat& p, int T);

/// True at ordinary points and apparent singularities.
bool is_apparent_diff(const DiffOp& L, const Rat& p);

/// The monic operator of order fs.size() annihilating every f in fs.
DiffOp annihilator_of_ratfuns(const std::vector<RatFun>& fs);

/// b with poles only among the given points such that b - a vanishes to
/// order at least M at each (p, M).
RatFun jet_match(const RatFun& a, const std::vector<std::pair<Rat, int>>& points);

struct DDesingResult {
    DiffOp monic;   // desingularization over Q(z), monic
    DiffOp cleared; // same operator with polynomial, coprime coefficients
    DiffOp l1;      // annihilator of the L(y_j)
    DiffOp l3;      // l1 with coefficients replaced by their jets
    std::vector<Rat> apparent; // the set A
    int m = 0;                 // largest exponent over A (0 if A is empty)
};

/// Removes every apparent singularity (all must be rational; a regular
/// singular point at an irrational algebraic number raises
/// UnsupportedAlgebraicPoint since it cannot be classified).
DDesingResult d_desing(const DiffOp& L);

struct DCompleteness {
    bool complete = false;
    DiffOp witness; // d_desing(L).cleared
};

DCompleteness is_completely_d_desingularizable(const DiffOp& L);

} // namespace desing

#endif
