#ifndef DESING_SINGANALYSIS_HPP
#define DESING_SINGANALYSIS_HPP

#include "desing/ratfun.hpp"
#include "desing/shiftop.hpp"

#include <span>
#include <utility>
#include <vector>

namespace desing {

// Apparentness of trailing singularities through the epsilon-lift: the
// recurrence of L with coefficients a_i(z + eps) is run downward from q to
// sigma over Q(eps), and poles at eps = 0 of the values reached at sigma
// witness solutions that cannot be continued holomorphically.

/// Values at sigma obtained from the d unit initial windows at
/// q = sigma + q_offset, q+1, ..., q+d-1. Rational functions in eps.
struct RSet {
    Rat sigma;
    int q_offset = 0;
    std::vector<RatFun> values;
};

/// Homogeneous linear relations on the generic Taylor coefficients F_{i,j}
/// (coefficient j of the initial value at q+i) that make the value at sigma
/// a Taylor series. Rows are in reduced echelon form; no rows means no
/// constraint.
struct RelationMatrix {
    std::vector<std::pair<int, int>> columns; // (i, j)
    std::vector<std::vector<Rat>> rows;

    bool empty() const { return rows.empty(); }
};

/// Offset n (q = sigma + n) beyond every singularity congruent to sigma and
/// beyond the kappa bound. Throws unless sigma is a root of a_0.
int choose_q(const ShiftOp& L, const Rat& sigma);

/// Phi(sigma) for an arbitrary initial window Phi(q), ..., Phi(q+d-1).
RatFun value_at_sigma(const ShiftOp& L, const Rat& sigma, int n, std::span<const RatFun> window);

RSet r_set(const ShiftOp& L, const Rat& sigma, int n);

RelationMatrix c_relations(const RSet& r);
RelationMatrix c_relations(const ShiftOp& L, const Rat& sigma, int n);

/// Single-point apparentness verdict with its evidence.
struct ApparentnessReport {
    Rat sigma;          // in the coordinates of the operator that was tested
    int q_offset = 0;
    RSet rset;
    RelationMatrix relations;
    bool apparent = false;
};

ApparentnessReport analyze_t(const ShiftOp& L, const Rat& sigma);
/// The leading case, decided on the image of L under z -> -z, E -> 1/E at
/// the point -sigma. The report's sigma is that image point.
ApparentnessReport analyze_l(const ShiftOp& L, const Rat& sigma);

bool is_apparent_t(const ShiftOp& L, const Rat& sigma);
bool is_apparent_l(const ShiftOp& L, const Rat& sigma);

struct SingularityVerdict {
    Rat point;
    int multiplicity = 0;
    bool apparent = false;
};

/// Verdicts for every rational t- and l-singularity; irrational parts of
/// the singular polynomials are returned separately and left undecided.
struct Classification {
    std::vector<SingularityVerdict> t;
    std::vector<SingularityVerdict> l;
    Poly t_undecided; // factor of a_0 without rational roots
    Poly l_undecided; // same for a_d(z - d)
};

Classification classify_singularities(const ShiftOp& L);

} // namespace desing

#endif
