#ifndef BMETRIC_COMPLETION_HPP
#define BMETRIC_COMPLETION_HPP

#include "bmetric/presentation.hpp"
#include "bmetric/rational.hpp"

#include <functional>
#include <optional>
#include <variant>

namespace bmetric {

// Closed interval with rational endpoints. Every limit evaluation returns
// one of these and guarantees the true limit lies inside.
struct RationalInterval {
    Rational lo;
    Rational hi;

    Rational width() const { return hi - lo; }
    Rational center() const { return (lo + hi) / 2; }
    bool contains(const Rational& v) const { return lo <= v && v <= hi; }
    bool disjoint(const RationalInterval& other) const {
        return hi < other.lo || other.hi < lo;
    }
    bool operator==(const RationalInterval&) const = default;
};

// A Cauchy sequence with an explicit modulus: term(n) for n >= 1 and
// modulus(i) with D(term(n), term(m)) <= 1/i for all n, m >= modulus(i).
// The modulus is supplied, not discovered; it is what makes limit
// evaluation with certified error bounds possible.
struct CauchySequence {
    PresentationPtr space;
    std::function<Rational(long)> term;
    std::function<long(long)> modulus;
};

// A point of the completion, held as one representative Cauchy sequence.
// Two points are equivalent iff the termwise distances tend to 0; that is
// only semi-decidable, see equivalent_at.
struct CompletionPoint {
    CauchySequence rep;
};

// The constant sequence at x with modulus identically 1.
CompletionPoint embed(PresentationPtr space, const Rational& x);

struct ModulusCounterexample {
    long n, m;
    Rational distance;  // > 1/i
};

// Samples pairs n, m >= modulus(i) on a fixed grid and checks the 1/i
// bound. A violation is a return value, not an error.
std::optional<ModulusCounterexample> validate_modulus(const CauchySequence& seq, long i,
                                                      int samples);

// Certified enclosure of D*(a, b) = lim D(a_n, b_n) at precision i:
// evaluates one term at N = max of the two moduli and pads by 2K/i, the
// tail-oscillation bound from the strong b-inequality.
RationalInterval dstar_interval(const CompletionPoint& a, const CompletionPoint& b, long i);

enum class Equivalence { Equivalent, Distinct, Undecided };

// Distinct is a proof (the enclosure excludes 0); Equivalent only
// certifies D*(a,b) < epsilon.
Equivalence equivalent_at(const CompletionPoint& a, const CompletionPoint& b,
                          const Rational& epsilon, long i);

// Enclosure of the residual D*(a,c) - D*(a,b) - K D*(b,c). For a genuine
// strong b-metric presentation, residual.lo <= 0 always; a positive lo is
// a certified axiom violation.
RationalInterval strong_triangle_check(const CompletionPoint& a, const CompletionPoint& b,
                                       const CompletionPoint& c, long i);

// A Cauchy sequence of completion points: at(n) for n >= 1, with a
// D*-modulus certifying D*(at(n), at(m)) enclosures of hi <= 1/j for all
// n, m >= modulus(j).
struct CompletionSequence {
    std::function<CompletionPoint(long)> at;
    std::function<long(long)> modulus;
};

// Limit of a Cauchy sequence of completion points, built from the
// diagonal: y_n is drawn from the n-th point's own representative at
// precision ceil(K n), so D*(embed(y_n), at(n)) <= 1/(K n). The result
// carries modulus(i) = max(M(3i), 3i). Throws BadModulusError when a
// sampled certification check fails.
CompletionPoint limit_point(const CompletionSequence& xs);

struct DensityWitness {
    Rational point;
    RationalInterval certified_distance;  // enclosure of D*(embed(point), a)
};

// Base point within 1/i of a: the representative's term at modulus(i).
DensityWitness density_witness(const CompletionPoint& a, long i);

// Evidence that D(a_n, b_n) is eventually constant: constant from index
// `constant_from` on. Needed for plain b-metric presentations, where the
// strong-inequality error radius is unavailable.
struct TailCertificate {
    long constant_from;
};

struct WellposednessReport {
    RationalInterval first_limit;   // lim D(x_n, y_n)
    RationalInterval second_limit;  // lim D(z_n, w_n)
    Equivalence first_pair;         // x ~ z certificate
    Equivalence second_pair;        // y ~ w certificate
    bool clash;                     // disjoint enclosures: D* ill-defined
};

// Probes well-definedness of the completion distance: x ~ z and y ~ w
// must hold, then the two candidate limits lim D(x_n,y_n) and
// lim D(z_n,w_n) are enclosed and compared. Disjoint enclosures certify
// that the D* formula is ill-defined for this presentation. On PlainB
// presentations tail certificates for both evaluated distance sequences
// are required. Throws NotEquivalentInputsError when the precondition
// certificates fail.
WellposednessReport wellposedness_probe(const CompletionPoint& x, const CompletionPoint& z,
                                        const CompletionPoint& y, const CompletionPoint& w,
                                        long i,
                                        std::optional<TailCertificate> first_tail = {},
                                        std::optional<TailCertificate> second_tail = {});

// Built-in sequence families.
CompletionPoint constant_sequence(PresentationPtr space, const Rational& value);
// term(n) = 1/n in the given presentation, modulus(i) = 2i.
CompletionPoint reciprocal_sequence(PresentationPtr space);
// Decimal truncations of sqrt(2) in rationals-abs, modulus(i) = i.
CompletionPoint sqrt2_sequence(PresentationPtr space);
// The example-3 quadruple (x, z, y, w) = (1, 1, 1/(2n), 0).
struct Example3Quadruple {
    CompletionPoint x, z, y, w;
};
Example3Quadruple example3_quadruple(PresentationPtr space);

}  // namespace bmetric

#endif
