#include "bmetric/completion.hpp"

#include "bmetric/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmetric {

namespace {

void require_same_space(const CompletionPoint& a, const CompletionPoint& b) {
    if (!a.rep.space || !b.rep.space) throw std::invalid_argument("missing presentation");
    if (a.rep.space->name != b.rep.space->name) throw MixedSpacesError();
}

Rational abs_diff(const Rational& a, const Rational& b) { return a >= b ? a - b : b - a; }

}  // namespace

CompletionPoint embed(PresentationPtr space, const Rational& x) {
    CauchySequence seq;
    seq.space = std::move(space);
    seq.term = [x](long) { return x; };
    seq.modulus = [](long) { return 1L; };
    return {std::move(seq)};
}

std::optional<ModulusCounterexample> validate_modulus(const CauchySequence& seq, long i,
                                                      int samples) {
    if (samples < 1) throw std::invalid_argument("samples must be >= 1");
    const long base = seq.modulus(i);
    const Rational bound(1, i);
    for (int s = 0; s < samples; ++s) {
        // Fixed grid anchored at the modulus itself.
        long n = base + s;
        long m = base + 1 + 2 * s + s * s;
        Rational d = seq.space->dist(seq.term(n), seq.term(m));
        if (d > bound) return ModulusCounterexample{n, m, d};
    }
    return std::nullopt;
}

RationalInterval dstar_interval(const CompletionPoint& a, const CompletionPoint& b, long i) {
    require_same_space(a, b);
    if (i < 1) throw std::invalid_argument("precision index must be >= 1");
    const long N = std::max(a.rep.modulus(i), b.rep.modulus(i));
    Rational v = a.rep.space->dist(a.rep.term(N), b.rep.term(N));
    // Both tails oscillate by at most 1/i beyond N, so the limit differs
    // from v by at most K(1/i + 1/i).
    Rational radius = 2 * a.rep.space->K / i;
    Rational lo = v - radius;
    if (lo < 0) lo = 0;
    return {lo, v + radius};
}

Equivalence equivalent_at(const CompletionPoint& a, const CompletionPoint& b,
                          const Rational& epsilon, long i) {
    if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
    RationalInterval I = dstar_interval(a, b, i);
    if (I.lo > 0) return Equivalence::Distinct;
    if (I.hi < epsilon) return Equivalence::Equivalent;
    return Equivalence::Undecided;
}

RationalInterval strong_triangle_check(const CompletionPoint& a, const CompletionPoint& b,
                                       const CompletionPoint& c, long i) {
    require_same_space(a, b);
    require_same_space(b, c);
    if (a.rep.space->cls != SpaceClass::StrongB) {
        throw std::invalid_argument("strong_triangle_check needs a StrongB presentation");
    }
    const Rational& K = a.rep.space->K;
    RationalInterval ac = dstar_interval(a, c, i);
    RationalInterval ab = dstar_interval(a, b, i);
    RationalInterval bc = dstar_interval(b, c, i);
    return {ac.lo - ab.hi - K * bc.hi, ac.hi - ab.lo - K * bc.lo};
}

CompletionPoint limit_point(const CompletionSequence& xs) {
    PresentationPtr space = xs.at(1).rep.space;
    const Rational K = space->K;

    // Sampled certification of the supplied D*-modulus.
    for (long j : {1L, 2L, 4L}) {
        const long Mj = xs.modulus(j);
        const long prec = ceil_index(4 * K * j);
        const Rational bound(1, j);
        for (auto [n, m] : {std::pair<long, long>{Mj, Mj + 1}, {Mj + 2, Mj + 5}}) {
            RationalInterval I = dstar_interval(xs.at(n), xs.at(m), prec);
            if (I.hi > bound) {
                throw BadModulusError("D* enclosure [" + format_rational(I.lo) + ", " +
                                      format_rational(I.hi) + "] exceeds 1/" +
                                      std::to_string(j) + " at n=" + std::to_string(n) +
                                      ", m=" + std::to_string(m));
            }
        }
    }

    auto xs_at = xs.at;
    auto xs_modulus = xs.modulus;
    CauchySequence seq;
    seq.space = space;
    // Diagonal representative: the n-th point's own base sequence sampled
    // at precision ceil(K n), giving D*(embed(y_n), xs(n)) <= 1/(K n).
    seq.term = [xs_at, K](long n) {
        CompletionPoint p = xs_at(n);
        long prec = ceil_index(K * n);
        return p.rep.term(p.rep.modulus(prec));
    };
    // D(y_n, y_m) <= K/(Kn) + D*(xs_n, xs_m) + K/(Km) <= 3 * (1/(3i)) = 1/i
    // once n, m >= max(M(3i), 3i).
    seq.modulus = [xs_modulus](long i) { return std::max(xs_modulus(3 * i), 3 * i); };
    return {std::move(seq)};
}

DensityWitness density_witness(const CompletionPoint& a, long i) {
    if (i < 1) throw std::invalid_argument("precision index must be >= 1");
    Rational p = a.rep.term(a.rep.modulus(i));
    RationalInterval cert = dstar_interval(embed(a.rep.space, p), a, i);
    return {std::move(p), cert};
}

namespace {

// Exact enclosure for an eventually constant evaluated distance sequence:
// evaluate at the certificate index and spot-check constancy further out.
RationalInterval tail_enclosure(const CompletionPoint& a, const CompletionPoint& b,
                                const TailCertificate& cert) {
    const long n0 = std::max(cert.constant_from, 1L);
    Rational v = a.rep.space->dist(a.rep.term(n0), b.rep.term(n0));
    for (long off : {1L, 10L, 100L}) {
        Rational check = a.rep.space->dist(a.rep.term(n0 + off), b.rep.term(n0 + off));
        if (check != v) {
            throw std::invalid_argument("tail certificate violated at index " +
                                        std::to_string(n0 + off));
        }
    }
    return {v, v};
}

}  // namespace

WellposednessReport wellposedness_probe(const CompletionPoint& x, const CompletionPoint& z,
                                        const CompletionPoint& y, const CompletionPoint& w,
                                        long i, std::optional<TailCertificate> first_tail,
                                        std::optional<TailCertificate> second_tail) {
    require_same_space(x, z);
    require_same_space(z, y);
    require_same_space(y, w);
    const Rational epsilon(1, 4);

    WellposednessReport report;
    report.first_pair = equivalent_at(x, z, epsilon, i);
    report.second_pair = equivalent_at(y, w, epsilon, i);
    if (report.first_pair != Equivalence::Equivalent) {
        throw NotEquivalentInputsError("first coordinate pair is not certified equivalent");
    }
    if (report.second_pair != Equivalence::Equivalent) {
        throw NotEquivalentInputsError("second coordinate pair is not certified equivalent");
    }

    if (x.rep.space->cls == SpaceClass::StrongB) {
        report.first_limit = dstar_interval(x, y, i);
        report.second_limit = dstar_interval(z, w, i);
    } else {
        // The 2K/i radius rests on the strong inequality, which is exactly
        // what a plain b-metric lacks; exact tail evidence is required.
        if (!first_tail || !second_tail) {
            throw std::invalid_argument(
                "PlainB probe needs tail certificates for both evaluated sequences");
        }
        report.first_limit = tail_enclosure(x, y, *first_tail);
        report.second_limit = tail_enclosure(z, w, *second_tail);
    }
    report.clash = report.first_limit.disjoint(report.second_limit);
    return report;
}

CompletionPoint constant_sequence(PresentationPtr space, const Rational& value) {
    return embed(std::move(space), value);
}

CompletionPoint reciprocal_sequence(PresentationPtr space) {
    CauchySequence seq;
    seq.space = std::move(space);
    seq.term = [](long n) { return Rational(1, n); };
    seq.modulus = [](long i) { return 2 * i; };
    return {std::move(seq)};
}

CompletionPoint sqrt2_sequence(PresentationPtr space) {
    CauchySequence seq;
    seq.space = std::move(space);
    seq.term = [](long n) { return sqrt2_truncation(n); };
    // |t(n) - t(m)| <= 2 * 10^-i <= 1/i for n, m >= i.
    seq.modulus = [](long i) { return i; };
    return {std::move(seq)};
}

Example3Quadruple example3_quadruple(PresentationPtr space) {
    CompletionPoint x = embed(space, 1);
    CompletionPoint z = embed(space, 1);
    CauchySequence yseq;
    yseq.space = space;
    yseq.term = [](long n) { return Rational(1, 2 * n); };
    yseq.modulus = [](long i) { return i; };
    CompletionPoint w = embed(space, 0);
    return {std::move(x), std::move(z), {std::move(yseq)}, std::move(w)};
}

}  // namespace bmetric
