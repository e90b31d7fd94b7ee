#ifndef BMETRIC_TESTS_SEQUENCES_HPP
#define BMETRIC_TESTS_SEQUENCES_HPP

#include "bmetric/completion.hpp"

namespace bmetric::testing {

// term(n) = target + c/n: converges to target with an explicit modulus.
inline CompletionPoint converging(PresentationPtr space, const Rational& target,
                                  const Rational& coeff) {
    if (coeff == 0) return embed(std::move(space), target);
    Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
    CauchySequence seq;
    seq.space = std::move(space);
    seq.term = [target, coeff](long n) { return Rational(target + coeff / n); };
    seq.modulus = [mag](long i) { return ceil_index(mag * i); };
    return {std::move(seq)};
}

}  // namespace bmetric::testing

#endif
