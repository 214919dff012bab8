#pragma once

/**
 * @file word_algebra.hpp
 * @brief The shuffle algebra h = Q<x,y>: shuffle product, regularizations,
 *        antipode and the fixed (weight, depth, height) sums g_i(k,n,s).
 *
 * Regularization. Every word factors uniquely as w = v·x^j with v in h¹, and
 * the family {v ⧢ x^{⧢j}} is a basis of the weight slice of h. The matrix of
 * that basis is triangular when words are ordered by their number of trailing
 * x's, so the decomposition of any element is solved exactly by elimination in
 * that order; reg¹ keeps the j = 0 component. reg⁰ works the same way with the
 * basis v ⧢ x^{⧢m} ⧢ y^{⧢n}, v in h⁰, ordered by (#leading y + #trailing x).
 *
 * x^{⧢n} = x ⧢ ... ⧢ x = n!·x^n carries no normalization.
 */

#include "mplkz/lincomb.hpp"

namespace mplkz {

LinComb shuffle(const Word& u, const Word& v);
LinComb shuffle(const LinComb& a, const LinComb& b);

/// a ⧢ a ⧢ ... ⧢ a (n factors); n = 0 gives the unit.
LinComb shuffle_power(const LinComb& a, unsigned n);

LinComb reg1(const Word& w);
LinComb reg1(const LinComb& a);
LinComb reg0(const Word& w);
LinComb reg0(const LinComb& a);

/// reg¹(w·y·xⁿ) = (−1)ⁿ (w ⧢ xⁿ) y, the closed form used on hot paths.
LinComb reg1_closed_form(const Word& w_before_y, unsigned n);

/// Component of a in the summand h¹ ⧢ x^{⧢j} of the decomposition h = h¹[x],
/// returned as the h¹ coefficient c_j with a = Σ_j c_j ⧢ x^{⧢j}.
std::vector<LinComb> decompose_h1(const LinComb& a);

/// S(w) = (−1)^{|w|} reverse(w).
LinComb antipode(const Word& w);
LinComb antipode(const LinComb& a);

/// Sum of all words of h^i (i ∈ {0,1}) with weight k, depth n and height s.
/// Zero outside the admissible range, in particular for any argument <= 0.
LinComb enumerate_g(int i, int k, int n, int s);

}  // namespace mplkz
