#pragma once

#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

// Concrete G2 root datum and Weyl combinatorics. All arithmetic is on coroot
// coordinates: a positive coroot is the linear form c1*m + c2*n on the weight
// lattice point m*lambda1 + n*lambda2, which keeps positivity and wall tests
// exact and integer-only.

namespace rootzeta {

struct CorootForm {
    int c1, c2;
    friend bool operator==(const CorootForm&, const CorootForm&) = default;
};

// The six positive coroots of G2, indexed 1..6 in slots 0..5:
//   m, n, m+n, m+2n, m+3n, 2m+3n
inline constexpr std::array<CorootForm, 6> positive_coroots{
    {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}}};

struct WeylElement {
    std::array<int, 4> mat{1, 0, 0, 1};  // row-major 2x2, acts on (c1,c2)
    std::string word;                    // reduced word, digits '1'/'2'; "" = identity

    CorootForm apply(const CorootForm& f) const {
        return {mat[0] * f.c1 + mat[1] * f.c2, mat[2] * f.c1 + mat[3] * f.c2};
    }
    WeylElement inverse() const;
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    friend bool operator==(const WeylElement& a, const WeylElement& b) {
        return a.mat == b.mat;
    }
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.mat < b.mat; }
};

using ExponentTuple = std::array<long, 6>;

struct SignedTerm {
    int sign;  // +1 or -1
    ExponentTuple exps;
    friend bool operator==(const SignedTerm&, const SignedTerm&) = default;
};

struct HypothesisViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CosetMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

WeylElement simple_reflection(int i);  // i = 1 or 2
WeylElement longest_element();         // w0 = -1

// Closure of {sigma1, sigma2}; 12 elements, sorted by word length then word.
const std::vector<WeylElement>& weyl_group();

// Index (1..6) of the positive coroot equal to +-f; negated reports the sign.
int coroot_index(const CorootForm& f, bool& negated);

// Indices of positive roots sent to negative ones by w (Delta_w).
std::vector<int> inversion_set(const WeylElement& w);

// W^I = { w : all alpha_i (i in I) stay positive under w^{-1} }, ordered by
// word length then lexicographic word. I must be a nonempty subset of {1,2}.
std::vector<WeylElement> parabolic_transversal(const std::set<int>& I);

// (w s)_alpha = s_{w^{-1} alpha}, identifying -alpha with alpha.
ExponentTuple act_on_exponents(const WeylElement& w, const ExponentTuple& s);

// prod_{alpha in Delta_{w^{-1}}} (-1)^{s_alpha}
int sign_product(const WeylElement& w, const ExponentTuple& s);

// One signed term per v in W^I: (prod_{Delta_{v^{-1}}} (-1)^{s_alpha}, v^{-1} s).
std::vector<SignedTerm> functional_sum_terms(const std::set<int>& I, const ExponentTuple& s);

// Reduced term list over W^I \ w1 W^I. Requires w1^{-1} s = s, a -1 sign
// product over Delta_{w1^{-1}}, and w1^{-1} W^I = w1 W^I.
std::vector<SignedTerm> reduction_terms(const std::set<int>& I, const WeylElement& w1,
                                        const ExponentTuple& s);

}  // namespace rootzeta
