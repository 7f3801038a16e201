#include "rootzeta/weyl.hpp"

#include <algorithm>
#include <map>

namespace rootzeta {

WeylElement WeylElement::inverse() const {
    int det = mat[0] * mat[3] - mat[1] * mat[2];
    // det is +-1 for every element of the group
    WeylElement r;
    r.mat = {mat[3] / det, -mat[1] / det, -mat[2] / det, mat[0] / det};
    std::string w(word.rbegin(), word.rend());
    r.word = w;
    return r;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    WeylElement r;
    r.mat = {a.mat[0] * b.mat[0] + a.mat[1] * b.mat[2], a.mat[0] * b.mat[1] + a.mat[1] * b.mat[3],
             a.mat[2] * b.mat[0] + a.mat[3] * b.mat[2], a.mat[2] * b.mat[1] + a.mat[3] * b.mat[3]};
    r.word = a.word + b.word;
    return r;
}

WeylElement simple_reflection(int i) {
    WeylElement w;
    if (i == 1) {
        w.mat = {-1, 1, 0, 1};
        w.word = "1";
    } else if (i == 2) {
        w.mat = {1, 0, 3, -1};
        w.word = "2";
    } else {
        throw std::invalid_argument("simple_reflection: index must be 1 or 2");
    }
    return w;
}

const std::vector<WeylElement>& weyl_group() {
    static const std::vector<WeylElement> group = [] {
        std::map<std::array<int, 4>, WeylElement> seen;
        WeylElement id;
        seen[id.mat] = id;
        std::vector<WeylElement> frontier{id};
        while (!frontier.empty()) {
            std::vector<WeylElement> next;
            for (const auto& w : frontier) {
                for (int i : {1, 2}) {
                    WeylElement v = w * simple_reflection(i);
                    if (!seen.count(v.mat)) {
                        seen[v.mat] = v;
                        next.push_back(v);
                    }
                }
            }
            frontier = std::move(next);
        }
        std::vector<WeylElement> out;
        for (auto& [_, w] : seen) out.push_back(w);
        std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
            return std::pair(a.word.size(), a.word) < std::pair(b.word.size(), b.word);
        });
        return out;
    }();
    return group;
}

WeylElement longest_element() {
    for (const auto& w : weyl_group())
        if (w.mat == std::array<int, 4>{-1, 0, 0, -1}) return w;
    throw std::logic_error("longest_element: -1 not found");
}

int coroot_index(const CorootForm& f, bool& negated) {
    for (int i = 0; i < 6; ++i) {
        if (f == positive_coroots[i]) {
            negated = false;
            return i + 1;
        }
        if (f.c1 == -positive_coroots[i].c1 && f.c2 == -positive_coroots[i].c2) {
            negated = true;
            return i + 1;
        }
    }
    throw std::logic_error("coroot_index: not a root image");
}

std::vector<int> inversion_set(const WeylElement& w) {
    std::vector<int> out;
    for (int i = 0; i < 6; ++i) {
        bool neg;
        coroot_index(w.apply(positive_coroots[i]), neg);
        if (neg) out.push_back(i + 1);
    }
    return out;
}

std::vector<WeylElement> parabolic_transversal(const std::set<int>& I) {
    if (I.empty()) throw std::invalid_argument("parabolic_transversal: I must be nonempty");
    for (int i : I)
        if (i != 1 && i != 2) throw std::invalid_argument("parabolic_transversal: I subset of {1,2}");
    std::vector<WeylElement> out;
    for (const auto& w : weyl_group()) {
        WeylElement winv = w.inverse();
        bool ok = true;
        for (int i : I) {
            bool neg;
            coroot_index(winv.apply(positive_coroots[i - 1]), neg);
            if (neg) {
                ok = false;
                break;
            }
        }
        if (ok) out.push_back(w);
    }
    return out;
}

ExponentTuple act_on_exponents(const WeylElement& w, const ExponentTuple& s) {
    WeylElement winv = w.inverse();
    ExponentTuple out{};
    for (int i = 0; i < 6; ++i) {
        bool neg;
        int j = coroot_index(winv.apply(positive_coroots[i]), neg);
        out[i] = s[j - 1];
    }
    return out;
}

int sign_product(const WeylElement& w, const ExponentTuple& s) {
    long parity = 0;
    for (int i : inversion_set(w.inverse())) parity += s[i - 1];
    return (parity % 2 == 0) ? 1 : -1;
}

std::vector<SignedTerm> functional_sum_terms(const std::set<int>& I, const ExponentTuple& s) {
    std::vector<SignedTerm> out;
    for (const auto& v : parabolic_transversal(I))
        out.push_back({sign_product(v, s), act_on_exponents(v.inverse(), s)});
    return out;
}

std::vector<SignedTerm> reduction_terms(const std::set<int>& I, const WeylElement& w1,
                                        const ExponentTuple& s) {
    if (act_on_exponents(w1.inverse(), s) != s)
        throw HypothesisViolated("reduction_terms: w1^{-1} s != s");
    if (sign_product(w1, s) != -1)
        throw HypothesisViolated("reduction_terms: sign product over Delta_{w1^{-1}} is +1");
    auto transversal = parabolic_transversal(I);
    WeylElement w1inv = w1.inverse();
    std::set<std::array<int, 4>> coset_fwd, coset_inv;
    for (const auto& v : transversal) {
        coset_fwd.insert((w1 * v).mat);
        coset_inv.insert((w1inv * v).mat);
    }
    if (coset_fwd != coset_inv) throw CosetMismatch("reduction_terms: w1^{-1} W^I != w1 W^I");
    std::vector<SignedTerm> out;
    for (const auto& v : transversal)
        if (!coset_fwd.count(v.mat))
            out.push_back({sign_product(v, s), act_on_exponents(v.inverse(), s)});
    return out;
}

}  // namespace rootzeta
