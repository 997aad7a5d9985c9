// Steenrod squares on presented algebras via Cartan expansion from the
// partial table, Adem normalization of operation words, Milnor operations by
// the defining recursion, and consistency checking of partial tables.
#ifndef F2ALG_STEENROD_HPP
#define F2ALG_STEENROD_HPP

#include <compare>
#include <set>
#include <string>
#include <vector>

#include "f2alg/algebra.hpp"

namespace f2alg {

// A composition Sq^{i1} ... Sq^{ik}, applied right to left. The empty word
// is the identity; every entry is >= 1 (Sq^0 is elided).
struct SqWord {
    std::vector<int> sup;

    SqWord() = default;
    explicit SqWord(std::vector<int> s);

    std::size_t length() const { return sup.size(); }
    int total_degree() const;
    // i_j >= 2 i_{j+1} for all consecutive entries.
    bool admissible() const;

    auto operator<=>(const SqWord&) const = default;
};

// F2 sum of admissible words (set membership = coefficient 1).
struct AdmissibleSum {
    std::set<SqWord> words;

    friend bool operator==(const AdmissibleSum& a, const AdmissibleSum& b) = default;
};

// binom(n, k) mod 2 by Lucas' theorem.
bool binom_mod2(long long n, long long k);

// Rewrites the leftmost inadmissible adjacent pair with the Adem relation
// Sq^a Sq^b = sum_c binom(b-c-1, a-2c) Sq^{a+b-c} Sq^c (a < 2b) until every
// word is admissible. Terminates: each step lowers the word's moment.
AdmissibleSum adem_normalize(const SqWord& w);

// Sq^i on a homogeneous class: Sq^0 = id; on a generator the table entry,
// the square when i = deg, zero when i > deg; on products the Cartan
// expansion. Result in normal form. Throws UnknownSqError when a needed
// table entry is absent.
Poly apply_sq(const GradedAlgebra& alg, int i, const Poly& p);

// Right-to-left application of a word's squares.
Poly apply_sq_word(const GradedAlgebra& alg, const SqWord& w, const Poly& p);

struct MilnorIndex {
    int i = 0;
    int degree_shift = 1;  // 2^{i+1} - 1

    static MilnorIndex of(int i);
};

// Milnor operation by the defining recursion Q_0 = Sq^1,
// Q_i = Sq^{2^i} Q_{i-1} + Q_{i-1} Sq^{2^i}.
Poly milnor_q(const GradedAlgebra& alg, int i, const Poly& p);

struct TableViolation {
    std::size_t gen;
    SqWord word;  // the inadmissible pair (a, b)
    Poly lhs;     // action of the word
    Poly rhs;     // action of its admissible form
};

struct TableSkip {
    std::size_t gen;
    SqWord word;
    std::vector<std::pair<std::string, int>> missing;
};

struct TableCheckReport {
    std::vector<TableViolation> violations;
    std::vector<TableSkip> skipped;  // pairs whose evaluation is undetermined

    bool consistent() const { return violations.empty(); }
};

// Compares, for every generator g and inadmissible pair (a, b) with
// deg g + a + b <= through, the action of Sq^a Sq^b with the action of its
// Adem normal form, skipping pairs that need unspecified table entries.
TableCheckReport check_table_consistency(const GradedAlgebra& alg, int through);

// CLI word syntax: whitespace-separated "Sq<k>" tokens.
SqWord parse_sq_word(const std::string& text);
std::string format_sq_word(const SqWord& w);
// Admissible words joined by " + ", greatest first; "0" for the empty sum.
std::string format_admissible_sum(const AdmissibleSum& s);

}  // namespace f2alg

#endif
