#pragma once

// Single-branched (right-normal) tree monomials as indexed words, with the
// period machinery and counting of factor-avoiding word families.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oplab/tree.hpp"

namespace oplab {

struct BranchLetter {
    Label generator = 0;
    int index = 1;  // composition slot below this letter; 1 for the last letter

    friend bool operator==(const BranchLetter&, const BranchLetter&) = default;
    friend auto operator<=>(const BranchLetter&, const BranchLetter&) = default;
};

/// x_1 o_{i_1} x_2 o_{i_2} ... o_{i_{n-1}} x_n, stored as (x_k, i_k).
class BranchWord {
public:
    BranchWord(AlphabetPtr alphabet, std::vector<BranchLetter> letters);

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<BranchLetter>& letters() const { return letters_; }
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    /// 1-based access, matching the positions x_1..x_n.
    const BranchLetter& at(std::size_t position) const { return letters_.at(position - 1); }

    /// `a:1 a:2 b`; the last index is omitted.
    std::string to_string() const;

    friend bool operator==(const BranchWord& a, const BranchWord& b) { return a.letters_ == b.letters_; }

private:
    AlphabetPtr alphabet_;
    std::vector<BranchLetter> letters_;
};

BranchWord parse_branch_word(std::string_view text, const AlphabetPtr& alphabet);

BranchWord to_branch_word(const TreeMonomial& t);
TreeMonomial from_branch_word(const BranchWord& w);

std::optional<int> minimal_period(const BranchWord& w);
bool is_local_period(const BranchWord& w, int p);
/// True iff p is a local period of every periodic extension of w.
bool is_period(const BranchWord& w, int p);
/// w_{m,l}: positions -m..l filled periodically from the minimal period.
BranchWord extend(const BranchWord& w, int m, int l);

struct AvoidanceSystem {
    AlphabetPtr alphabet;
    std::vector<BranchWord> forbidden;  // forbidden factors
};

/// values[h] = number of words of height h with no forbidden factor.
DimSeries closed_set_counts(const AvoidanceSystem& system, int max_height);

/// Direct enumeration; the oracle for closed_set_counts at small heights.
DimSeries closed_set_counts_brute(const AvoidanceSystem& system, int max_height);

/// One binary generator; words with at most one composition index 2.
AvoidanceSystem at_most_one_turn_system(int max_height);

}  // namespace oplab
