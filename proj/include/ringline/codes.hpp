#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ringline/designs.hpp"

namespace ringline {

// Words of length n (one coordinate per point class) over symbols 0..m-1,
// where m-1 is the class size; symbol 0 stands for the class's ideal point,
// so a block misses a class exactly where its word is 0 and every word has
// Hamming weight k.
struct ConstantWeightCode {
    int n = 0;
    int m = 0;
    long long k = 0;
    std::vector<std::vector<int>> words;  // lexicographically sorted, distinct
};

// The labelling psi behind the construction: coordinate c reads the class
// class_order[c], and within class ci the point at position j (in id order)
// gets symbol point_symbols[ci][j] from 1..s.  The canonical labelling is the
// identity on both levels.
struct CodeLabelling {
    std::vector<int> class_order;
    std::vector<std::vector<int>> point_symbols;
};

CodeLabelling canonical_labelling(const Design& design);

// Requires equal class sizes and equal block sizes; one word per block.
// Distinct blocks give distinct words (checked).
ConstantWeightCode code_from_design(const Design& design);
ConstantWeightCode code_from_design(const Design& design, const CodeLabelling& psi);

int hamming_weight(const std::vector<int>& word);
int hamming_distance(const std::vector<int>& a, const std::vector<int>& b);

bool verify_constant_weight(const ConstantWeightCode& code);

// A distance-preserving relabelling: word'[c] = symbol_perms[c][word[coordinate_perm[c]]].
struct CodeIsomorphism {
    std::vector<int> coordinate_perm;             // target position -> source position
    std::vector<std::vector<int>> symbol_perms;   // per target position, symbol -> symbol
};

ConstantWeightCode apply_code_isomorphism(const ConstantWeightCode& code,
                                          const CodeIsomorphism& iso);

// Backtracking over coordinate matchings and per-coordinate symbol
// permutations with prefix pruning; guarded to n <= 6.
std::optional<CodeIsomorphism> find_code_isomorphism(const ConstantWeightCode& a,
                                                     const ConstantWeightCode& b);

// Text format: `cwc n=<n> m=<m> k=<k>` header, one word per line as
// space-separated symbols; '#' starts a comment.  Duplicate words rejected.
ConstantWeightCode read_code(std::istream& in);
ConstantWeightCode read_code_file(const std::string& path);
void write_code(std::ostream& out, const ConstantWeightCode& code);
void write_code_file(const std::string& path, const ConstantWeightCode& code);

}  // namespace ringline
