#pragma once

#include "enriques7/p3.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace enr7 {

// A codeword over GF(2); bit p corresponds to 1-based position p+1.
using Word = std::uint32_t;

int word_weight(Word w);
Word word_from_indices(const std::vector<int>& indices, int length);
Word word_from_string(const std::string& s);
std::string word_string(Word w, int length);
std::vector<int> word_support(Word w);

struct EvenSetRelation {
    std::vector<int> indices; // 1-based
    std::string provenance;
};

struct BinaryCode {
    int length = 0;
    std::vector<Word> generators; // as given
    std::vector<Word> basis;      // reduced row-echelon form
    int dim = 0;
    std::vector<Word> words;      // all 2^dim codewords, ascending
    std::map<int, int> weight_enumerator;

    static BinaryCode from_generators(int length, const std::vector<Word>& gens);
    static BinaryCode from_strings(int length, const std::vector<std::string>& gens);
    bool contains(Word w) const;
};

BinaryCode span_code(const std::vector<EvenSetRelation>& relations, int length);

enum class CodeClass { ExtendedHamming, Simplex, WeightFourPlane, Other };

struct Recognition {
    CodeClass cls = CodeClass::Other;
    std::string name;
    bool contains_all_ones = false;
    bool self_orthogonal = false;
    bool columns_distinct_nonzero = false;
    std::vector<int> absent_positions; // 1-based positions outside every support
};

Recognition recognize(const BinaryCode& c);

bool weight_divisibility(const BinaryCode& c, int m);

struct CollinearityReport {
    std::vector<std::array<int, 3>> predicted; // complements of weight-4 words
    std::vector<std::array<int, 3>> found;     // exactly collinear triples
    std::vector<std::array<int, 3>> unpredicted;
    std::vector<std::array<int, 3>> missing;
    double max_collinear_sv = 0.0;    // numeric residual over found triples
    double min_other_sv = 0.0;        // numeric margin over the remaining triples
    bool consistent = false;
};

CollinearityReport collinearity_code_consistency(const std::vector<PPoint>& images,
                                                 const BinaryCode& code);

bool fano_configuration_test(const std::vector<PPoint>& points);

} // namespace enr7
