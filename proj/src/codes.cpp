#include "enriques7/codes.hpp"

#include "enriques7/errors.hpp"

#include <algorithm>
#include <bit>

namespace enr7 {

namespace {

constexpr int kMaxLength = 16; // keeps the codeword list at most 2^16 entries

void check_length(int length) {
    if (length < 1 || length > kMaxLength)
        throw DegenerateInput("code length must be between 1 and 16");
}

Word all_ones(int length) {
    return (Word(1) << length) - 1;
}

} // namespace

int word_weight(Word w) {
    return std::popcount(w);
}

Word word_from_indices(const std::vector<int>& indices, int length) {
    check_length(length);
    Word w = 0;
    for (int i : indices) {
        if (i < 1 || i > length)
            throw DegenerateInput("codeword index out of range");
        w |= Word(1) << (i - 1);
    }
    return w;
}

Word word_from_string(const std::string& s) {
    check_length(int(s.size()));
    Word w = 0;
    for (size_t k = 0; k < s.size(); ++k) {
        if (s[k] == '1')
            w |= Word(1) << k;
        else if (s[k] != '0')
            throw DegenerateInput("codeword string must be over {0,1}");
    }
    return w;
}

std::string word_string(Word w, int length) {
    std::string s(size_t(length), '0');
    for (int k = 0; k < length; ++k)
        if (w & (Word(1) << k)) s[size_t(k)] = '1';
    return s;
}

std::vector<int> word_support(Word w) {
    std::vector<int> out;
    for (int k = 0; w >> k; ++k)
        if (w & (Word(1) << k)) out.push_back(k + 1);
    return out;
}

BinaryCode BinaryCode::from_generators(int length, const std::vector<Word>& gens) {
    check_length(length);
    BinaryCode c;
    c.length = length;
    c.generators = gens;
    for (Word g : gens)
        if (g >> length)
            throw DegenerateInput("generator exceeds code length");
    // reduced row echelon over GF(2)
    std::vector<Word> rows = gens;
    size_t r = 0;
    for (int col = 0; col < length && r < rows.size(); ++col) {
        size_t pivot = r;
        while (pivot < rows.size() && !(rows[pivot] & (Word(1) << col)))
            ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[r], rows[pivot]);
        for (size_t i = 0; i < rows.size(); ++i)
            if (i != r && (rows[i] & (Word(1) << col)))
                rows[i] ^= rows[r];
        ++r;
    }
    rows.resize(r);
    c.basis = rows;
    c.dim = int(r);
    c.words.reserve(size_t(1) << r);
    for (Word mask = 0; mask < (Word(1) << r); ++mask) {
        Word w = 0;
        for (size_t i = 0; i < r; ++i)
            if (mask & (Word(1) << i)) w ^= rows[i];
        c.words.push_back(w);
    }
    std::sort(c.words.begin(), c.words.end());
    for (Word w : c.words)
        ++c.weight_enumerator[word_weight(w)];
    return c;
}

BinaryCode BinaryCode::from_strings(int length, const std::vector<std::string>& gens) {
    std::vector<Word> ws;
    for (const auto& s : gens) {
        if (int(s.size()) != length)
            throw DegenerateInput("generator string length mismatch");
        ws.push_back(word_from_string(s));
    }
    return from_generators(length, ws);
}

bool BinaryCode::contains(Word w) const {
    return std::binary_search(words.begin(), words.end(), w);
}

BinaryCode span_code(const std::vector<EvenSetRelation>& relations, int length) {
    std::vector<Word> gens;
    for (const auto& r : relations)
        gens.push_back(word_from_indices(r.indices, length));
    return BinaryCode::from_generators(length, gens);
}

Recognition recognize(const BinaryCode& c) {
    Recognition r;
    r.contains_all_ones = c.contains(all_ones(c.length));
    r.self_orthogonal = true;
    for (Word a : c.basis)
        for (Word b : c.basis)
            if (word_weight(a & b) % 2)
                r.self_orthogonal = false;
    // columns of the basis matrix as vectors in GF(2)^dim
    std::vector<Word> cols;
    for (int p = 0; p < c.length; ++p) {
        Word col = 0;
        for (size_t i = 0; i < c.basis.size(); ++i)
            if (c.basis[i] & (Word(1) << p)) col |= Word(1) << i;
        cols.push_back(col);
    }
    std::vector<Word> sorted_cols = cols;
    std::sort(sorted_cols.begin(), sorted_cols.end());
    r.columns_distinct_nonzero =
        !sorted_cols.empty() && sorted_cols.front() != 0 &&
        std::adjacent_find(sorted_cols.begin(), sorted_cols.end()) == sorted_cols.end();
    Word used = 0;
    for (Word w : c.words) used |= w;
    for (int p = 1; p <= c.length; ++p)
        if (!(used & (Word(1) << (p - 1)))) r.absent_positions.push_back(p);

    bool nonzero_all4 = true;
    bool weights048 = true;
    for (const auto& [w, n] : c.weight_enumerator) {
        (void)n;
        if (w != 0 && w != 4) nonzero_all4 = false;
        if (w != 0 && w != 4 && w != 8) weights048 = false;
    }
    if (c.length == 8 && c.dim == 4 && weights048 && r.contains_all_ones) {
        r.cls = CodeClass::ExtendedHamming;
        r.name = "extended-Hamming[8,4]";
    } else if (c.length == 7 && c.dim == 3 && nonzero_all4) {
        r.cls = CodeClass::Simplex;
        r.name = "simplex[7,3]";
    } else if (c.length == 7 && c.dim == 2 && nonzero_all4) {
        r.cls = CodeClass::WeightFourPlane;
        r.name = "weight-4-dim-2[7]";
    } else {
        r.cls = CodeClass::Other;
        r.name = "other";
    }
    return r;
}

bool weight_divisibility(const BinaryCode& c, int m) {
    if (m <= 0)
        throw DegenerateInput("weight divisor must be positive");
    for (const auto& [w, n] : c.weight_enumerator) {
        (void)n;
        if (w % m) return false;
    }
    return true;
}

CollinearityReport collinearity_code_consistency(const std::vector<PPoint>& images,
                                                 const BinaryCode& code) {
    if (images.size() != 7 || code.length != 7)
        throw DegenerateInput("collinearity check needs 7 points and a length-7 code");
    for (size_t i = 0; i < images.size(); ++i)
        for (size_t j = i + 1; j < images.size(); ++j)
            if (ppoint_same(images[i], images[j]))
                throw DegenerateInput("node images are not distinct");

    CollinearityReport rep;
    for (Word w : code.words)
        if (word_weight(w) == 4) {
            auto sup = word_support(Word(all_ones(7) & ~w));
            rep.predicted.push_back({sup[0], sup[1], sup[2]});
        }
    std::sort(rep.predicted.begin(), rep.predicted.end());

    bool have_other = false;
    for (int i = 1; i <= 7; ++i)
        for (int j = i + 1; j <= 7; ++j)
            for (int k = j + 1; k <= 7; ++k) {
                const PPoint& a = images[size_t(i - 1)];
                const PPoint& b = images[size_t(j - 1)];
                const PPoint& c = images[size_t(k - 1)];
                double sv = collinear_sv_ratio(a, b, c);
                if (collinear_exact(a, b, c)) {
                    rep.found.push_back({i, j, k});
                    rep.max_collinear_sv = std::max(rep.max_collinear_sv, sv);
                } else if (!have_other || sv < rep.min_other_sv) {
                    rep.min_other_sv = sv;
                    have_other = true;
                }
            }
    std::sort(rep.found.begin(), rep.found.end());
    std::set_difference(rep.found.begin(), rep.found.end(), rep.predicted.begin(),
                        rep.predicted.end(), std::back_inserter(rep.unpredicted));
    std::set_difference(rep.predicted.begin(), rep.predicted.end(), rep.found.begin(),
                        rep.found.end(), std::back_inserter(rep.missing));
    rep.consistent = rep.unpredicted.empty() && rep.missing.empty();
    return rep;
}

bool fano_configuration_test(const std::vector<PPoint>& points) {
    if (points.size() != 7)
        return false;
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (ppoint_same(points[i], points[j]))
                return false;
    std::vector<std::array<int, 3>> lines;
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            for (int k = j + 1; k < 7; ++k)
                if (collinear_exact(points[size_t(i)], points[size_t(j)], points[size_t(k)]))
                    lines.push_back({i, j, k});
    if (lines.size() != 7)
        return false;
    // every pair of points on exactly one line
    std::array<std::array<int, 7>, 7> pair_count{};
    for (const auto& L : lines) {
        ++pair_count[size_t(L[0])][size_t(L[1])];
        ++pair_count[size_t(L[0])][size_t(L[2])];
        ++pair_count[size_t(L[1])][size_t(L[2])];
    }
    for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
            if (pair_count[size_t(i)][size_t(j)] != 1)
                return false;
    return true;
}

} // namespace enr7
