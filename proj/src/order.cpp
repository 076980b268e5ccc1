#include "ncg/order.hpp"

#include <algorithm>

namespace ncg {

/***** Alphabet and words *****/

int Alphabet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

std::int64_t Alphabet::weight(const Word& w) const {
    std::int64_t d = 0;
    for (Gen g : w) d += weights[g];
    return d;
}

Alphabet make_alphabet(std::vector<std::string> names,
                       std::vector<std::int64_t> weights) {
    if (names.empty() || names.size() != weights.size())
        throw InvalidInputError("alphabet needs matching name and weight lists");
    if (names.size() > 255)
        throw InvalidInputError("alphabet limited to 255 generators");
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (weights[i] < 1)
            throw InvalidInputError("generator weight must be positive: " + names[i]);
        for (std::size_t k = 0; k < i; ++k)
            if (names[k] == names[i])
                throw InvalidInputError("duplicate generator name: " + names[i]);
    }
    Alphabet a;
    a.names = std::move(names);
    a.weights = std::move(weights);
    return a;
}

std::vector<std::int64_t> MultiGrading::degree(const Word& w) const {
    std::vector<std::int64_t> d(rank, 0);
    for (Gen g : w)
        for (std::size_t i = 0; i < rank; ++i) d[i] += degrees[g][i];
    return d;
}

int MultiGrading::cmp(const std::vector<std::int64_t>& a,
                      const std::vector<std::int64_t>& b) {
    std::int64_t sa = 0, sb = 0;
    for (auto x : a) sa += x;
    for (auto x : b) sb += x;
    if (sa != sb) return sa < sb ? -1 : 1;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    return 0;
}

MultiGrading make_multi_grading(const Alphabet& alphabet,
                                std::vector<std::vector<std::int64_t>> degrees) {
    if (degrees.size() != alphabet.size())
        throw InvalidInputError("multidegree list must cover every generator");
    std::size_t rank = degrees.empty() ? 0 : degrees[0].size();
    if (rank == 0) throw InvalidInputError("multidegree rank must be positive");
    for (std::size_t g = 0; g < degrees.size(); ++g) {
        if (degrees[g].size() != rank)
            throw InvalidInputError("multidegree rank mismatch at generator " +
                                    alphabet.names[g]);
        std::int64_t sum = 0;
        for (auto x : degrees[g]) {
            if (x < 0)
                throw InvalidInputError("multidegree entries must be nonnegative");
            sum += x;
        }
        if (sum != alphabet.weights[g])
            throw HomogeneityError("multidegree of " + alphabet.names[g] +
                                   " must sum to its weight");
    }
    MultiGrading mg;
    mg.rank = rank;
    mg.degrees = std::move(degrees);
    return mg;
}

std::size_t find_factor(const Word& w, const Word& factor, std::size_t from) {
    if (factor.empty()) return from <= w.size() ? from : word_npos;
    if (factor.size() > w.size()) return word_npos;
    for (std::size_t i = from; i + factor.size() <= w.size(); ++i) {
        if (std::equal(factor.begin(), factor.end(), w.begin() + static_cast<long>(i)))
            return i;
    }
    return word_npos;
}

bool is_factor(const Word& w, const Word& factor) {
    return find_factor(w, factor) != word_npos;
}

std::string word_str(const Alphabet& alphabet, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t run = 1;
        while (i + run < w.size() && w[i + run] == w[i]) ++run;
        if (!out.empty()) out += "*";
        out += alphabet.names[w[i]];
        if (run > 1) out += "^" + std::to_string(run);
        i += run;
    }
    return out;
}

/***** Orders *****/

GradedLexOrder::GradedLexOrder(std::vector<std::int64_t> weights)
    : weights_(std::move(weights)) {
    for (auto w : weights_)
        if (w < 1) throw InvalidInputError("order weights must be positive");
}

std::int64_t GradedLexOrder::weight(const Word& w) const {
    std::int64_t d = 0;
    for (Gen g : w) d += weights_[g];
    return d;
}

int GradedLexOrder::cmp(const Word& a, const Word& b) const {
    std::int64_t wa = weight(a), wb = weight(b);
    if (wa != wb) return wa < wb ? -1 : 1;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
    }
    return 0; // equal weight and no differing position forces equality
}

std::string GradedLexOrder::describe() const {
    std::string s = "deglex(";
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(weights_[i]);
    }
    return s + ")";
}

OrderPtr make_graded_lex(const Alphabet& alphabet) {
    return std::make_shared<GradedLexOrder>(alphabet.weights);
}

MultiDegreeRefinedOrder::MultiDegreeRefinedOrder(MultiGrading grading, OrderPtr base)
    : grading_(std::move(grading)), base_(std::move(base)) {
    if (!base_) throw InvalidInputError("refined order needs a base order");
}

int MultiDegreeRefinedOrder::cmp(const Word& a, const Word& b) const {
    int c = MultiGrading::cmp(grading_.degree(a), grading_.degree(b));
    if (c != 0) return c;
    return base_->cmp(a, b);
}

std::string MultiDegreeRefinedOrder::describe() const {
    return "multidegree-refined(" + base_->describe() + ")";
}

OrderPtr make_multidegree_refined(MultiGrading grading, OrderPtr base) {
    return std::make_shared<MultiDegreeRefinedOrder>(std::move(grading), std::move(base));
}

} // namespace ncg
