#include "seqexp/seqgen/sequence.hpp"

#include <algorithm>
#include <cctype>

namespace seqexp::seqgen {

RatSequence to_rational(const Sequence& s) {
    RatSequence out{s.offset, {}};
    out.terms.reserve(s.size());
    for (const auto& t : s.terms) out.terms.emplace_back(t);
    return out;
}

Sequence to_integer(const RatSequence& s) {
    Sequence out{s.offset, {}};
    out.terms.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s.terms[i].get_den() != 1) {
            throw Error(ErrorCode::NonIntegral,
                        "term at index " + std::to_string(s.offset + static_cast<long>(i)) + " is " + s.terms[i].get_str());
        }
        out.terms.push_back(s.terms[i].get_num());
    }
    return out;
}

Sequence make_sequence(long offset, std::initializer_list<long> terms) {
    Sequence s{offset, {}};
    for (long t : terms) s.terms.emplace_back(t);
    return s;
}

Pattern Pattern::parse(const std::string& text) {
    Pattern p;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            throw Error(ErrorCode::InvalidArgument, "pattern must be a digit word, got '" + text + "'");
        }
        p.letters.push_back(c - '0');
    }
    if (p.letters.empty()) throw Error(ErrorCode::InvalidArgument, "empty pattern");
    // letters must be order-normalized: the distinct values are exactly 0..k-1
    std::vector<int> distinct = p.letters;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (std::size_t i = 0; i < distinct.size(); ++i) {
        if (distinct[i] != static_cast<int>(i)) {
            throw Error(ErrorCode::InvalidArgument, "pattern '" + text + "' is not order-normalized");
        }
    }
    return p;
}

std::string Pattern::to_string() const {
    std::string s;
    for (int l : letters) s += static_cast<char>('0' + l);
    return s;
}

}  // namespace seqexp::seqgen
