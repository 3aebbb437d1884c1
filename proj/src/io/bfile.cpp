#include "seqexp/io/bfile.hpp"

#include <charconv>
#include <optional>

#include "seqexp/error.hpp"

namespace seqexp::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
    while (!s.empty() && space(s.front())) s.remove_prefix(1);
    while (!s.empty() && space(s.back())) s.remove_suffix(1);
    return s;
}

[[noreturn]] void malformed(std::size_t lineno, const std::string& why) {
    throw Error(ErrorCode::MalformedLine, "line " + std::to_string(lineno) + ": " + why);
}

}  // namespace

seqgen::Sequence parse_bfile(std::string_view text) {
    seqgen::Sequence out;
    std::optional<long> next;
    std::size_t lineno = 0;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineno;
        if (line.empty() || line.front() == '#') continue;

        const auto sep = line.find_first_of(" \t");
        if (sep == std::string_view::npos) malformed(lineno, "expected 'index value'");
        const std::string_view idx_text = line.substr(0, sep);
        const std::string_view val_text = trim(line.substr(sep));
        long idx = 0;
        const auto [ptr, ec] = std::from_chars(idx_text.data(), idx_text.data() + idx_text.size(), idx);
        if (ec != std::errc() || ptr != idx_text.data() + idx_text.size()) malformed(lineno, "bad index");
        if (val_text.find_first_of(" \t") != std::string_view::npos) malformed(lineno, "trailing fields");
        exact::BigInt value;
        try {
            value = exact::parse_bigint(val_text);
        } catch (const Error&) {
            malformed(lineno, "bad value");
        }
        if (!next) {
            out.offset = idx;
        } else if (idx != *next) {
            throw Error(ErrorCode::NonContiguousIndex,
                        "line " + std::to_string(lineno) + ": expected index " + std::to_string(*next) + ", got " + std::to_string(idx));
        }
        next = idx + 1;
        out.terms.push_back(std::move(value));
    }
    return out;
}

std::string render_bfile(const seqgen::Sequence& s) {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += std::to_string(s.offset + static_cast<long>(i));
        out += ' ';
        out += exact::to_string(s.terms[i]);
        out += '\n';
    }
    return out;
}

}  // namespace seqexp::io
