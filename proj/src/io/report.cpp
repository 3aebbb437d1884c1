#include "seqexp/io/report.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdio>
#include <ctime>

#include "seqexp/error.hpp"

namespace seqexp::io {

std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) {
        throw Error(ErrorCode::IoError, "SHA-256 failed");
    }
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

std::string utc_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

AnalysisReport::AnalysisReport(std::vector<std::string> command) : started_(utc_timestamp()) {
    doc_["command"] = command;
    doc_["input"] = nullptr;
    doc_["parameters"] = Json::object();
    doc_["scalars"] = Json::object();
    doc_["sequences"] = Json::object();
    doc_["identifications"] = Json::object();
    doc_["structures"] = Json::object();
    doc_["files"] = Json::object();
    doc_["notes"] = Json::array();
}

void AnalysisReport::set_input(const std::string& description, const std::string& bytes) {
    doc_["input"] = {{"description", description}, {"sha256", sha256_hex(bytes)}, {"bytes", bytes.size()}};
}

void AnalysisReport::add_scalar(const std::string& name, const asympt::HpReal& value, int digits) {
    doc_["scalars"][name] = {{"value", value.to_string(digits)}};
}

void AnalysisReport::add_scalar(const std::string& name, const asympt::HpReal& value, const asympt::HpReal& spread,
                                int digits) {
    doc_["scalars"][name] = {{"value", value.to_string(digits)}, {"spread", spread.to_string(6)}};
}

void AnalysisReport::add_text(const std::string& name, const std::string& value) {
    doc_["scalars"][name] = {{"value", value}};
}

void AnalysisReport::add_sequence(const std::string& name, const seqgen::Sequence& s) {
    Json values = Json::array();
    for (const auto& t : s.terms) values.push_back(exact::to_string(t));
    doc_["sequences"][name] = {{"offset", s.offset}, {"values", values}};
}

void AnalysisReport::add_sequence(const std::string& name, const seqgen::RatSequence& s) {
    Json values = Json::array();
    for (const auto& t : s.terms) values.push_back(exact::to_string(t));
    doc_["sequences"][name] = {{"offset", s.offset}, {"values", values}};
}

void AnalysisReport::add_sequence(const std::string& name, const asympt::HpSeq& s, int digits) {
    Json values = Json::array();
    for (const auto& v : s.values) values.push_back(v.to_string(digits));
    doc_["sequences"][name] = {{"offset", s.offset}, {"values", values}};
}

void AnalysisReport::add_identification(const std::string& name, const identify::Identification& id) {
    Json j = {{"kind", identify::to_string(id.kind)}, {"certified_digits", id.certified_digits}, {"form", id.describe()}};
    if (id.kind == identify::IdentKind::Algebraic) {
        Json coeffs = Json::array();
        for (const auto& c : id.poly.coeffs()) coeffs.push_back(exact::to_string(c));
        j["coefficients"] = coeffs;
    } else {
        j["multiplier"] = id.tag;
        j["fraction"] = exact::to_string(id.fraction);
    }
    doc_["identifications"][name] = j;
}

void AnalysisReport::add_note(const std::string& text) { doc_["notes"].push_back(text); }

void AnalysisReport::add_structure(const std::string& name, Json value) { doc_["structures"][name] = std::move(value); }

void AnalysisReport::add_file(const std::string& key, const std::string& name, const std::string& contents) {
    doc_["files"][key] = {{"name", name}, {"sha256", sha256_hex(contents)}, {"bytes", contents.size()}};
}

std::string AnalysisReport::digest() const { return sha256_hex(doc_.dump()); }

Json AnalysisReport::finish() {
    Json out = doc_;
    out["digest"] = digest();
    out["timestamps"] = {{"started", started_}, {"finished", utc_timestamp()}};
    return out;
}

std::string AnalysisReport::to_string() { return finish().dump(2) + "\n"; }

}  // namespace seqexp::io
