#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "seqexp/asympt/hpreal.hpp"
#include "seqexp/identify/identify.hpp"
#include "seqexp/seqgen/sequence.hpp"

namespace seqexp::io {

using Json = nlohmann::ordered_json;

/// Hex SHA-256 of the bytes.
std::string sha256_hex(const std::string& data);

/// One JSON document per CLI run. Everything except "timestamps" feeds the
/// "digest" field, so identical runs produce identical digests.
class AnalysisReport {
public:
    explicit AnalysisReport(std::vector<std::string> command);

    /// Records the SHA-256 of the raw input under "input".
    void set_input(const std::string& description, const std::string& bytes);
    Json& parameters() { return doc_["parameters"]; }

    void add_scalar(const std::string& name, const asympt::HpReal& value, int digits = 0);
    void add_scalar(const std::string& name, const asympt::HpReal& value, const asympt::HpReal& spread, int digits = 0);
    void add_text(const std::string& name, const std::string& value);
    void add_sequence(const std::string& name, const seqgen::Sequence& s);
    void add_sequence(const std::string& name, const seqgen::RatSequence& s);
    void add_sequence(const std::string& name, const asympt::HpSeq& s, int digits = 0);
    void add_identification(const std::string& name, const identify::Identification& id);
    void add_note(const std::string& text);
    /// Free-form structured result, e.g. recurrence coefficients.
    void add_structure(const std::string& name, Json value);
    /// Side file written next to the report, recorded by name and SHA-256.
    void add_file(const std::string& key, const std::string& name, const std::string& contents);
    const Json& document() const { return doc_; }

    /// Digest over the deterministic part of the document.
    std::string digest() const;
    /// Full document, stamped with the finish time.
    Json finish();
    std::string to_string();

private:
    Json doc_;
    std::string started_;
};

std::string utc_timestamp();

}  // namespace seqexp::io
