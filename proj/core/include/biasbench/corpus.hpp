#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "biasbench/error.hpp"

namespace biasbench {

/// The closed seven-label bias taxonomy. Enumerator order is the canonical
/// taxonomy order used for tie-breaking, exemplar interleaving and rendering.
enum class BiasLabel : int {
    Unbiased = 0,
    Unclear,
    BiasedAgainstIsrael,
    BiasedAgainstPalestine,
    BiasedAgainstBoth,
    BiasedAgainstOthers,
    NotApplicable,
};

inline constexpr int kLabelCount = 7;

constexpr std::array<BiasLabel, kLabelCount> all_labels() {
    return {BiasLabel::Unbiased,
            BiasLabel::Unclear,
            BiasLabel::BiasedAgainstIsrael,
            BiasLabel::BiasedAgainstPalestine,
            BiasLabel::BiasedAgainstBoth,
            BiasLabel::BiasedAgainstOthers,
            BiasLabel::NotApplicable};
}

constexpr int label_index(BiasLabel label) { return static_cast<int>(label); }

/// Canonical display name, e.g. "Biased Against Israel".
std::string_view label_name(BiasLabel label);

/// Parses a label string: trimmed, case-insensitive, punctuation-tolerant.
/// Accepts canonical names, compact identifiers ("BiasedAgainstIsrael") and
/// the long guideline phrasings ("Biased against both Palestine and Israel").
/// Returns nullopt for anything outside the seven-member taxonomy.
std::optional<BiasLabel> parse_label(std::string_view text);

/// Like parse_label but throws Error naming the offending string.
BiasLabel parse_label_or_throw(std::string_view text);

enum class Split : int { Train = 0, Validation, Test };

std::string_view split_name(Split s);
std::optional<Split> parse_split(std::string_view text);

/// One corpus row. `text` holds the original-language content, `translation`
/// the English text used for all downstream scoring (may equal `text`).
struct Document {
    std::string id;
    std::string source;
    std::string doc_type;
    std::string text;
    std::string translation;
    std::optional<BiasLabel> human_label;
    std::map<std::string, BiasLabel> annotator_labels; // empty means absent
    std::optional<Split> split;
    bool is_augmented = false;
    nlohmann::ordered_json extra = nlohmann::ordered_json::object();

    bool operator==(const Document& other) const;
};

struct Corpus {
    std::vector<Document> documents;
    std::map<std::string, std::string> provenance;

    /// Equality over documents only; provenance is run metadata.
    bool operator==(const Corpus& other) const { return documents == other.documents; }
};

enum class CorpusFormat { Csv, Jsonl };

std::optional<CorpusFormat> parse_corpus_format(std::string_view text);

struct RowError {
    std::size_t row = 0; // 1-based data row number (excluding CSV header)
    std::string id;
    std::string message;
};

struct IngestResult {
    Corpus corpus;
    std::vector<RowError> rejected;
};

/// Loads a corpus file. Rows missing required fields, with unparseable
/// labels, duplicate ids, or translations that normalize to the empty string
/// are rejected row-by-row and reported in `rejected`. Unreadable files and
/// unknown formats throw.
IngestResult ingest(const std::filesystem::path& path, CorpusFormat format);

/// Lowercases, removes URL tokens (scheme:// or www.-prefixed) and all
/// non-ASCII codepoints, collapses whitespace runs and trims. Stop words and
/// inflections are retained. Total and idempotent.
std::string normalize(std::string_view text);

/// Returns a copy of the corpus with `text` and `translation` normalized.
Corpus normalize_documents(const Corpus& corpus);

struct SplitFractions {
    double train = 0.7;
    double validation = 0.1;
    double test = 0.2;
};

/// Assigns split tags via a seeded deterministic shuffle. Validation and test
/// counts are floor(n * fraction); remainder documents go to train. With
/// stratify=true the same rule is applied per human_label stratum.
Corpus split_corpus(const Corpus& corpus, const SplitFractions& fractions, std::uint64_t seed,
                    bool stratify = false);

nlohmann::ordered_json document_to_json(const Document& doc);
Document document_from_json(const nlohmann::ordered_json& j);

/// Canonical corpus format: JSON-lines, one document per line, UTF-8,
/// stable field order. save/load round-trips byte-identically.
void save_jsonl(const Corpus& corpus, const std::filesystem::path& path);
Corpus load_jsonl(const std::filesystem::path& path);

} // namespace biasbench
