#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lifter/suggest.hpp"

namespace lifter {

// Loads every .lifter file of a directory in filename order; ids are the
// file stems. Fails fast on the first unparseable assertion.
std::vector<NamedAssertion> load_assertion_dir(const std::string& dir);

struct CorpusRecord {
  std::string id;
  std::string goal_file;     // relative paths resolve against the corpus dir
  std::string context_file;
  std::string induct;
  std::optional<bool> label;
};

// JSON-lines corpus; blank lines are skipped. Malformed lines or missing
// required fields are corpus errors and throw.
std::vector<CorpusRecord> load_corpus(const std::string& path);

struct FeatureRow {
  std::string id;
  std::optional<bool> label;
  std::vector<bool> features;  // empty on error rows
  std::string error;           // empty on success rows
};

struct FeatureMatrix {
  std::vector<std::string> assertion_ids;
  std::vector<FeatureRow> rows;

  std::size_t error_count() const;
};

// One row per record in corpus order. Per-record failures (missing files,
// parse errors, bad invocations) become error rows and never abort the batch.
FeatureMatrix batch_evaluate(std::span<const CorpusRecord> corpus,
                             std::span<const NamedAssertion> suite,
                             const std::string& base_dir);

// CSV with header id,label,<assertion ids...>,error; booleans as 1/0, absent
// labels empty.
std::string to_csv(const FeatureMatrix& matrix);

}  // namespace lifter
