#pragma once

#include <string>
#include <vector>

#include "rigiditykit/json_io.hpp"

namespace rigiditykit {

/// Entry of a regression file:
///   {"name": ..., "kind": "ms|gms|shadow|rigidity|trinomial|semirigid",
///    "comment": ..., "input": {...}, "expected": {...}}
/// `expected` is matched against the computed document: every key it lists
/// must be present with an equal value, arrays compare element by element.
/// A computation that throws produces {"error": "<CodeName>"}.
struct CorpusMismatch {
  std::string entry;
  std::string path;  // JSON pointer into the computed document
  Json expected;
  Json actual;
};

struct CorpusReport {
  std::vector<std::string> files;
  std::size_t entries = 0;
  std::size_t passed = 0;
  std::vector<CorpusMismatch> mismatches;
  std::vector<std::string> warnings;

  bool ok() const noexcept { return mismatches.empty(); }
};

/// Computed document for one entry's kind and input. Throws SchemaError on
/// an unknown kind or malformed input.
Json evaluate_corpus_input(const std::string& kind, const Json& input);

/// Runs every entry of `corpus`, an array of entries read from `origin`.
CorpusReport run_corpus_entries(const Json& corpus, const std::string& origin = "<memory>");

/// `path` is a corpus file or a directory whose *.json files run in name
/// order. Throws IoError and SchemaError.
CorpusReport run_regression_corpus(const std::string& path);

Json to_json(const CorpusReport& report);

}  // namespace rigiditykit
