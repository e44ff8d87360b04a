#include "lifter/batch.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <map>
#include <sstream>

#include "lifter/assertion_parser.hpp"
#include "lifter/goal_format.hpp"

namespace lifter {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<NamedAssertion> load_assertion_dir(const std::string& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error("not a directory: " + dir);
  }
  std::vector<fs::path> paths;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".lifter") {
      paths.push_back(entry.path());
    }
  }
  std::sort(paths.begin(), paths.end(),
            [](const fs::path& a, const fs::path& b) {
              return a.filename().string() < b.filename().string();
            });
  std::vector<NamedAssertion> out;
  for (const auto& path : paths) {
    out.push_back({path.stem().string(), load_assertion_file(path.string())});
  }
  return out;
}

std::vector<CorpusRecord> load_corpus(const std::string& path) {
  std::string text = read_text_file(path);
  std::vector<CorpusRecord> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json doc;
    try {
      doc = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(std::string("invalid corpus record: ") + e.what(),
                       {line_no, 1}, path);
    }
    auto str_field = [&](const char* name) {
      if (!doc.contains(name) || !doc[name].is_string()) {
        throw ParseError("corpus record needs a string field '" +
                             std::string(name) + "'",
                         {line_no, 1}, path);
      }
      return doc[name].get<std::string>();
    };
    CorpusRecord record;
    record.id = str_field("id");
    record.goal_file = str_field("goal_file");
    record.context_file = str_field("context_file");
    record.induct = str_field("induct");
    if (doc.contains("label")) {
      if (!doc["label"].is_boolean()) {
        throw ParseError("corpus field 'label' must be a boolean",
                         {line_no, 1}, path);
      }
      record.label = doc["label"].get<bool>();
    }
    out.push_back(std::move(record));
  }
  return out;
}

std::size_t FeatureMatrix::error_count() const {
  std::size_t count = 0;
  for (const auto& row : rows) {
    if (!row.error.empty()) ++count;
  }
  return count;
}

namespace {

std::string resolve_path(const std::string& base_dir, const std::string& ref) {
  fs::path p(ref);
  if (p.is_absolute() || base_dir.empty()) return ref;
  return (fs::path(base_dir) / p).string();
}

}  // namespace

FeatureMatrix batch_evaluate(std::span<const CorpusRecord> corpus,
                             std::span<const NamedAssertion> suite,
                             const std::string& base_dir) {
  FeatureMatrix matrix;
  for (const auto& named : suite) matrix.assertion_ids.push_back(named.id);

  // Contexts are shared between records; cache both successes and failures
  // keyed by the reference as written.
  std::map<std::string, ProofContext> ctx_cache;
  std::map<std::string, std::string> ctx_errors;

  for (const auto& record : corpus) {
    FeatureRow row;
    row.id = record.id;
    row.label = record.label;
    try {
      const ProofContext* ctx = nullptr;
      if (auto it = ctx_cache.find(record.context_file);
          it != ctx_cache.end()) {
        ctx = &it->second;
      } else if (auto err = ctx_errors.find(record.context_file);
                 err != ctx_errors.end()) {
        throw Error(err->second);
      } else {
        try {
          auto loaded = ProofContext::load_file(
              resolve_path(base_dir, record.context_file));
          ctx = &ctx_cache.emplace(record.context_file, std::move(loaded))
                     .first->second;
        } catch (const Error& e) {
          ctx_errors.emplace(record.context_file, e.what());
          throw;
        }
      }
      Goal goal = load_goal_file(resolve_path(base_dir, record.goal_file),
                                 ctx->constant_types());
      InductArgs args = parse_induct(record.induct, ctx->constant_types(),
                                     goal.frees, record.id);
      for (const auto& named : suite) {
        row.features.push_back(evaluate(*named.assertion, goal, *ctx, args));
      }
    } catch (const Error& e) {
      row.features.clear();
      row.error = e.what();
    }
    matrix.rows.push_back(std::move(row));
  }
  return matrix;
}

namespace {

std::string csv_cell(const std::string& value) {
  if (value.find_first_of(",\"\n\r") == std::string::npos) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += "\"\"";
    else out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const FeatureMatrix& matrix) {
  std::string out = "id,label";
  for (const auto& id : matrix.assertion_ids) out += "," + csv_cell(id);
  out += ",error\n";
  for (const auto& row : matrix.rows) {
    out += csv_cell(row.id);
    out += ",";
    if (row.label) out += *row.label ? "1" : "0";
    if (row.error.empty()) {
      for (bool value : row.features) out += value ? ",1" : ",0";
      out += ",";
    } else {
      for (std::size_t i = 0; i < matrix.assertion_ids.size(); ++i) out += ",";
      out += "," + csv_cell(row.error);
    }
    out += "\n";
  }
  return out;
}

}  // namespace lifter
