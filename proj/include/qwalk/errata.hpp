#pragma once

#include <functional>
#include <string>
#include <vector>

namespace qwalk {

/// Outcome of a check that compares a printed formula with the value the
/// direct evolution (or an exact identity) requires.
struct DivergenceCheck {
  double printed = 0.0;
  double resolved = 0.0;
  bool reproduced = false;  // printed value differs as documented and resolved matches
  std::string detail;
};

struct ErratumRecord {
  std::string id;
  std::string location;
  std::string printed_form;
  std::string resolved_form;
  std::string check_id;
};

/// Named checks that demonstrate each documented divergence.
const std::vector<std::string>& divergence_check_ids();
DivergenceCheck run_divergence_check(const std::string& check_id);
bool has_divergence_check(const std::string& check_id);

/// Parse the structured errata file (JSON array of records).
std::vector<ErratumRecord> load_errata(const std::string& path);
std::vector<ErratumRecord> parse_errata(const std::string& json_text);

/// Markdown rendering. Throws std::runtime_error if a record names a check
/// that does not exist or does not reproduce.
std::string emit_errata(const std::vector<ErratumRecord>& records);

}  // namespace qwalk
