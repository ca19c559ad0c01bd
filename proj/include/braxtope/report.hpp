#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braxtope/vertex_set.hpp"

namespace braxtope {

enum class Verdict { pass, fail, report_only };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::report_only: return "report-only";
  }
  return "?";
}

struct Witness {
  std::string what;
  std::vector<VertexSet> sets;
};

/// Outcome of one machine check. A fail verdict always carries a witness.
struct CheckReport {
  std::string name;
  int d = 0;
  int n = 0;
  std::optional<int> r;
  Verdict verdict = Verdict::pass;
  std::vector<Witness> witnesses;
  std::vector<std::string> notes;

  bool ok() const { return verdict != Verdict::fail; }

  void fail(std::string what, std::vector<VertexSet> sets = {}) {
    verdict = Verdict::fail;
    witnesses.push_back({std::move(what), std::move(sets)});
  }
  void note(std::string text) { notes.push_back(std::move(text)); }
};

}  // namespace braxtope
