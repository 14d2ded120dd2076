#ifndef TAMARACK_REPORT_HPP
#define TAMARACK_REPORT_HPP

#include <string>
#include <vector>

#include "tamarack/homology.hpp"

namespace tamarack {

// ordered result tree; text and JSON renderings share the same numerics
struct ReportNode {
  std::string key;
  std::string value;               // leaf payload
  std::vector<ReportNode> children;

  ReportNode() = default;
  ReportNode(std::string k, std::string v) : key(std::move(k)), value(std::move(v)) {}
  explicit ReportNode(std::string k) : key(std::move(k)) {}
  ReportNode &add(std::string k, std::string v) {
    children.emplace_back(std::move(k), std::move(v));
    return children.back();
  }
  ReportNode &add(ReportNode n) {
    children.push_back(std::move(n));
    return children.back();
  }
};

struct ReportDocument {
  std::string title;
  ReportNode root;
  std::string render_text() const;
  std::string render_json() const;
};
ReportDocument report_from_json(const std::string &text);

// --- verification cases (golden fixtures) ---

struct VerifyOutcome {
  std::string name;
  bool pass = false;
  std::string diff; // first divergence, empty when passing
  ReportDocument report;
};

std::vector<std::string> verification_case_names();
VerifyOutcome run_verification(const std::string &name);

// --- command implementations shared by the CLI ---

ReportDocument tor_report(const Tower &t, int gen_level, int max_degree);
ReportDocument lewis_report(const std::string &name, const Tower &t);
ReportDocument resolution_report(const Tower &t, int gen_level,
                                 bool check_exactness, long long cutoff);

} // namespace tamarack

#endif
