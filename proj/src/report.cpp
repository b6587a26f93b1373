#include "upsilon/report.hpp"

#include <sstream>

namespace upsilon {

namespace {

nlohmann::json point_json(const Point& x) { return nlohmann::json(x.coords()); }

}  // namespace

nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json j;
  j["is_tiling"] = r.is_tiling;
  j["cells_total"] = r.cells_total;
  j["codewords"] = r.codewords;
  j["shape_size"] = r.shape_size;
  j["multiply_covered"] = r.multiply_covered;
  j["uncovered"] = r.uncovered;
  if (r.first_witness) {
    nlohmann::json w;
    w["cell"] = point_json(r.first_witness->cell);
    w["covering"] = nlohmann::json::array();
    for (const auto& x : r.first_witness->covering) w["covering"].push_back(point_json(x));
    j["first_witness"] = w;
  } else {
    j["first_witness"] = nullptr;
  }
  j["min_cross_distance"] = r.min_cross_distance ? nlohmann::json(*r.min_cross_distance) : nlohmann::json(nullptr);
  return j;
}

nlohmann::json to_json(const AuditReport& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["f1"] = nlohmann::json::array();
  for (auto [a, b] : r.f1) j["f1"].push_back({a, b});
  j["f2"] = nlohmann::json::array();
  for (const auto& b : r.f2) j["f2"].push_back(b);
  j["spencer_bound"] = r.spencer_bound;
  j["spencer_applies"] = r.spencer_applies;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : r.checks) j["checks"].push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  j["passed"] = r.passed();
  return j;
}

nlohmann::json to_json(const NonexistenceCertificate& c) {
  return {{"n", c.n},
          {"forced_period", c.forced_period},
          {"shape_size", c.shape_size},
          {"window_size", c.window_size},
          {"divides", c.divides},
          {"conclusion", c.conclusion}};
}

nlohmann::json to_json(const SearchResult& r) {
  nlohmann::json j;
  j["status"] = to_string(r.status);
  j["solutions"] = r.solutions.size();
  j["nodes"] = r.nodes;
  j["backtracks"] = r.backtracks;
  j["elapsed_ms"] = r.elapsed_ms;
  if (r.certificate) j["certificate"] = to_json(*r.certificate);
  return j;
}

std::string to_text(const VerificationReport& r) {
  std::ostringstream os;
  os << "is_tiling: " << (r.is_tiling ? "true" : "false") << "\n"
     << "cells_total: " << r.cells_total << "\n"
     << "codewords: " << r.codewords << "\n"
     << "shape_size: " << r.shape_size << "\n"
     << "multiply_covered: " << r.multiply_covered << "\n"
     << "uncovered: " << r.uncovered << "\n";
  if (r.first_witness) {
    os << "first_witness_cell: " << r.first_witness->cell.to_string() << "\n";
    os << "first_witness_covering:";
    if (r.first_witness->covering.empty()) os << " none";
    for (const auto& x : r.first_witness->covering) os << ' ' << x.to_string();
    os << "\n";
  }
  if (r.min_cross_distance) os << "min_cross_distance: " << *r.min_cross_distance << "\n";
  return os.str();
}

std::string to_text(const AuditReport& r) {
  std::ostringstream os;
  os << "audit_n: " << r.n << "\n"
     << "audit_p: " << r.p << "\n"
     << "f1:";
  if (r.f1.empty()) os << " none";
  for (auto [a, b] : r.f1) os << " 3e" << a << "+2e" << b;
  os << "\n"
     << "f2_size: " << r.f2.size() << "\n"
     << "spencer_bound: " << r.spencer_bound << "\n";
  for (const auto& c : r.checks) os << "check " << c.name << ": " << (c.passed ? "pass" : "FAIL") << " (" << c.detail << ")\n";
  os << "audit_passed: " << (r.passed() ? "true" : "false") << "\n";
  return os.str();
}

std::string to_text(const NonexistenceCertificate& c) {
  std::ostringstream os;
  os << "n: " << c.n << "\n"
     << "forced_period: " << c.forced_period << "\n"
     << "shape_size: " << c.shape_size << "\n"
     << "window_size: " << c.window_size << "\n"
     << "divides: " << (c.divides ? "true" : "false") << "\n"
     << "conclusion: " << c.conclusion << "\n";
  return os.str();
}

std::string to_text(const SearchResult& r) {
  std::ostringstream os;
  os << "status: " << to_string(r.status) << "\n"
     << "solutions: " << r.solutions.size() << "\n"
     << "nodes: " << r.nodes << "\n"
     << "backtracks: " << r.backtracks << "\n";
  if (r.certificate) os << "certificate: " << r.certificate->conclusion << "\n";
  return os.str();
}

}  // namespace upsilon
