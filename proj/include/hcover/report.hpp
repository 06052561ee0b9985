#pragma once

// Verification suites over one curve specification, collected into a versioned report.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hcover/curve.hpp"
#include "json.hpp"

namespace hcover::report {

inline constexpr int kSchemaVersion = 1;

enum class Suite { singularities, genus, prank, aut, exactseq, galois, frobenius, points, arc, weierstrass };

const std::vector<Suite>& all_suites();
std::string suite_name(Suite s);
/// Throws PreconditionError on an unknown name.
Suite parse_suite(const std::string& name);
/// Comma-separated names, or "all".
std::set<Suite> parse_suite_list(const std::string& list);
/// Adds the suites the selection depends on (exactseq and galois need aut).
std::set<Suite> close_dependencies(std::set<Suite> suites);

enum class Status { pass, fail, skipped };
std::string status_name(Status s);

struct Check {
  std::string id;
  std::string suite;
  std::string claim;
  std::string paper_anchor;
  Status status = Status::skipped;
  nlohmann::json data = nlohmann::json::object();
};

struct Options {
  std::uint32_t precision = 0;  // series precision for weierstrass; 0 picks the default
  std::size_t weierstrass_samples = 10;
  std::size_t fiber_lines = 8;
};

struct Report {
  curve::CurveFamilyParams params;
  std::vector<Suite> suites;
  std::vector<Check> checks;

  bool all_passed() const;
  nlohmann::json to_json() const;
  void write_text(std::ostream& os) const;
  void write_csv(std::ostream& os) const;
};

/// Runs the selected suites (dependency-closed first).  Mathematical mismatches become failed checks;
/// a check whose computation throws is recorded as failed with the error message.
Report run(const curve::CurveFamilyParams& params, const std::set<Suite>& suites, const Options& opts = {});

/// Closed-form invariants of the family member, for the info verb.
nlohmann::json invariants(const curve::CurveFamilyParams& params);

}  // namespace hcover::report
