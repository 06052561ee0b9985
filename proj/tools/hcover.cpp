// Command-line front end: info, verify, count, group dump, arc profile.
// Exit codes: 0 pass, 1 check failure, 2 usage or I/O error.

#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "hcover/arcs.hpp"
#include "hcover/autgrp.hpp"
#include "hcover/kernels.hpp"
#include "hcover/report.hpp"
#include "hcover/specfile.hpp"
#include "json.hpp"

using namespace hcover;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Config {
  std::string spec;
  std::string suites = "all";
  std::string out;
  std::string format = "text";
  int threads = 0;
  std::uint32_t precision = 0;
  std::uint64_t max_field_order = gf::kDefaultMaxOrder;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw specfile::SpecError("cannot write " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

curve::CurveFamilyParams load(const Config& cfg) { return specfile::load(cfg.spec, cfg.max_field_order); }

int cmd_info(const Config& cfg) {
  const json inv = report::invariants(load(cfg));
  Output out(cfg.out);
  if (cfg.format == "json") {
    out.stream() << inv.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out.stream() << "key,value\n";
    for (const auto& [k, v] : inv.items()) out.stream() << k << ',' << v.dump() << '\n';
  } else {
    for (const auto& [k, v] : inv.items()) out.stream() << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << '\n';
  }
  return 0;
}

int cmd_verify(const Config& cfg) {
  const auto params = load(cfg);
  report::Options opts;
  opts.precision = cfg.precision;
  const auto rep = report::run(params, report::parse_suite_list(cfg.suites), opts);
  Output out(cfg.out);
  if (cfg.format == "json") {
    out.stream() << rep.to_json().dump(2) << '\n';
  } else if (cfg.format == "csv") {
    rep.write_csv(out.stream());
  } else {
    rep.write_text(out.stream());
  }
  return rep.all_passed() ? 0 : kExitFail;
}

int cmd_count(const Config& cfg) {
  const auto params = load(cfg);
  const auto cn = curve::build_cn(params);
  const auto count = curve::count_points(cn, curve::singular_locus(cn));
  json j{{"affine", count.affine},
         {"at_infinity", count.at_infinity},
         {"plane", count.plane},
         {"places", count.places},
         {"places_exact", count.places_exact}};
  bool ok = true;
  if (params.is_normalized()) {
    const auto places = curve::places_closed_form(params.q(), params.n());
    const auto plane = curve::plane_points_closed_form(params.q(), params.n());
    j["expected_places"] = places;
    j["expected_plane"] = plane;
    ok = static_cast<std::int64_t>(count.places) == places && static_cast<std::int64_t>(count.plane) == plane;
  }
  Output out(cfg.out);
  if (cfg.format == "json") {
    out.stream() << j.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out.stream() << "key,value\n";
    for (const auto& [k, v] : j.items()) out.stream() << k << ',' << v.dump() << '\n';
  } else {
    for (const auto& [k, v] : j.items()) out.stream() << k << ": " << v.dump() << '\n';
  }
  return ok ? 0 : kExitFail;
}

int cmd_group_dump(const Config& cfg) {
  const auto params = load(cfg);
  const auto tu = curve::build_cn_prime(params, curve::default_tu_alpha(params));
  const auto G = autgrp::generate_group(params.field(), autgrp::explicit_generators(params, tu, curve::Model::xy).all());
  Output out(cfg.out);
  autgrp::dump_group(out.stream(), G);
  return 0;
}

int cmd_arc_profile(const Config& cfg) {
  const auto params = load(cfg);
  const auto cn = curve::build_cn(params);
  const proj::ProjPlane plane(params.field());
  const auto S = arcs::rational_point_set(cn, plane);
  const auto prof = arcs::intersection_profile(plane, S);
  const auto arc = arcs::completeness_check(plane, S, prof.d);
  Output out(cfg.out);
  if (cfg.format == "csv") {
    arcs::write_histogram_csv(out.stream(), prof);
    if (cfg.out.empty()) {
      std::cout << '\n';
      arcs::write_witnesses_csv(std::cout, arc);
    } else {
      std::ofstream w(cfg.out + ".witnesses.csv");
      if (!w) throw specfile::SpecError("cannot write " + cfg.out + ".witnesses.csv");
      arcs::write_witnesses_csv(w, arc);
    }
    return 0;
  }
  json hist = json::object();
  for (const auto& [size, lines] : prof.histogram) hist[std::to_string(size)] = lines;
  json wit = json::array();
  for (const auto& P : arc.extension_witnesses) wit.push_back({P[0], P[1], P[2]});
  const json j{{"k", arc.k}, {"d", arc.d}, {"complete", arc.complete}, {"histogram", hist}, {"extension_witnesses", wit}};
  if (cfg.format == "json") {
    out.stream() << j.dump(2) << '\n';
  } else {
    out.stream() << "k: " << arc.k << "\nd: " << arc.d << "\ncomplete: " << (arc.complete ? "yes" : "no")
                 << "\nextension points: " << arc.extension_witnesses.size() << "\nhistogram:\n";
    for (const auto& [size, lines] : prof.histogram) out.stream() << "  " << size << ": " << lines << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification toolkit for the curves L(x)^(q+1) + L(y)^(q+1) + c = 0"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--spec", cfg.spec, "curve specification file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", cfg.out, "output path (default stdout)");
    sub->add_option("--format", cfg.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--threads", cfg.threads, "OpenMP threads (0 keeps the default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--precision", cfg.precision, "power-series precision (0 picks the default)");
    sub->add_option("--max-field-order", cfg.max_field_order, "largest field order allowed");
  };

  auto* info = app.add_subcommand("info", "closed-form invariants");
  common(info);
  auto* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  verify->add_option("--suite", cfg.suites, "comma-separated suites or 'all'");
  auto* count = app.add_subcommand("count", "count rational points and places");
  common(count);
  auto* group = app.add_subcommand("group", "automorphism group");
  group->require_subcommand(1);
  auto* dump = group->add_subcommand("dump", "write every element as nine field codes");
  common(dump);
  auto* arc = app.add_subcommand("arc", "arc parameters");
  arc->require_subcommand(1);
  auto* profile = arc->add_subcommand("profile", "line intersection histogram and extension points");
  common(profile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (cfg.threads > 0) kernels::set_threads(cfg.threads);
    if (*info) return cmd_info(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*count) return cmd_count(cfg);
    if (*dump) return cmd_group_dump(cfg);
    if (*profile) return cmd_arc_profile(cfg);
  } catch (const specfile::SpecError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const FieldMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
