// histroute: generate histograms, build routing schemes, route and verify.
// Talks to the library only through the C API.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>

#include "histroute/histroute.h"

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct PolygonDeleter {
  void operator()(hr_polygon* p) const { hr_polygon_free(p); }
};
struct SchemeDeleter {
  void operator()(hr_scheme* s) const { hr_scheme_free(s); }
};
using PolygonPtr = std::unique_ptr<hr_polygon, PolygonDeleter>;
using SchemePtr = std::unique_ptr<hr_scheme, SchemeDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  hr_string_free(s);
  return out;
}

int report(hr_status st) {
  std::cerr << "error: " << hr_last_error() << '\n';
  return st == HR_IO_ERROR || st == HR_INVALID_ARGUMENT ? kUsage : kFailed;
}

bool read_text(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

bool write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

const std::map<std::string, hr_kind> kKinds{{"simple", HR_SIMPLE}, {"double", HR_DOUBLE}};

// Loads F as a scheme dump, or builds the requested scheme from a polygon.
int load_scheme(const std::string& path, hr_kind kind, SchemePtr& out) {
  std::string text;
  if (!read_text(path, text)) {
    std::cerr << "error: cannot read " << path << '\n';
    return kUsage;
  }
  hr_scheme* s = nullptr;
  if (hr_text_is_scheme(text.c_str())) {
    if (auto st = hr_scheme_parse(text.c_str(), &s); st != HR_OK) {
      std::cerr << "error: " << path << ": " << hr_last_error() << '\n';
      return kFailed;
    }
    out.reset(s);
    if (hr_scheme_kind(s) != kind) {
      std::cerr << "error: " << path << " holds a " << (hr_scheme_kind(s) == HR_SIMPLE ? "simple" : "double")
                << " scheme but --scheme asks for " << (kind == HR_SIMPLE ? "simple" : "double") << '\n';
      return kUsage;
    }
    return kOk;
  }
  hr_polygon* p = nullptr;
  if (auto st = hr_polygon_parse(text.c_str(), &p); st != HR_OK) {
    std::cerr << "error: " << path << ": " << hr_last_error() << '\n';
    return kFailed;
  }
  PolygonPtr poly(p);
  if (auto st = hr_scheme_build(poly.get(), kind, &s); st != HR_OK) return report(st);
  out.reset(s);
  return kOk;
}

std::string size_summary(const hr_scheme* s) {
  hr_sizes z{};
  hr_scheme_sizes(s, &z);
  std::ostringstream os;
  os << "n=" << hr_scheme_size(s) << " width=" << z.width << '\n'
     << "labBits=" << z.label_bits << " (bound " << z.label_bound << ")\n"
     << "tabBits=" << z.table_bits << " (bound " << z.table_bound << ")\n"
     << "hdrBits=" << z.header_bits << " (bound " << z.header_bound << ")\n";
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Compact routing on visibility graphs of histogram polygons"};
  app.require_subcommand(1);

  std::string kind_name, out_path, path, pairs = "all", report_path;
  hr_kind scheme = HR_SIMPLE;
  int n = 0, from = 0, to = 0;
  std::uint64_t seed = 1;
  bool trace = false;

  auto* gen = app.add_subcommand("gen", "Write a random histogram");
  gen->add_option("--kind", kind_name, "simple or double")->required()->check(CLI::IsMember({"simple", "double"}));
  gen->add_option("--n", n, "vertex count (even, at least 4)")->required();
  gen->add_option("--seed", seed, "random seed")->required();
  gen->add_option("--out", out_path, "output file (default: stdout)");

  auto* validate = app.add_subcommand("validate", "Check a polygon file");
  validate->add_option("file", path)->required();

  auto* build = app.add_subcommand("build", "Build a scheme and write its dump");
  build->add_option("file", path, "polygon file")->required();
  build->add_option("--scheme", scheme, "simple or double")->required()->transform(CLI::CheckedTransformer(kKinds));
  build->add_option("--out", out_path, "dump file (default: stdout)");

  auto* route = app.add_subcommand("route", "Route one packet");
  route->add_option("file", path, "polygon file or scheme dump")->required();
  route->add_option("--scheme", scheme, "simple or double")->required()->transform(CLI::CheckedTransformer(kKinds));
  route->add_option("--from", from)->required();
  route->add_option("--to", to)->required();
  route->add_flag("--trace", trace, "print the visited vertices");

  auto* verify = app.add_subcommand("verify", "Route all (or K sampled) pairs and compare with BFS");
  verify->add_option("file", path, "polygon file or scheme dump")->required();
  verify->add_option("--scheme", scheme, "simple or double")->required()->transform(CLI::CheckedTransformer(kKinds));
  verify->add_option("--pairs", pairs, "all, or a number of sampled ordered pairs");
  verify->add_option("--report", report_path, "per-pair CSV output");
  verify->add_option("--seed", seed, "sampling seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (gen->parsed()) {
    hr_polygon* p = nullptr;
    if (auto st = hr_polygon_generate(kind_name == "double" ? HR_DOUBLE : HR_SIMPLE, n, seed, &p); st != HR_OK)
      return report(st);
    PolygonPtr poly(p);
    char* text = nullptr;
    if (auto st = hr_polygon_write(poly.get(), &text); st != HR_OK) return report(st);
    const auto body = take(text);
    if (out_path.empty()) {
      std::cout << body;
    } else if (!write_text(out_path, body)) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return kUsage;
    }
    return kOk;
  }

  if (validate->parsed()) {
    hr_polygon* p = nullptr;
    const auto st = hr_polygon_read(path.c_str(), &p);
    if (st == HR_IO_ERROR) return report(st);
    if (st != HR_OK) {
      std::cout << "invalid: " << hr_last_error() << '\n';
      return kFailed;
    }
    PolygonPtr poly(p);
    std::cout << "valid " << (hr_polygon_kind(p) == HR_SIMPLE ? "simple" : "double") << " histogram, n=" << hr_polygon_size(p)
              << '\n';
    return kOk;
  }

  if (build->parsed()) {
    hr_polygon* p = nullptr;
    if (auto st = hr_polygon_read(path.c_str(), &p); st != HR_OK) return report(st);
    PolygonPtr poly(p);
    hr_scheme* s = nullptr;
    if (auto st = hr_scheme_build(poly.get(), scheme, &s); st != HR_OK) return report(st);
    SchemePtr sc(s);
    char* text = nullptr;
    if (auto st = hr_scheme_dump(s, &text); st != HR_OK) return report(st);
    const auto dump = take(text);
    if (out_path.empty()) {
      std::cout << dump;
      std::cerr << size_summary(s);
    } else {
      if (!write_text(out_path, dump)) {
        std::cerr << "error: cannot write " << out_path << '\n';
        return kUsage;
      }
      std::cout << size_summary(s);
    }
    return kOk;
  }

  SchemePtr sc;
  if (int rc = load_scheme(path, scheme, sc); rc != kOk) return rc;

  if (route->parsed()) {
    hr_route_result r{};
    const auto st = hr_route(sc.get(), from, to, &r);
    if (st != HR_OK && st != HR_ROUTE_ERROR) return report(st);
    if (trace || st != HR_OK) {
      for (size_t i = 0; i < r.length; ++i) std::cout << (i ? " " : "") << r.trace[i];
      std::cout << '\n';
    }
    if (st == HR_OK) std::cout << "routed=" << r.routed << " bfs=" << r.bfs << '\n';
    hr_route_result_free(&r);
    if (st != HR_OK) {
      std::cerr << "error: " << hr_last_error() << '\n';
      return kFailed;
    }
    return kOk;
  }

  hr_verify_options opt{0, seed, 0, report_path.empty() ? 0 : 1};
  if (pairs != "all") {
    std::size_t consumed = 0;
    unsigned long long k = 0;
    try {
      k = std::stoull(pairs, &consumed);
    } catch (const std::exception&) {
      consumed = 0;
    }
    if (consumed != pairs.size() || k == 0 || pairs[0] == '-') {
      std::cerr << "error: --pairs expects 'all' or a positive count, got '" << pairs << "'\n";
      return kUsage;
    }
    opt.sample_pairs = static_cast<size_t>(k);
  }
  hr_verify_result res{};
  if (auto st = hr_verify(sc.get(), &opt, &res); st != HR_OK) return report(st);
  std::cout << res.summary;
  if (res.failure_text && *res.failure_text) std::cerr << res.failure_text;
  int rc = res.failures == 0 ? kOk : kFailed;
  if (!report_path.empty() && !write_text(report_path, res.csv ? res.csv : "")) {
    std::cerr << "error: cannot write " << report_path << '\n';
    rc = kUsage;
  }
  hr_verify_result_free(&res);
  return rc;
}
