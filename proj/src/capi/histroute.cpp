#include "histroute/histroute.h"

#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <variant>

#include "engine.hpp"
#include "scheme_double.hpp"
#include "scheme_io.hpp"
#include "scheme_simple.hpp"

using namespace histroute;

struct hr_polygon {
  Histogram h;
};

struct hr_scheme {
  std::variant<SimpleScheme, DoubleScheme> s;
};

namespace {

thread_local std::string last_error;

hr_status fail(hr_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

// Runs f and turns exceptions into status codes.
template <class F>
hr_status guarded(F&& f) {
  try {
    last_error.clear();
    return f();
  } catch (const ParseError& e) {
    return fail(HR_PARSE_ERROR, e.what());
  } catch (const ValidationError& e) {
    return fail(HR_INVALID_POLYGON, e.what());
  } catch (const RouteError& e) {
    return fail(HR_ROUTE_ERROR, std::string(to_string(e.kind())) + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    return fail(HR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(HR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(HR_INTERNAL_ERROR, e.what());
  } catch (...) {
    return fail(HR_INTERNAL_ERROR, "unknown error");
  }
}

bool read_file(const char* path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return !in.bad();
}

hr_status need(const void* p, const char* what) {
  return p ? HR_OK : fail(HR_INVALID_ARGUMENT, std::string(what) + " is NULL");
}

HistogramKind kind_of(hr_kind k) { return k == HR_DOUBLE ? HistogramKind::Double : HistogramKind::Simple; }

hr_status parse_scheme_text(const std::string& text, hr_scheme** out) {
  const auto kind = sniff_scheme(text);
  if (!kind) return fail(HR_PARSE_ERROR, "line 1, column 1: expected 'scheme simple' or 'scheme double'");
  std::istringstream is(text);
  if (*kind == SchemeKind::Simple)
    *out = new hr_scheme{read_simple_scheme(is)};
  else
    *out = new hr_scheme{read_double_scheme(is)};
  return HR_OK;
}

}  // namespace

extern "C" {

const char* hr_last_error(void) { return last_error.c_str(); }

const char* hr_status_name(hr_status status) {
  switch (status) {
    case HR_OK: return "ok";
    case HR_INVALID_ARGUMENT: return "invalid-argument";
    case HR_PARSE_ERROR: return "parse-error";
    case HR_INVALID_POLYGON: return "invalid-polygon";
    case HR_IO_ERROR: return "io-error";
    case HR_ROUTE_ERROR: return "route-error";
    case HR_INTERNAL_ERROR: return "internal-error";
  }
  return "unknown";
}

void hr_string_free(char* s) { std::free(s); }

hr_status hr_polygon_parse(const char* text, hr_polygon** out) {
  if (auto st = need(text, "text"); st != HR_OK) return st;
  if (auto st = need(out, "out"); st != HR_OK) return st;
  return guarded([&] {
    *out = new hr_polygon{parse_polygon(text)};
    return HR_OK;
  });
}

hr_status hr_polygon_read(const char* path, hr_polygon** out) {
  if (auto st = need(path, "path"); st != HR_OK) return st;
  std::string text;
  if (!read_file(path, text)) return fail(HR_IO_ERROR, std::string("cannot read ") + path);
  const auto st = hr_polygon_parse(text.c_str(), out);
  if (st != HR_OK) last_error = std::string(path) + ": " + last_error;
  return st;
}

hr_status hr_polygon_generate(hr_kind kind, int n, uint64_t seed, hr_polygon** out) {
  if (auto st = need(out, "out"); st != HR_OK) return st;
  return guarded([&] {
    *out = new hr_polygon{generate(kind_of(kind), n, seed)};
    return HR_OK;
  });
}

hr_status hr_polygon_write(const hr_polygon* p, char** text) {
  if (auto st = need(p, "polygon"); st != HR_OK) return st;
  if (auto st = need(text, "text"); st != HR_OK) return st;
  return guarded([&] {
    *text = copy_string(write_polygon(p->h));
    return HR_OK;
  });
}

int hr_polygon_size(const hr_polygon* p) { return p ? p->h.size() : 0; }

hr_kind hr_polygon_kind(const hr_polygon* p) { return p && !p->h.is_simple() ? HR_DOUBLE : HR_SIMPLE; }

void hr_polygon_free(hr_polygon* p) { delete p; }

hr_status hr_scheme_build(const hr_polygon* p, hr_kind kind, hr_scheme** out) {
  if (auto st = need(p, "polygon"); st != HR_OK) return st;
  if (auto st = need(out, "out"); st != HR_OK) return st;
  return guarded([&] {
    if (kind == HR_SIMPLE) {
      if (!p->h.is_simple()) return fail(HR_INVALID_ARGUMENT, "the simple scheme needs a simple histogram");
      *out = new hr_scheme{SimpleScheme::build(VisibilityGraph(p->h))};
    } else {
      const auto h = normalize(p->h.is_simple() ? as_double(p->h) : p->h);
      *out = new hr_scheme{DoubleScheme::build(VisibilityGraph(h))};
    }
    return HR_OK;
  });
}

hr_status hr_scheme_parse(const char* dump, hr_scheme** out) {
  if (auto st = need(dump, "dump"); st != HR_OK) return st;
  if (auto st = need(out, "out"); st != HR_OK) return st;
  return guarded([&] { return parse_scheme_text(dump, out); });
}

hr_status hr_scheme_read(const char* path, hr_scheme** out) {
  if (auto st = need(path, "path"); st != HR_OK) return st;
  std::string text;
  if (!read_file(path, text)) return fail(HR_IO_ERROR, std::string("cannot read ") + path);
  const auto st = hr_scheme_parse(text.c_str(), out);
  if (st != HR_OK) last_error = std::string(path) + ": " + last_error;
  return st;
}

hr_status hr_scheme_dump(const hr_scheme* s, char** text) {
  if (auto st = need(s, "scheme"); st != HR_OK) return st;
  if (auto st = need(text, "text"); st != HR_OK) return st;
  return guarded([&] {
    std::ostringstream os;
    std::visit([&](const auto& sc) { write_scheme(os, sc); }, s->s);
    *text = copy_string(os.str());
    return HR_OK;
  });
}

int hr_scheme_size(const hr_scheme* s) {
  return s ? std::visit([](const auto& sc) { return sc.size(); }, s->s) : 0;
}

hr_kind hr_scheme_kind(const hr_scheme* s) {
  return s && std::holds_alternative<DoubleScheme>(s->s) ? HR_DOUBLE : HR_SIMPLE;
}

void hr_scheme_free(hr_scheme* s) { delete s; }

hr_status hr_scheme_sizes(const hr_scheme* s, hr_sizes* out) {
  if (auto st = need(s, "scheme"); st != HR_OK) return st;
  if (auto st = need(out, "out"); st != HR_OK) return st;
  return guarded([&] {
    const auto r = std::visit([](const auto& sc) { return sc.sizes(); }, s->s);
    const auto w = static_cast<size_t>(r.width);
    *out = {r.width, r.label_bits, r.table_bits, r.header_bits, 0, 0, 0};
    if (hr_scheme_kind(s) == HR_SIMPLE) {
      out->label_bound = 2 * w;
      out->table_bound = 1;
      out->header_bound = 0;
    } else {
      out->label_bound = 4 * (w + 1);
      out->table_bound = 6 * (w + 1) + 1;
      out->header_bound = 2 * (w + 1);
    }
    return HR_OK;
  });
}

int hr_text_is_scheme(const char* text) { return text && sniff_scheme(text) ? 1 : 0; }

hr_status hr_route(const hr_scheme* s, int from, int to, hr_route_result* out) {
  if (auto st = need(s, "scheme"); st != HR_OK) return st;
  if (auto st = need(out, "out"); st != HR_OK) return st;
  *out = {};
  return guarded([&] {
    const int n = hr_scheme_size(s);
    if (from < 0 || from >= n || to < 0 || to >= n)
      return fail(HR_INVALID_ARGUMENT, "vertex ids must lie in [0, " + std::to_string(n - 1) + "]");
    auto store = [&](const std::vector<int>& trace) {
      out->length = trace.size();
      if (trace.empty()) return;
      out->trace = static_cast<int*>(std::malloc(trace.size() * sizeof(int)));
      if (!out->trace) throw std::bad_alloc();
      std::memcpy(out->trace, trace.data(), trace.size() * sizeof(int));
    };
    return std::visit(
        [&](const auto& sc) {
          const auto adj = scheme_adjacency(sc);
          out->bfs = bfs_distances(adj, from)[static_cast<std::size_t>(to)];
          try {
            const auto r = run_route(sc, from, to);
            store(r.trace);
            out->routed = r.hops();
            for (auto b : r.header_bits) out->max_header_bits = std::max(out->max_header_bits, b);
            return HR_OK;
          } catch (const RouteError& e) {
            store(e.trace());
            out->routed = -1;
            throw;
          }
        },
        s->s);
  });
}

void hr_route_result_free(hr_route_result* r) {
  if (!r) return;
  std::free(r->trace);
  *r = {};
}

hr_status hr_verify(const hr_scheme* s, const hr_verify_options* opt, hr_verify_result* out) {
  if (auto st = need(s, "scheme"); st != HR_OK) return st;
  if (auto st = need(out, "out"); st != HR_OK) return st;
  *out = {};
  return guarded([&] {
    VerifyOptions vo;
    if (opt) {
      if (opt->sample_pairs) vo.sample_pairs = opt->sample_pairs;
      vo.seed = opt->seed;
      vo.threads = opt->threads;
      vo.keep_records = opt->want_csv != 0;
    }
    const auto rep = std::visit(
        [&](const auto& sc) {
          using Scheme = std::decay_t<decltype(sc)>;
          vo.stretch_bound = Scheme::kStretchBound;
          vo.two_step_progress = Scheme::kStretchBound > 1.0;
          const auto adj = scheme_adjacency(sc);
          return verify_pairs(sc, std::span<const std::vector<int>>(adj), vo);
        },
        s->s);
    out->pairs = rep.pairs;
    out->failures = rep.failure_count;
    out->two_step_stalls = rep.two_step_violations;
    out->max_stretch = rep.max_stretch;
    out->mean_stretch = rep.mean_stretch;
    out->summary = copy_string(rep.summary());
    if (vo.keep_records) {
      std::ostringstream os;
      rep.write_csv(os);
      out->csv = copy_string(os.str());
    }
    std::ostringstream fs;
    for (const auto& f : rep.failures) {
      fs << f.s << "->" << f.t << ": " << f.reason << " [";
      for (std::size_t i = 0; i < f.trace.size(); ++i) fs << (i ? " " : "") << f.trace[i];
      fs << "]\n";
    }
    out->failure_text = copy_string(fs.str());
    return HR_OK;
  });
}

void hr_verify_result_free(hr_verify_result* r) {
  if (!r) return;
  std::free(r->summary);
  std::free(r->csv);
  std::free(r->failure_text);
  *r = {};
}

}  // extern "C"
