// Command-line driver for the Hesse-pencil dynamics library: verification
// suites, word-semigroup tables, periodic-point censuses, orbit traces, basin
// renders, and backward-orbit point clouds.
//
// Exit codes: 0 success, 1 check failure, 2 resource exhaustion, 3 bad input.
// Identical invocations (seeds included) produce byte-identical output files.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hessdyn/dynamics.hpp"
#include "hessdyn/hesse.hpp"
#include "hessdyn/image.hpp"
#include "hessdyn/report.hpp"
#include "hessdyn/words.hpp"

namespace {

using namespace hessdyn;
using Clock = std::chrono::steady_clock;

// ------------------------------------------------------------ shared plumbing

/// Wall-clock budget; stages call ensure() at their checkpoints and bail out
/// with resource_exhausted (exit code 2) once the allowance is spent.
struct Budget {
  Clock::time_point start = Clock::now();
  double seconds = -1.0;  ///< negative: unlimited

  void ensure(const char* stage) const {
    if (seconds < 0) return;
    const double used = std::chrono::duration<double>(Clock::now() - start).count();
    if (used >= seconds)
      throw resource_exhausted(std::string("time budget exhausted during ") + stage);
  }
};

/// Whole-output-at-once writer: tables are assembled in memory and written in
/// a single pass, to the file when --out is given and to stdout otherwise.
void write_text(const std::string& path, const std::string& data) {
  if (path.empty()) {
    std::fwrite(data.data(), 1, data.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file: " + path);
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw std::runtime_error("short write on: " + path);
}

ZMap select_map(const std::string& spec) {
  const CanonicalMaps maps = canonical_maps();
  if (spec == "h") return maps.h;
  if (spec == "c") return maps.c;
  if (spec == "iota") return maps.iota;
  if (spec == "phi") return maps.phi;
  if (!spec.empty() && spec.find_first_not_of("hc") == std::string::npos)
    return psi(Word(spec));
  throw std::invalid_argument("unknown map '" + spec +
                              "': use h, c, iota, phi, or a word over {h,c}");
}

double parse_real_text(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size())
    throw std::invalid_argument("cannot parse number '" + s + "'");
  return v;
}

/// Accepts "a", "bi", "a+bi", "a-bi", "i", "-i" (exponents in either part).
Cplx parse_complex_text(std::string t) {
  t.erase(std::remove(t.begin(), t.end(), ' '), t.end());
  if (t.empty()) throw std::invalid_argument("empty point");
  if (t.back() != 'i' && t.back() != 'I') return Cplx(parse_real_text(t), 0.0);
  t.pop_back();
  size_t split = std::string::npos;
  for (size_t j = t.size(); j-- > 1;) {
    if ((t[j] == '+' || t[j] == '-') && t[j - 1] != 'e' && t[j - 1] != 'E') {
      split = j;
      break;
    }
  }
  auto imag_coeff = [](const std::string& s) {
    if (s.empty() || s == "+") return 1.0;
    if (s == "-") return -1.0;
    return parse_real_text(s);
  };
  if (split == std::string::npos) return Cplx(0.0, imag_coeff(t));
  return Cplx(parse_real_text(t.substr(0, split)), imag_coeff(t.substr(split)));
}

ProjPoint parse_point(const std::string& s) {
  if (s == "inf" || s == "infinity" || s == "oo" || s == "∞")
    return ProjPoint::infinity();
  return ProjPoint::affine(parse_complex_text(s));
}

/// "∞" for the point at infinity, bare 17-digit real when the value is exactly
/// real, "re+imi" otherwise.
std::string point_text(const ProjPoint& p) {
  if (p.is_infinity()) return "∞";
  const Cplx v = p.affine_value();
  if (v.imag() == 0.0) return format_double17(v.real());
  return format_complex17(v);
}

const char* class_text(CycleClass c) {
  switch (c) {
    case CycleClass::Superattracting: return "superattracting";
    case CycleClass::Attracting: return "attracting";
    case CycleClass::Indifferent: return "indifferent";
    default: return "repelling";
  }
}

std::string hash_text(std::uint64_t h) {
  char buf[24];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

// ------------------------------------------------------------------- verify

int run_verify(const std::string& filter, const SuiteOptions& opt, int threads,
               const std::string& out, const Budget& budget) {
  budget.ensure("verification");
  auto tasks = suite_tasks(opt);
  std::vector<size_t> chosen;
  if (filter.empty()) {
    for (size_t i = 0; i < tasks.size(); ++i) chosen.push_back(i);
  } else {
    const std::string want = resolve_suite_alias(filter);
    for (size_t i = 0; i < tasks.size(); ++i)
      if (tasks[i].first == want) chosen.push_back(i);
    if (chosen.empty())
      for (size_t i = 0; i < tasks.size(); ++i)
        if (tasks[i].first.rfind(want, 0) == 0) chosen.push_back(i);
    if (chosen.empty())
      for (size_t i = 0; i < tasks.size(); ++i)
        if (tasks[i].first.find(want) != std::string::npos) chosen.push_back(i);
    if (chosen.empty() || chosen.size() > 1) {
      std::string msg = chosen.empty() ? "no suite matches '" + filter + "'"
                                       : "suite selector '" + filter + "' is ambiguous";
      msg += "; available:";
      for (const auto& [name, task] : tasks) {
        (void)task;
        msg += ' ' + name;
      }
      throw std::invalid_argument(msg);
    }
  }

  std::vector<SuiteReport> reports(chosen.size());
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(chosen.size())));
  if (workers == 1) {
    for (size_t k = 0; k < chosen.size(); ++k) {
      budget.ensure("verification");
      reports[k] = tasks[chosen[k]].second();
    }
  } else {
    std::atomic<size_t> next{0};
    std::atomic<bool> stop{false};
    std::exception_ptr err;
    std::mutex err_mtx;
    auto worker = [&] {
      for (;;) {
        const size_t k = next.fetch_add(1);
        if (k >= chosen.size() || stop.load()) return;
        try {
          budget.ensure("verification");
          reports[k] = tasks[chosen[k]].second();
        } catch (...) {
          std::lock_guard<std::mutex> lock(err_mtx);
          if (!err) err = std::current_exception();
          stop.store(true);
          return;
        }
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
  }

  write_text(out, report_to_csv(reports));
  long checks = 0;
  int fails = 0;
  for (const SuiteReport& r : reports) {
    checks += static_cast<long>(r.checks.size());
    fails += r.fail_count();
  }
  std::fprintf(stderr, "suites: %zu  checks: %ld  failures: %d\n", reports.size(),
               checks, fails);
  return fails > 0 ? 1 : 0;
}

// -------------------------------------------------------------------- words

int run_words(int max_len, bool only_collisions, bool full_leading,
              bool only_ends_h, const std::string& out, const Budget& budget) {
  (void)full_leading;  // the leading columns are the default view already
  budget.ensure("word table");
  const CollisionReport crep = collision_scan(max_len);
  std::set<std::string> colliding;
  for (const auto& [a, b] : crep.collisions) {
    colliding.insert(a);
    colliding.insert(b);
  }

  std::ostringstream csv;
  csv << "word,degree,e_c,order_at_infinity,predicted_abs_leading,"
         "measured_leading,map_hash,flags\n";
  long rows = 0;
  for (int len = 1; len <= max_len; ++len) {
    budget.ensure("word table");
    for (const Word& w : enumerate_words(len)) {
      const ZMap m = psi(w);
      const LeadingPrediction pred = predicted_leading(w);
      const ExactTaylor t =
          taylor_at_infinity(m, static_cast<int>(pred.order) + 2);
      const bool ends_h = ends_with_h(to_hi(w));
      const bool collides = colliding.count(w.letters) > 0;
      const bool law_holds =
          (t.order == pred.order) && (BigRat(abs(t.lead)) == pred.magnitude);

      if (only_collisions && !collides) continue;
      if (only_ends_h && !ends_h) continue;

      std::string flags;
      auto add_flag = [&flags](const char* f) {
        if (!flags.empty()) flags += ';';
        flags += f;
      };
      if (ends_h) add_flag("ends_with_h");
      if (collides) add_flag("collision");
      if (!law_holds) add_flag("leading_mismatch");
      if (ends_h != (w.letters.back() == 'h')) add_flag("letter_mismatch");
      if (flags.empty()) flags = "-";

      csv << w.letters << ',' << m.map_degree() << ',' << w.count_c() << ','
          << t.order << ',' << pred.magnitude.get_str() << ','
          << t.lead.get_str() << ',' << hash_text(map_hash(m)) << ',' << flags
          << '\n';
      ++rows;
    }
  }
  write_text(out, csv.str());
  std::fprintf(stderr, "words: %ld  collisions: %zu\n", rows,
               crep.collisions.size());
  return 0;
}

// ----------------------------------------------------------------- periodic

int run_periodic(const std::string& map_spec, int nmax, const std::string& out,
                 const Budget& budget) {
  const ZMap f = select_map(map_spec);
  std::ostringstream csv;
  csv << "period,point,multiplier,class,is_real\n";
  long total = 0;
  for (int n = 1; n <= nmax; ++n) {
    budget.ensure("periodic census");
    for (const CycleRecord& rec : complex_periodic_points(f, n)) {
      if (rec.period != n) continue;
      csv << n << ',' << point_text(rec.representative) << ','
          << format_complex17(rec.multiplier) << ',' << class_text(rec.cls)
          << ',' << (rec.is_real ? "true" : "false") << '\n';
      ++total;
    }
  }
  write_text(out, csv.str());
  std::fprintf(stderr, "periodic points with minimal period <= %d: %ld\n", nmax,
               total);
  return 0;
}

// -------------------------------------------------------------------- orbit

int run_orbit(const std::string& map_spec, const std::string& start_text,
              int steps, const std::string& out, const Budget& budget) {
  const ZMap f = select_map(map_spec);
  const NumericMap nm = NumericMap::from(f);
  ProjPoint z = parse_point(start_text);
  std::ostringstream line;
  line << point_text(z);
  for (int s = 1; s <= steps; ++s) {
    if (s % 64 == 0) budget.ensure("orbit trace");
    z = nm.apply(z);
    line << ", " << point_text(z);
  }
  line << '\n';
  write_text(out, line.str());
  return 0;
}

// ------------------------------------------------------------------- render

struct RenderJob {
  std::string map_spec = "c";
  int width = 400;
  int height = 400;
  double x_min = -2.0, x_max = 2.0, y_min = -2.0, y_max = 2.0;
  std::string chart = "lambda";  ///< "lambda" or "v" (v = lambda + 1/2)
  int max_iter = 256;
  double capture_radius = 1e-3;
  std::string colors;  ///< optional "RRGGBB,RRGGBB,..." per attracting cycle
  std::string out = "render.ppm";
};

Rgb parse_hex_color(const std::string& s) {
  if (s.size() != 6 || s.find_first_not_of("0123456789abcdefABCDEF") !=
                           std::string::npos)
    throw std::invalid_argument("color must be six hex digits, got '" + s + "'");
  auto hex2 = [&s](size_t i) {
    return static_cast<std::uint8_t>(
        std::stoi(s.substr(i, 2), nullptr, 16));
  };
  return Rgb{hex2(0), hex2(2), hex2(4)};
}

std::string color_text(Rgb c) {
  char buf[8];
  std::snprintf(buf, sizeof(buf), "%02x%02x%02x", c.r, c.g, c.b);
  return buf;
}

/// Attracting and superattracting cycles of period 1 and 2, grouped as whole
/// cycles, orbit order within each cycle.
std::vector<std::vector<ProjPoint>> attracting_cycles(const ZMap& f) {
  const NumericMap nm = NumericMap::from(f);
  std::vector<std::vector<ProjPoint>> cycles;
  auto seen = [&cycles](const ProjPoint& p) {
    for (const auto& cyc : cycles)
      for (const ProjPoint& q : cyc)
        if (chordal(p, q) <= 1e-8) return true;
    return false;
  };
  for (int n : {1, 2}) {
    for (const CycleRecord& rec : complex_periodic_points(f, n)) {
      if (rec.period != n) continue;
      if (rec.cls != CycleClass::Superattracting &&
          rec.cls != CycleClass::Attracting)
        continue;
      if (seen(rec.representative)) continue;
      std::vector<ProjPoint> cyc{rec.representative};
      ProjPoint cur = rec.representative;
      for (int s = 1; s < n; ++s) {
        cur = nm.apply(cur);
        cyc.push_back(cur);
      }
      cycles.push_back(std::move(cyc));
    }
  }
  return cycles;
}

int run_render(const RenderJob& job, int threads, const Budget& budget) {
  if (!(job.x_min < job.x_max) || !(job.y_min < job.y_max))
    throw std::invalid_argument("window must satisfy x_min < x_max and y_min < y_max");
  if (job.chart != "lambda" && job.chart != "v")
    throw std::invalid_argument("chart must be 'lambda' or 'v'");
  const ZMap f = select_map(job.map_spec);

  budget.ensure("attractor census");
  const auto cycles = attracting_cycles(f);
  int span = 1;
  for (const auto& cyc : cycles)
    span = std::max(span, static_cast<int>(cyc.size()));
  // Certify capture against the span-fold iterate: every listed point is an
  // attracting fixed point of that iterate, cycles of either period included.
  const ZMap g = span == 1 ? f : iterate_map(f, span);
  std::vector<ProjPoint> points;
  std::vector<int> cycle_of;
  for (size_t cid = 0; cid < cycles.size(); ++cid)
    for (const ProjPoint& p : cycles[cid]) {
      points.push_back(p);
      cycle_of.push_back(static_cast<int>(cid));
    }

  std::vector<Rgb> palette = {Rgb{31, 119, 180},  Rgb{255, 127, 14},
                              Rgb{44, 160, 44},   Rgb{214, 39, 40},
                              Rgb{148, 103, 189}, Rgb{140, 86, 75}};
  if (!job.colors.empty()) {
    palette.clear();
    std::stringstream ss(job.colors);
    std::string tok;
    while (std::getline(ss, tok, ',')) palette.push_back(parse_hex_color(tok));
    if (palette.empty()) throw std::invalid_argument("empty color list");
  }
  const Rgb unresolved_color{16, 16, 16};

  Image img(job.width, job.height);
  const NumericMap nmg = NumericMap::from(g);
  const double dx = (job.x_max - job.x_min) / job.width;
  const double dy = (job.y_max - job.y_min) / job.height;
  const double shift = job.chart == "v" ? -0.5 : 0.0;

  std::atomic<long> next_row{0};
  std::atomic<bool> stop{false};
  std::exception_ptr err;
  std::mutex err_mtx;
  std::vector<long> unresolved_in_row(static_cast<size_t>(job.height), 0);
  auto worker = [&] {
    for (;;) {
      const long row = next_row.fetch_add(1);
      if (row >= job.height || stop.load()) return;
      try {
        budget.ensure("render");
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mtx);
        if (!err) err = std::current_exception();
        stop.store(true);
        return;
      }
      const double py = job.y_max - (row + 0.5) * dy;
      long miss = 0;
      for (int x = 0; x < job.width; ++x) {
        const double px = job.x_min + (x + 0.5) * dx;
        const Cplx lambda(px + shift, py);
        const auto hit = basin_test(nmg, ProjPoint::affine(lambda), points,
                                    job.max_iter, job.capture_radius);
        if (hit) {
          img.set(x, static_cast<int>(row),
                  palette[static_cast<size_t>(cycle_of[*hit]) % palette.size()]);
        } else {
          img.set(x, static_cast<int>(row), unresolved_color);
          ++miss;
        }
      }
      unresolved_in_row[static_cast<size_t>(row)] = miss;
    }
  };
  const int workers = std::max(1, std::min(threads, job.height));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (err) std::rethrow_exception(err);

  write_ppm(img, job.out);

  long unresolved = 0;
  for (long m : unresolved_in_row) unresolved += m;
  const long total = static_cast<long>(job.width) * job.height;
  std::ostringstream footer;
  footer << "image: " << job.out << " (" << job.width << "x" << job.height
         << " P6, chart " << job.chart << ")\n";
  footer << "attracting cycles: " << cycles.size()
         << "  (capture certified against the " << span << "-fold iterate)\n";
  for (size_t cid = 0; cid < cycles.size(); ++cid) {
    footer << "  cycle " << cid << ": period " << cycles[cid].size()
           << ", color #" << color_text(palette[cid % palette.size()])
           << ", points";
    for (const ProjPoint& p : cycles[cid]) footer << ' ' << point_text(p);
    footer << '\n';
  }
  footer << "unresolved pixels (iteration cap hit, color #"
         << color_text(unresolved_color) << "): " << unresolved << " of "
         << total << '\n';
  std::fwrite(footer.str().data(), 1, footer.str().size(), stdout);
  std::fflush(stdout);
  return 0;
}

// -------------------------------------------------------------------- julia

int run_julia(const std::string& map_spec, long samples, std::uint64_t seed,
              const std::string& out, const Budget& budget) {
  const ZMap f = select_map(map_spec);
  budget.ensure("backward orbit");
  const std::vector<Cplx> pts = inverse_iteration_sample(f, samples, seed);
  std::ostringstream csv;
  csv << "index,point\n";
  for (size_t i = 0; i < pts.size(); ++i)
    csv << i << ',' << format_complex17(pts[i]) << '\n';
  write_text(out, csv.str());
  std::fprintf(stderr, "points: %zu  seed: %llu\n", pts.size(),
               static_cast<unsigned long long>(seed));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Arithmetic dynamics of the Hesse pencil: the Hessian and Cayleyan "
      "self-maps of the parameter line"};
  app.require_subcommand(1);

  std::string out;
  int threads = 1;
  double budget_seconds = -1.0;
  std::uint64_t seed = 0x48455353ull;
  app.add_option("--out", out,
                 "write output to this file (default: stdout; render: render.ppm)");
  app.add_option("--threads", threads, "worker threads for parallel stages")
      ->check(CLI::Range(1, 256));
  app.add_option("--budget-seconds", budget_seconds,
                 "wall-clock budget; exceeding it exits with code 2")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", seed, "seed for randomized sampling");

  auto* verify =
      app.add_subcommand("verify", "run verification suites, write a CSV report");
  verify->fallthrough();
  std::string suite;
  int max_word_len = 4;
  int basin_samples = 10000;
  verify->add_option("--suite", suite,
                     "single suite to run (aliases and unique substrings accepted)");
  verify->add_option("--max-word-len", max_word_len,
                     "word-length bound for the word-indexed suites")
      ->check(CLI::Range(1, 6));
  verify->add_option("--basin-samples", basin_samples,
                     "sample count for the basin-geometry suite")
      ->check(CLI::Range(1, 1000000));

  auto* words = app.add_subcommand(
      "words", "tabulate the word semigroup: degrees, leading data, collisions");
  words->fallthrough();
  int max_len = 6;
  bool flag_collisions = false, flag_leading = false, flag_ends_h = false;
  words->add_option("--max-len", max_len, "word-length bound (at most 6)")
      ->check(CLI::Range(1, 6));
  words->add_flag("--collisions", flag_collisions,
                  "restrict rows to words involved in collisions");
  words->add_flag("--leading", flag_leading,
                  "full leading-coefficient table (the default view)");
  words->add_flag("--ends-with-h", flag_ends_h,
                  "restrict rows to maps detected to end with the Hessian letter");

  auto* periodic =
      app.add_subcommand("periodic", "census of periodic points by minimal period");
  periodic->fallthrough();
  std::string periodic_map = "c";
  int n_max = 1;
  periodic->add_option("--map", periodic_map,
                       "map: h, c, iota, phi, or a word over {h,c}");
  periodic->add_option("--n", n_max, "maximal period")->check(CLI::Range(1, 32));

  auto* orbit = app.add_subcommand("orbit", "forward orbit trace");
  orbit->fallthrough();
  std::string orbit_map = "c";
  std::string start = "0";
  int steps = 10;
  orbit->add_option("--map", orbit_map, "map: h, c, iota, phi, or a word over {h,c}");
  orbit->add_option("--start", start, "start point: real, re+imi, or inf");
  orbit->add_option("--steps", steps, "number of forward steps")
      ->check(CLI::Range(0, 1000000));

  auto* render =
      app.add_subcommand("render", "render basin coloring to a binary P6 pixmap");
  render->fallthrough();
  RenderJob job;
  render->add_option("--map", job.map_spec, "map: h, c, iota, phi, or a word over {h,c}");
  render->add_option("--width", job.width, "image width in pixels")
      ->check(CLI::Range(1, 20000));
  render->add_option("--height", job.height, "image height in pixels")
      ->check(CLI::Range(1, 20000));
  render->add_option("--x-min", job.x_min, "window: left edge");
  render->add_option("--x-max", job.x_max, "window: right edge");
  render->add_option("--y-min", job.y_min, "window: bottom edge");
  render->add_option("--y-max", job.y_max, "window: top edge");
  render->add_option("--chart", job.chart,
                     "coordinate chart: lambda, or v (= lambda + 1/2)");
  render->add_option("--max-iter", job.max_iter, "iteration cap per pixel")
      ->check(CLI::Range(1, 100000));
  render->add_option("--capture-radius", job.capture_radius,
                     "chordal capture radius for basin certification");
  render->add_option("--colors", job.colors,
                     "comma-separated RRGGBB list, one per attracting cycle");

  auto* julia = app.add_subcommand("julia", "backward-orbit point cloud");
  julia->fallthrough();
  std::string julia_map = "c";
  long samples = 2000;
  julia->add_option("--map", julia_map, "map: h, c, iota, phi, or a word over {h,c}");
  julia->add_option("--samples", samples, "points in the cloud")
      ->check(CLI::Range(0L, 10000000L));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  }

  const Budget budget{Clock::now(), budget_seconds};
  try {
    if (verify->parsed()) {
      SuiteOptions opt;
      opt.max_word_len = max_word_len;
      opt.basin_samples = basin_samples;
      opt.seed = seed;
      return run_verify(suite, opt, threads, out, budget);
    }
    if (words->parsed())
      return run_words(max_len, flag_collisions, flag_leading, flag_ends_h, out,
                       budget);
    if (periodic->parsed()) return run_periodic(periodic_map, n_max, out, budget);
    if (orbit->parsed()) return run_orbit(orbit_map, start, steps, out, budget);
    if (render->parsed()) {
      if (!out.empty()) job.out = out;
      return run_render(job, threads, budget);
    }
    if (julia->parsed()) return run_julia(julia_map, samples, seed, out, budget);
  } catch (const resource_exhausted& e) {
    std::fprintf(stderr, "resource exhausted: %s\n", e.what());
    return 2;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "bad input: %s\n", e.what());
    return 3;
  } catch (const std::domain_error& e) {
    std::fprintf(stderr, "bad input: %s\n", e.what());
    return 3;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 3;  // unreachable with require_subcommand(1)
}
