#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rtl/constructions.hpp"
#include "rtl/counting.hpp"
#include "rtl/errors.hpp"
#include "rtl/graph.hpp"
#include "rtl/harness.hpp"
#include "rtl/number_theory.hpp"
#include "rtl/report_json.hpp"

using nlohmann::json;
using namespace rtl;

namespace {

// Thrown for malformed flag values that CLI11 cannot validate by itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* const kParamKeys[] = {"q", "k", "l", "s", "n", "m"};

std::vector<std::int64_t> parse_list(const std::string& key, const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("--" + key + ": '" + item + "' is not an integer");
    }
  }
  if (values.empty()) throw UsageError("--" + key + " needs a value");
  return values;
}

std::vector<int> to_ints(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

// Construction parameters shared by construct, fit and p2check.
struct ParamFlags {
  std::map<std::string, std::string> raw;

  void attach(CLI::App* cmd) {
    for (const char* key : kParamKeys) cmd->add_option(std::string("--") + key, raw[key], std::string("parameter ") + key);
  }

  std::map<std::string, std::vector<std::int64_t>> parsed() const {
    std::map<std::string, std::vector<std::int64_t>> out;
    for (const auto& [key, text] : raw)
      if (!text.empty()) out[key] = parse_list(key, text);
    return out;
  }

  std::map<std::string, std::int64_t> single() const {
    std::map<std::string, std::int64_t> out;
    for (const auto& [key, values] : parsed()) {
      if (values.size() != 1) throw UsageError("--" + key + " takes a single value here");
      out[key] = values.front();
    }
    return out;
  }

  // Exactly one parameter carries a comma-separated sweep.
  Family family(const std::string& construction) const {
    Family f;
    f.construction = construction;
    for (const auto& [key, values] : parsed()) {
      if (values.size() > 1) {
        if (!f.sweep_key.empty()) throw UsageError("only one parameter may list several values");
        f.sweep_key = key;
        f.sweep = values;
      } else {
        f.fixed[key] = values.front();
      }
    }
    if (f.sweep_key.empty()) throw UsageError("give one parameter as a comma-separated sweep, e.g. --n 2,3,4,5");
    return f;
  }
};

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational::make(std::stoll(text), 1);
    return Rational::make(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw UsageError("--expected: '" + text + "' is not a rational like 5/2");
  }
}

Target parse_target(const std::string& text) {
  try {
    return Target::parse(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

void write_csv(const std::string& path, const ExponentFit& fit) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::IoError, "cannot write " + path);
  out << "parameter,n,vertices,count\n";
  for (const auto& p : fit.points) out << p.parameter << ',' << p.scale << ',' << p.vertex_count << ',' << p.count << '\n';
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rtl: rainbow Turan constructions, counting and exponent experiments"};
  app.require_subcommand(1);
  unsigned jobs = 1;
  app.add_option("--jobs", jobs, "worker threads (0 = all hardware threads)");

  // construct
  auto* construct = app.add_subcommand("construct", "build a named construction");
  std::string cname, out_path, format = "json";
  ParamFlags construct_params;
  construct->add_option("name", cname, "construction name")->required();
  construct_params.attach(construct);
  construct->add_option("-o,--output", out_path, "edge-list file; the JSON sidecar goes to <file>.json");
  construct->add_option("--format", format, "stdout format without -o")->check(CLI::IsMember({"json", "edgelist"}));

  // count
  auto* count = app.add_subcommand("count", "count copies of a cycle or path");
  std::string count_file, count_target_text;
  count->add_option("--file,file", count_file, "edge-list file")->required();
  count->add_option("--target", count_target_text, "C<s> or P<l>")->required();

  // detect
  auto* detect = app.add_subcommand("detect", "search for a rainbow cycle");
  std::string detect_file;
  int detect_t = 0;
  detect->add_option("--file,file", detect_file, "edge-list file")->required();
  detect->add_option("--rainbow-cycle", detect_t, "cycle length")->required();

  // pattern
  auto* pattern = app.add_subcommand("pattern", "good positions and colour repeats of a cycle");
  std::string pattern_file, pattern_cycle;
  std::size_t threshold = 0;
  pattern->add_option("--file,file", pattern_file, "edge-list file")->required();
  pattern->add_option("--cycle", pattern_cycle, "comma-separated vertices")->required();
  pattern->add_option("--threshold", threshold, "bad-pair threshold (default 100 * floor(t/2))");

  // fit
  auto* fit = app.add_subcommand("fit", "log-log exponent fit over a parameter sweep");
  std::string fit_family, fit_target, fit_expected, csv_path;
  std::optional<int> fit_forbidden;
  std::optional<double> fit_tolerance;
  ParamFlags fit_params;
  fit->add_option("--family", fit_family, "construction name or 'star'")->required();
  fit_params.attach(fit);
  fit->add_option("--target", fit_target, "C<s> or P<l>")->required();
  fit->add_option("--forbidden", fit_forbidden, "forbidden rainbow cycle length for the expected exponent");
  fit->add_option("--expected", fit_expected, "override the expected exponent, e.g. 5/2");
  fit->add_option("--tolerance", fit_tolerance, "slope tolerance");
  fit->add_option("--csv", csv_path, "also write (n, count) points as CSV");

  // p2check
  auto* p2 = app.add_subcommand("p2check", "max paths of length 2 from a vertex, relative to size");
  std::string p2_family;
  int p2_forbidden = 0;
  ParamFlags p2_params;
  p2->add_option("--family", p2_family, "construction name or 'star'")->required();
  p2_params.attach(p2);
  p2->add_option("--forbidden", p2_forbidden, "even forbidden cycle length")->required();

  // ex-search
  auto* ex = app.add_subcommand("ex-search", "exhaustive extremal search on at most 5 vertices");
  int ex_n = 0, ex_forbidden = 0;
  std::string ex_target;
  ex->add_option("--n", ex_n, "vertex count")->required();
  ex->add_option("--target", ex_target, "C<s> or P<l>")->required();
  ex->add_option("--forbidden", ex_forbidden, "forbidden rainbow cycle length")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "check colouring, rainbow-freeness and a predicted count");
  std::string verify_file, verify_forbidden, verify_target;
  std::optional<std::uint64_t> verify_expect;
  verify->add_option("file", verify_file, "edge-list file")->required();
  verify->add_option("--forbidden", verify_forbidden, "comma-separated cycle lengths");
  verify->add_option("--target", verify_target, "C<s> or P<l>");
  verify->add_option("--expect", verify_expect, "expected target count");

  // bkset
  auto* bk = app.add_subcommand("bkset", "Bose-Chowla B_k set in Z_{q^k-1}");
  std::uint32_t bk_q = 0;
  int bk_k = 0;
  bk->add_option("--q", bk_q, "prime")->required();
  bk->add_option("--k", bk_k, "k >= 2")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  SearchOptions opts;
  opts.jobs = jobs;

  try {
    if (construct->parsed()) {
      const auto rep = build_construction(cname, construct_params.single());
      json sidecar = to_json(rep);
      if (!out_path.empty()) {
        save_graph(rep.graph, out_path);
        const std::string side = out_path + ".json";
        std::ofstream js(side);
        if (!js) throw Error(ErrorKind::IoError, "cannot write " + side);
        js << sidecar.dump(2) << '\n';
        sidecar["edge_list"] = out_path;
        sidecar["sidecar"] = side;
        emit(sidecar);
      } else if (format == "edgelist") {
        write_graph(rep.graph, std::cout);
      } else {
        sidecar["edge_list"] = edges_json(rep.graph);
        emit(sidecar);
      }
    } else if (count->parsed()) {
      const Target target = parse_target(count_target_text);
      const auto g = load_graph(count_file);
      emit({{"target", target.to_string()}, {"count", count_target(g, target, opts)}});
    } else if (detect->parsed()) {
      const auto g = load_graph(detect_file);
      const auto found = find_rainbow_cycle(g, detect_t, opts);
      json j = {{"found", found.has_value()}, {"length", detect_t}};
      if (found) j.update(to_json(*found));
      emit(j);
    } else if (pattern->parsed()) {
      const auto g = load_graph(pattern_file);
      std::vector<Vertex> vertices;
      for (auto v : parse_list("cycle", pattern_cycle)) {
        if (v < 0) throw UsageError("--cycle: negative vertex");
        vertices.push_back(static_cast<Vertex>(v));
      }
      const auto cycle = make_cycle(g, vertices);
      const std::size_t thr = threshold ? threshold : default_bad_threshold(static_cast<int>(vertices.size()));
      json j = to_json(cycle);
      j["threshold"] = thr;
      j.update(to_json(pattern_of(g, cycle, thr)));
      emit(j);
    } else if (fit->parsed()) {
      ScalingRequest req{fit_params.family(fit_family), parse_target(fit_target), fit_forbidden, {}, fit_tolerance};
      if (!fit_expected.empty()) req.expected = parse_rational(fit_expected);
      const auto result = run_scaling(req, opts);
      if (!csv_path.empty()) write_csv(csv_path, result);
      json j = to_json(result);
      j["family"] = fit_family;
      j["sweep_key"] = req.family.sweep_key;
      j["target"] = req.target.to_string();
      emit(j);
    } else if (p2->parsed()) {
      const Family f = p2_params.family(p2_family);
      json j = to_json(check_p2_linearity(f, p2_forbidden, opts));
      j["family"] = p2_family;
      j["forbidden"] = p2_forbidden;
      emit(j);
    } else if (ex->parsed()) {
      emit(to_json(exhaustive_extremal(ex_n, parse_target(ex_target), ex_forbidden, opts)));
    } else if (verify->parsed()) {
      const auto g = load_graph(verify_file);
      json checks = json::array();
      bool all = true;
      auto record = [&](json check, bool pass) {
        check["pass"] = pass;
        all = all && pass;
        checks.push_back(std::move(check));
      };
      record({{"check", "proper_colouring"}}, is_properly_coloured(g));
      if (!verify_forbidden.empty()) {
        for (int t : to_ints(parse_list("forbidden", verify_forbidden))) {
          const auto found = find_rainbow_cycle(g, t, opts);
          json c = {{"check", "rainbow_free"}, {"length", t}};
          if (found) c["witness"] = to_json(*found);
          record(c, !found);
        }
      }
      if (verify_expect && verify_target.empty()) throw UsageError("--expect needs --target");
      if (!verify_target.empty()) {
        const Target target = parse_target(verify_target);
        const std::uint64_t actual = count_target(g, target, opts);
        json c = {{"check", "count"}, {"target", target.to_string()}, {"actual", actual}};
        if (verify_expect) c["expected"] = *verify_expect;
        record(c, !verify_expect || actual == *verify_expect);
      }
      json j = {{"file", verify_file}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()},
                {"checks", checks}, {"passed", all}};
      if (!all) {
        j["error"] = "VerificationFailed";
        j["detail"] = "at least one check failed";
      }
      emit(j);
      return all ? 0 : 1;
    } else if (bk->parsed()) {
      const BkSet set = bose_chowla(bk_q, bk_k);
      json j = to_json(set);
      j["q"] = bk_q;
      j["verified"] = verify_bk(set.elements, set.modulus, set.k);
      emit(j);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    emit({{"error", e.name()}, {"detail", e.what()}});
    return 1;
  }
  return 0;
}
