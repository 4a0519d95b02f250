#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "radhom/coresolve.hpp"
#include "radhom/dims.hpp"
#include "radhom/io.hpp"
#include "radhom/verify.hpp"

using namespace radhom;

namespace {

constexpr int kExitUsage = 2;

struct RunConfig {
  std::vector<std::string> inputs;
  int bound = 30;
  std::string field;
  std::uint64_t seed = 0;
  int workers = 1;
  std::string format = "table";
  std::string out;
};

int default_bound() {
  if (const char* env = std::getenv("RADHOM_BOUND")) {
    try {
      int b = std::stoi(env);
      if (b >= 1) return b;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring invalid RADHOM_BOUND='" << env << "'\n";
  }
  return 30;
}

AlgebraPtr load(const std::string& path, const std::string& field) {
  AlgebraPtr a = load_algebra_file(path);
  if (field.empty()) return a;
  std::string text = print_algebra(*a);
  text = "FIELD " + field + text.substr(text.find('\n'));
  return parse_algebra(text);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string o = "\"";
  for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
  return o + "\"";
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write '" + path + "'");
    }
  }
  std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::vector<std::pair<std::string, std::string>> profile_rows(const AlgebraProfile& p) {
  auto tri = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "inconclusive"; };
  return {{"field", p.field},
          {"dim", std::to_string(p.dim)},
          {"vertices", std::to_string(p.vertices)},
          {"arrows", std::to_string(p.arrows)},
          {"bound", std::to_string(p.bound)},
          {"gl_dim", p.gl_dim.str()},
          {"inj_dim_A_left", p.inj_dim_A_left.str()},
          {"inj_dim_A_right", p.inj_dim_A_right.str()},
          {"inj_dim_J_left", p.inj_dim_J_left.str()},
          {"inj_dim_J_right", p.inj_dim_J_right.str()},
          {"dom_dim", p.dom_dim.str()},
          {"gorenstein", p.gorenstein.str()},
          {"minimal_AG", tri(p.minimal_AG)},
          {"fp_dim_lower", std::to_string(p.fp_dim_lower) + " (lower bound)"},
          {"fi_dim_lower", std::to_string(p.fi_dim_lower) + " (lower bound)"}};
}

int cmd_dims(const RunConfig& cfg) {
  std::vector<std::pair<std::string, AlgebraProfile>> profiles;
  for (const auto& path : cfg.inputs) profiles.emplace_back(path, compute_profile(load(path, cfg.field), cfg.bound));
  Output out(cfg.out);
  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [path, p] : profiles) {
      auto j = p.to_json();
      j["input"] = path;
      arr.push_back(j);
    }
    out.os() << (arr.size() == 1 ? arr[0] : arr).dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out.os() << "input,key,value\n";
    for (const auto& [path, p] : profiles)
      for (const auto& [k, v] : profile_rows(p)) out.os() << csv_escape(path) << ',' << k << ',' << csv_escape(v) << '\n';
  } else {
    for (const auto& [path, p] : profiles) {
      out.os() << path << '\n';
      for (const auto& [k, v] : profile_rows(p)) out.os() << "  " << std::left << std::setw(16) << k << v << '\n';
    }
  }
  return 0;
}

int cmd_check(const RunConfig& cfg, std::vector<std::string> checks) {
  if (checks.empty()) checks = default_checks();
  for (const auto& c : checks)
    if (!find_check(c)) {
      std::cerr << "unknown check '" << c << "'; known:";
      for (const auto& [n, f] : check_registry()) std::cerr << ' ' << n;
      std::cerr << '\n';
      return kExitUsage;
    }
  std::vector<VerdictReport> reports;
  for (const auto& path : cfg.inputs) {
    AlgebraPtr a = load(path, cfg.field);
    for (const auto& c : checks) reports.push_back(run_check(c, a, cfg.bound));
  }
  Output out(cfg.out);
  if (cfg.format == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) arr.push_back(r.to_json(true));
    out.os() << arr.dump(2) << '\n';
  } else if (cfg.format == "csv") {
    out.os() << "fingerprint,check,verdict,bound,reason,seconds\n";
    for (const auto& r : reports)
      out.os() << r.fingerprint << ',' << r.check << ',' << verdict_name(r.verdict) << ',' << r.bound << ','
               << csv_escape(r.reason) << ',' << r.seconds << '\n';
  } else {
    for (const auto& r : reports) {
      out.os() << std::left << std::setw(20) << r.check << std::setw(26) << verdict_name(r.verdict) << r.reason << '\n';
      if (r.verdict == Verdict::Fail || r.verdict == Verdict::CounterexampleCandidate)
        out.os() << r.witness.dump(2) << '\n';
    }
  }
  return exit_status(reports);
}

int cmd_sweep(const RunConfig& cfg, const std::vector<std::string>& families, std::vector<std::string> checks,
              bool keep_going, bool progress) {
  SweepConfig sc;
  for (const auto& f : families) {
    GeneratorSpec s = GeneratorSpec::parse(f);
    if (!cfg.field.empty()) s.field = cfg.field;
    sc.families.push_back(s);
  }
  if (checks.empty()) checks = default_checks();
  for (const auto& c : checks)
    if (!find_check(c)) {
      std::cerr << "unknown check '" << c << "'\n";
      return kExitUsage;
    }
  sc.checks = checks;
  sc.bound = cfg.bound;
  sc.seed = cfg.seed;
  sc.workers = cfg.workers;
  sc.abort_on_fail = !keep_going;
  if (progress)
    sc.progress = [](int done, int total) {
      if (done % 50 == 0 || done == total) std::cerr << "  " << done << "/" << total << " algebras\n";
    };
  SweepResult r = sweep(sc);
  for (const auto& s : r.summary["skipped_draws"]) std::cerr << "skipped " << s.get<std::string>() << '\n';

  if (!cfg.out.empty()) {
    namespace fs = std::filesystem;
    fs::path summary(cfg.out);
    if (summary.has_parent_path()) fs::create_directories(summary.parent_path());
    std::ofstream(summary) << r.summary_with_timing().dump(2) << '\n';
    fs::path reports = summary;
    reports.replace_extension(".reports.jsonl");
    std::ofstream rep(reports);
    for (const auto& v : r.reports) rep << v.to_json().dump() << '\n';
    const std::string dir = summary.has_parent_path() ? summary.parent_path().string() : ".";
    for (const auto& w : persist_witnesses(r, dir)) std::cerr << "witness written: " << w << '\n';
  }
  std::ostream& os = std::cout;
  if (cfg.format == "json") {
    os << r.summary_with_timing().dump(2) << '\n';
  } else if (cfg.format == "csv") {
    os << "check,pass,pass_at_bound,fail,inconclusive,candidates\n";
    for (const auto& c : r.summary["checks"])
      os << c["name"].get<std::string>() << ',' << c["pass"] << ',' << c["pass_at_bound"] << ',' << c["fail"] << ','
         << c["inconclusive"] << ',' << c["candidates"].size() << '\n';
  } else {
    os << "algebras " << r.summary["algebras"] << "  bound " << cfg.bound << "  seed " << cfg.seed << "  wall "
       << std::fixed << std::setprecision(1) << r.wall_time_s << "s" << (r.aborted ? "  (aborted on fail)" : "") << '\n';
    os << std::left << std::setw(20) << "check" << std::right << std::setw(8) << "pass" << std::setw(10) << "at_bound"
       << std::setw(8) << "fail" << std::setw(8) << "incon." << std::setw(8) << "cand." << '\n';
    for (const auto& c : r.summary["checks"])
      os << std::left << std::setw(20) << c["name"].get<std::string>() << std::right << std::setw(8) << c["pass"].get<int>()
         << std::setw(10) << c["pass_at_bound"].get<int>() << std::setw(8) << c["fail"].get<int>() << std::setw(8)
         << c["inconclusive"].get<int>() << std::setw(8) << c["candidates"].size() << '\n';
  }
  return exit_status(r.reports);
}

int cmd_module(const RunConfig& cfg, const std::string& literal) {
  AlgebraPtr a = load(cfg.inputs.at(0), cfg.field);
  Rep m = parse_module_literal(a, literal);
  const DimValue pd = proj_dim(m, cfg.bound), id = inj_dim(m, cfg.bound);
  const DimValue dom = dominant_dimension(m, cfg.bound), codom = codominant_dimension(m, cfg.bound);
  const bool pi = is_projective_injective(m);
  Output out(cfg.out);
  if (cfg.format == "json") {
    nlohmann::json j{{"dims", m.dims()},          {"proj_dim", pd.to_json()},  {"inj_dim", id.to_json()},
                     {"dom_dim", dom.to_json()},  {"codom_dim", codom.to_json()}, {"projective_injective", pi},
                     {"top", top_dims(m)},        {"socle", socle_dims(m)}};
    out.os() << j.dump(2) << '\n';
    return 0;
  }
  auto vec = [](const std::vector<int>& v) {
    std::string s;
    for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
  };
  std::vector<std::pair<std::string, std::string>> rows{
      {"dims", vec(m.dims())},  {"proj_dim", pd.str()}, {"inj_dim", id.str()},        {"dom_dim", dom.str()},
      {"codom_dim", codom.str()}, {"projective_injective", pi ? "true" : "false"}, {"top", vec(top_dims(m))},
      {"socle", vec(socle_dims(m))}};
  if (cfg.format == "csv") {
    out.os() << "key,value\n";
    for (const auto& [k, v] : rows) out.os() << k << ',' << csv_escape(v) << '\n';
  } else {
    for (const auto& [k, v] : rows) out.os() << std::left << std::setw(22) << k << v << '\n';
  }
  return 0;
}

int cmd_generate(const RunConfig& cfg, const std::vector<std::string>& families) {
  namespace fs = std::filesystem;
  const fs::path dir = cfg.out.empty() ? fs::path(".") : fs::path(cfg.out);
  fs::create_directories(dir);
  for (const auto& f : families) {
    GeneratorSpec s = GeneratorSpec::parse(f);
    if (!cfg.field.empty()) s.field = cfg.field;
    for (int i = 0; i < s.count; ++i) {
      Generated g = generate_one(s, cfg.seed, i);
      const std::string name = s.family + "_" + std::to_string(i);
      if (!g.algebra) {
        std::cerr << "skipped " << name << ": " << g.skipped << '\n';
        continue;
      }
      std::ofstream((dir / (name + ".alg")).string()) << print_algebra(*g.algebra);
      std::cout << (dir / (name + ".alg")).string() << ' ' << fingerprint_hex(*g.algebra) << " dim " << g.algebra->dim() << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Homological dimensions of bound quiver algebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  cfg.bound = default_bound();

  auto common = [&](CLI::App* sub) {
    sub->add_option("--bound,-B", cfg.bound, "resolution bound B")->check(CLI::PositiveNumber);
    sub->add_option("--field", cfg.field, "override the coefficient field (prime p or Q)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--out,-o", cfg.out, "output path");
    sub->add_option("--seed", cfg.seed, "seed for generated algebras");
    sub->add_option("--workers,-j", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--max-proj-dim", engine_limits().max_projective_dim,
                    "largest projective term (total dimension) a resolution may build")
        ->check(CLI::PositiveNumber);
  };

  auto* dims = app.add_subcommand("dims", "print the homological profile of algebra files");
  common(dims);
  dims->add_option("files", cfg.inputs, "algebra files")->required();

  std::vector<std::string> checks;
  auto* check = app.add_subcommand("check", "run theorem checks on algebra files");
  common(check);
  check->add_option("file", cfg.inputs, "algebra file")->required();
  check->add_option("--check,-c", checks, "check name (repeatable); default: all");

  std::vector<std::string> families;
  bool keep_going = false, progress = false;
  auto* sw = app.add_subcommand("sweep", "generate algebras and run checks over them");
  common(sw);
  sw->add_option("--family,-f", families, "family spec name:count[:key=value,...]")->required();
  sw->add_option("--check,-c", checks, "check name (repeatable); default: all but koszul");
  sw->add_flag("--keep-going", keep_going, "do not stop at the first failing check");
  sw->add_flag("--progress", progress, "report progress on stderr");

  auto* gen = app.add_subcommand("generate", "write generated algebras to files");
  common(gen);
  gen->add_option("--family,-f", families, "family spec name:count[:key=value,...]")->required();

  std::string literal;
  auto* mod = app.add_subcommand("module", "invariants of a single module");
  common(mod);
  mod->add_option("file", cfg.inputs, "algebra file")->required()->expected(1);
  mod->add_option("--module,-m", literal, "module literal 'MODULE left d.. ; ARROWMAT a = [[..]]'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (*dims) return cmd_dims(cfg);
    if (*check) return cmd_check(cfg, checks);
    if (*sw) return cmd_sweep(cfg, families, checks, keep_going, progress);
    if (*mod) return cmd_module(cfg, literal);
    if (*gen) return cmd_generate(cfg, families);
  } catch (const PresentationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ContractViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitUsage;
}
