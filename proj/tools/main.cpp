// Command-line front end: mine / oracle-check / bench / convert / gen.
//
// Exit codes: 0 success, 1 result mismatch (oracle-check) or unexpected
// failure, 2 usage, 3 input parse error, 4 guard refusal / depth cap /
// timeout.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "thue/datagen.hpp"
#include "thue/miner.hpp"
#include "thue/oracle.hpp"
#include "thue/report.hpp"

namespace {

using nlohmann::json;
using namespace thue;

const char* to_string(MtdSemantics s) {
  return s == MtdSemantics::inclusive ? "inclusive" : "exclusive";
}
const char* to_string(RuMode m) {
  return m == RuMode::strict ? "strict" : "compat";
}
const char* to_string(MiningConfig::Bound b) {
  return b == MiningConfig::Bound::ewu_opt ? "opt" : "original";
}
const char* to_string(MiningConfig::InitSoundness s) {
  return s == MiningConfig::InitSoundness::safe ? "safe" : "paper";
}
const char* to_string(MiningConfig::ExpansionOrder o) {
  return o == MiningConfig::ExpansionOrder::simult_first ? "simult-first"
                                                         : "serial-first";
}

/// Flags shared by mine / oracle-check / bench.
struct CommonOpts {
  std::string input;
  std::string format = "native";
  std::int64_t k = 0;
  std::int64_t mtd = 0;
  std::string semantics = "inclusive";
  std::string ru_mode = "strict";
  std::string bound = "opt";
  std::string init = "riu,rtu";
  std::string init_soundness = "safe";
  std::string order = "simult-first";
  std::string variant = "thue";
  std::int64_t threads = 1;
  std::size_t depth_cap = 0;
  double timeout = 0;  // seconds; 0 = none unless the flag was given

  CLI::Option* k_opt = nullptr;
  CLI::Option* bound_opt = nullptr;
  CLI::Option* init_opt = nullptr;
  CLI::Option* soundness_opt = nullptr;
  CLI::Option* timeout_opt = nullptr;
};

void add_input_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--input", o.input, "input sequence file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--format", o.format, "input format")
      ->check(CLI::IsMember({"native", "spmf"}))
      ->capture_default_str();
}

void add_mining_flags(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--mtd", o.mtd, "maximum time duration")
      ->required()
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--mtd-semantics", o.semantics, "duration comparison")
      ->check(CLI::IsMember({"inclusive", "exclusive"}))
      ->capture_default_str();
  cmd->add_option("--ru-mode", o.ru_mode, "remaining-utility flavour")
      ->check(CLI::IsMember({"strict", "compat"}))
      ->capture_default_str();
  o.bound_opt = cmd->add_option("--bound", o.bound, "pruning bound")
                    ->check(CLI::IsMember({"opt", "original"}))
                    ->capture_default_str();
  o.init_opt =
      cmd->add_option("--init", o.init,
                      "threshold seeding lists (comma list of riu/rtu, or "
                      "none)")
          ->capture_default_str();
  o.soundness_opt =
      cmd->add_option("--init-soundness", o.init_soundness,
                      "seeding mode: safe keeps the floor a lower bound; "
                      "paper reproduces the historical seeding")
          ->check(CLI::IsMember({"safe", "paper"}))
          ->capture_default_str();
  cmd->add_option("--order", o.order, "expansion order")
      ->check(CLI::IsMember({"serial-first", "simult-first"}))
      ->capture_default_str();
  cmd->add_option("--threads", o.threads, "worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--depth-cap", o.depth_cap,
                  "search depth cap in events (0 = automatic)");
  o.timeout_opt = cmd->add_option("--timeout", o.timeout,
                                  "wall-clock budget in seconds")
                      ->check(CLI::NonNegativeNumber);
}

ComplexEventSequence load_input(const CommonOpts& o) {
  return o.format == "spmf"
             ? ComplexEventSequence::from_transactions_file(o.input)
             : ComplexEventSequence::load_native_file(o.input);
}

/// Decimal in [0, 1] to an exact numerator/denominator pair.
std::pair<std::int64_t, std::int64_t> parse_ratio(const std::string& text) {
  std::size_t dot = text.find('.');
  std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
  std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
  if (whole.empty() && frac.empty())
    throw std::invalid_argument("malformed ratio '" + text + "'");
  if (frac.size() > 18)
    throw std::invalid_argument("ratio has too many decimal places");
  for (char c : whole + frac)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("malformed ratio '" + text + "'");
  std::int64_t den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i)
    den *= 10;
  std::int64_t num = (whole.empty() ? 0 : std::stoll(whole)) * den +
                     (frac.empty() ? 0 : std::stoll(frac));
  if (num > den)
    throw std::invalid_argument("ratio must be within [0, 1]");
  return {num, den};
}

MiningConfig build_config(const CommonOpts& o) {
  MiningConfig c = MiningConfig::variant_preset(o.variant);
  c.k = o.k;
  c.mtd = o.mtd;
  c.semantics = o.semantics == "exclusive" ? MtdSemantics::exclusive
                                           : MtdSemantics::inclusive;
  c.ru_mode = o.ru_mode == "compat" ? RuMode::compat : RuMode::strict;
  if (!o.bound_opt || o.bound_opt->count())
    c.bound = o.bound == "original" ? MiningConfig::Bound::ewu_original
                                    : MiningConfig::Bound::ewu_opt;
  if (!o.init_opt || o.init_opt->count()) {
    c.init_single_utilities = false;
    c.init_timestamp_utilities = false;
    std::stringstream ss(o.init);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok == "riu")
        c.init_single_utilities = true;
      else if (tok == "rtu")
        c.init_timestamp_utilities = true;
      else if (tok == "none")
        ;  // explicit empty selection
      else
        throw std::invalid_argument("unknown --init token '" + tok + "'");
    }
  }
  if (!o.soundness_opt || o.soundness_opt->count())
    c.init_soundness = o.init_soundness == "paper"
                           ? MiningConfig::InitSoundness::paper_faithful
                           : MiningConfig::InitSoundness::safe;
  c.expansion_order = o.order == "serial-first"
                          ? MiningConfig::ExpansionOrder::serial_first
                          : MiningConfig::ExpansionOrder::simult_first;
  c.threads = static_cast<unsigned>(o.threads);
  c.depth_cap = o.depth_cap;
  if (o.timeout_opt && o.timeout_opt->count())
    c.timeout = std::chrono::milliseconds(
        static_cast<std::int64_t>(o.timeout * 1000.0));
  return c;
}

json config_json(const CommonOpts& o, const MiningConfig& c,
                 const char* mode) {
  json j{{"mode", mode},
         {"input", o.input},
         {"format", o.format},
         {"mtd", c.mtd},
         {"mtd_semantics", to_string(c.semantics)},
         {"ru_mode", to_string(c.ru_mode)},
         {"bound", to_string(c.bound)},
         {"init",
          std::string(c.init_single_utilities ? "riu" : "") +
              (c.init_single_utilities && c.init_timestamp_utilities ? ","
                                                                     : "") +
              (c.init_timestamp_utilities ? "rtu" : "")},
         {"init_soundness", to_string(c.init_soundness)},
         {"order", to_string(c.expansion_order)},
         {"variant", o.variant},
         {"threads", c.threads},
         {"depth_cap", c.depth_cap}};
  if (!c.init_single_utilities && !c.init_timestamp_utilities)
    j["init"] = "none";
  if (c.timeout)
    j["timeout_seconds"] = c.timeout->count() / 1000.0;
  if (c.fixed_min_util)
    j["min_util"] = *c.fixed_min_util;
  else if (c.fixed_min_util_ratio)
    j["min_util_ratio"] = {c.fixed_min_util_ratio->first,
                           c.fixed_min_util_ratio->second};
  else
    j["k"] = c.k;
  return j;
}

void write_output(const std::string& text,
                  const std::optional<std::string>& path) {
  if (!path) {
    std::cout << text;
    return;
  }
  std::ofstream out(*path);
  if (!out)
    throw std::runtime_error("cannot write '" + *path + "'");
  out << text;
}

int cmd_mine(const CommonOpts& o, const std::optional<std::int64_t>& min_util,
             const std::optional<std::string>& min_util_ratio,
             const std::string& report_format,
             const std::optional<std::string>& out_path) {
  const bool k_given = o.k_opt->count() > 0;
  if (k_given + min_util.has_value() + min_util_ratio.has_value() != 1)
    throw std::invalid_argument(
        "pass exactly one of --k, --min-util, --min-util-ratio");
  auto seq = load_input(o);
  MiningConfig config = build_config(o);
  HueResult result;
  const char* mode;
  if (k_given) {
    if (o.k < 1)
      throw std::invalid_argument("--k must be >= 1");
    mode = "topk";
    result = mine_topk(seq, config);
  } else {
    if (min_util) {
      if (*min_util < 0)
        throw std::invalid_argument("--min-util must be >= 0");
      config.fixed_min_util = *min_util;
    } else {
      config.fixed_min_util_ratio = parse_ratio(*min_util_ratio);
    }
    mode = "fixed";
    result = mine_fixed_threshold(seq, config);
  }
  if (report_format == "csv") {
    write_output(episodes_csv(result, seq.catalog()), out_path);
  } else if (report_format == "text") {
    write_output(episodes_text(result, seq.catalog()), out_path);
  } else {
    RunReport report{"mine", config_json(o, config, mode), host_name(),
                     build_id(), to_json(result, seq.catalog())};
    write_output(to_json(report).dump(2) + "\n", out_path);
  }
  return 0;
}

int cmd_oracle_check(const CommonOpts& o, bool force, bool corrupt,
                     const std::optional<std::string>& out_path) {
  if (o.k < 1)
    throw std::invalid_argument("--k must be >= 1");
  auto seq = load_input(o);
  MiningConfig config = build_config(o);
  auto mined = mine_topk(seq, config);
  if (corrupt && !mined.episodes.empty())
    mined.episodes.erase(mined.episodes.begin());  // deliberate test damage
  auto expected = oracle_topk(seq, o.k, config.mtd, config.semantics, force);
  auto violations = check_bound_soundness(seq, config.mtd, config.semantics,
                                          config.ru_mode, 0, force);

  std::vector<Utility> got, want;
  for (const auto& e : mined.episodes)
    got.push_back(e.utility);
  for (const auto& e : expected)
    want.push_back(e.utility);
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  const bool match = got == want && violations.empty();

  json diff = json::array();
  if (got != want) {
    auto list = [&](const char* side, auto const& entries) {
      for (const auto& e : entries)
        diff.push_back({{"side", side},
                        {"episode", e.episode.format(seq.catalog())},
                        {"utility", e.utility}});
    };
    list("miner", mined.episodes);
    list("oracle", expected);
  }
  json jviol = json::array();
  for (const auto& v : violations)
    jviol.push_back({{"ancestor", v.ancestor.format(seq.catalog())},
                     {"descendant", v.descendant.format(seq.catalog())},
                     {"bound", v.bound},
                     {"utility", v.utility}});

  RunReport report{"oracle-check", config_json(o, config, "topk"),
                   host_name(), build_id(),
                   json{{"match", match},
                        {"miner", to_json(mined, seq.catalog())},
                        {"oracle", entries_to_json(expected, seq.catalog())},
                        {"diff", std::move(diff)},
                        {"bound_violations", std::move(jviol)}}};
  write_output(to_json(report).dump(2) + "\n", out_path);
  return match ? 0 : 1;
}

int cmd_bench(const CommonOpts& o, std::vector<std::int64_t> ks,
              std::vector<std::string> variants,
              const std::string& report_format,
              const std::optional<std::string>& out_path) {
  auto seq = load_input(o);
  struct Row {
    std::string variant;
    std::int64_t k;
    bool timed_out;
    MiningStats stats;
  };
  std::vector<Row> rows;
  for (const auto& variant : variants) {
    for (std::int64_t k : ks) {
      if (k < 1)
        throw std::invalid_argument("bench k values must be >= 1");
      CommonOpts local = o;
      local.variant = variant;
      local.k = k;
      MiningConfig config = build_config(local);
      Row row{variant, k, false, {}};
      try {
        row.stats = mine_topk(seq, config).stats;
      } catch (const MiningTimeout&) {
        row.timed_out = true;
      }
      rows.push_back(std::move(row));
    }
  }

  std::ostringstream out;
  if (report_format == "json") {
    json jrows = json::array();
    for (const auto& r : rows) {
      json j{{"variant", r.variant},
             {"k", r.k},
             {"status", r.timed_out ? "timeout" : "ok"}};
      if (!r.timed_out) {
        j["candidates"] = r.stats.candidates;
        j["initial_min_util"] = r.stats.initial_min_util;
        j["final_min_util"] = r.stats.final_min_util;
        j["elapsed_seconds"] = r.stats.elapsed_seconds;
        j["peak_tracked_bytes"] = r.stats.peak_tracked_bytes;
      }
      jrows.push_back(std::move(j));
    }
    RunReport report{"bench", config_json(o, build_config(o), "bench"),
                     host_name(), build_id(), json{{"rows", jrows}}};
    out << to_json(report).dump(2) << '\n';
  } else {
    out << "variant,k,status,candidates,initial_min_util,final_min_util,"
           "elapsed_seconds,peak_tracked_bytes\n";
    for (const auto& r : rows) {
      out << r.variant << ',' << r.k << ','
          << (r.timed_out ? "timeout" : "ok") << ',';
      if (r.timed_out)
        out << "-,-,-,-,-\n";
      else
        out << r.stats.candidates << ',' << r.stats.initial_min_util << ','
            << r.stats.final_min_util << ',' << r.stats.elapsed_seconds << ','
            << r.stats.peak_tracked_bytes << '\n';
    }
  }
  write_output(out.str(), out_path);
  return 0;
}

int cmd_convert(const std::string& input,
                const std::optional<std::string>& out_path) {
  auto seq = ComplexEventSequence::from_transactions_file(input);
  write_output(seq.serialize(), out_path);
  return 0;
}

int cmd_gen(const GenParams& params, const std::optional<std::string>& out) {
  write_output(generate(params).serialize(), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"top-k high-utility episode mining over a complex event "
               "sequence"};
  app.require_subcommand(1);

  CommonOpts mine_opts;
  std::optional<std::int64_t> min_util;
  std::optional<std::string> min_util_ratio;
  std::string mine_report = "json";
  std::optional<std::string> mine_out;
  auto* mine = app.add_subcommand("mine", "mine high-utility episodes");
  add_input_flags(mine, mine_opts);
  mine_opts.k_opt = mine->add_option("--k", mine_opts.k,
                                     "number of episodes to return");
  mine->add_option("--min-util", min_util, "fixed absolute threshold");
  mine->add_option("--min-util-ratio", min_util_ratio,
                   "fixed threshold as a fraction of the total utility");
  add_mining_flags(mine, mine_opts);
  mine->add_option("--variant", mine_opts.variant, "configuration preset")
      ->capture_default_str();
  mine->add_option("--report", mine_report, "output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  mine->add_option("--out", mine_out, "write the report here (else stdout)");

  CommonOpts check_opts;
  bool check_force = false;
  bool check_corrupt = false;
  std::optional<std::string> check_out;
  auto* check = app.add_subcommand(
      "oracle-check", "compare mining results against exhaustive search");
  add_input_flags(check, check_opts);
  check_opts.k_opt =
      check->add_option("--k", check_opts.k, "number of episodes")
          ->required();
  add_mining_flags(check, check_opts);
  check->add_option("--variant", check_opts.variant, "configuration preset")
      ->capture_default_str();
  check->add_flag("--force", check_force,
                  "run the exhaustive search even on large instances");
  check->add_flag("--corrupt", check_corrupt)->group("");  // self-test hook
  check->add_option("--out", check_out, "write the report here");

  CommonOpts bench_opts;
  std::vector<std::int64_t> bench_ks{10};
  std::vector<std::string> bench_variants{"thue"};
  std::string bench_report = "csv";
  std::optional<std::string> bench_out;
  auto* bench = app.add_subcommand("bench", "time variants across k values");
  add_input_flags(bench, bench_opts);
  bench_opts.k_opt = bench
                         ->add_option("--k", bench_ks,
                                      "k values (comma separated)")
                         ->delimiter(',')
                         ->capture_default_str();
  add_mining_flags(bench, bench_opts);
  bench->add_option("--variants", bench_variants,
                    "configuration presets (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--report", bench_report, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  bench->add_option("--out", bench_out, "write the table here");

  std::string convert_input;
  std::optional<std::string> convert_out;
  auto* convert = app.add_subcommand(
      "convert", "rewrite transaction data in the native format");
  convert->add_option("--input", convert_input, "transaction file")
      ->required()
      ->check(CLI::ExistingFile);
  convert->add_option("--out", convert_out, "output path (else stdout)");

  GenParams gen_params;
  std::optional<std::string> gen_out;
  auto* gen = app.add_subcommand("gen", "generate a synthetic sequence");
  gen->add_option("--seed", gen_params.seed, "generator seed")
      ->capture_default_str();
  gen->add_option("--timestamps", gen_params.timestamps, "sequence length")
      ->capture_default_str();
  gen->add_option("--event-types", gen_params.event_types, "catalog size")
      ->capture_default_str();
  gen->add_option("--min-set-size", gen_params.min_set_size, "")
      ->capture_default_str();
  gen->add_option("--max-set-size", gen_params.max_set_size, "")
      ->capture_default_str();
  gen->add_option("--min-qty", gen_params.min_quantity, "")
      ->capture_default_str();
  gen->add_option("--max-qty", gen_params.max_quantity, "")
      ->capture_default_str();
  gen->add_option("--util-mu", gen_params.util_mu, "")
      ->capture_default_str();
  gen->add_option("--util-sigma", gen_params.util_sigma, "")
      ->capture_default_str();
  gen->add_option("--util-scale", gen_params.util_scale, "")
      ->capture_default_str();
  gen->add_option("--util-min", gen_params.util_min, "")
      ->capture_default_str();
  gen->add_option("--util-max", gen_params.util_max, "")
      ->capture_default_str();
  gen->add_option("--dup-prob", gen_params.duplicate_set_probability,
                  "probability of repeating an earlier set")
      ->capture_default_str();
  gen->add_option("--out", gen_out, "output path (else stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*mine)
      return cmd_mine(mine_opts, min_util, min_util_ratio, mine_report,
                      mine_out);
    if (*check)
      return cmd_oracle_check(check_opts, check_force, check_corrupt,
                              check_out);
    if (*bench)
      return cmd_bench(bench_opts, bench_ks, bench_variants, bench_report,
                       bench_out);
    if (*convert)
      return cmd_convert(convert_input, convert_out);
    if (*gen)
      return cmd_gen(gen_params, gen_out);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 3;
  } catch (const GuardError& e) {
    std::cerr << e.what() << '\n';
    return 4;
  } catch (const SearchLimitError& e) {
    std::cerr << e.what() << '\n';
    return 4;
  } catch (const MiningTimeout& e) {
    std::cerr << e.what() << '\n';
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
