#include "knotgenus/cli.hpp"

#include "knotgenus/code.hpp"
#include "knotgenus/dt.hpp"
#include "knotgenus/genus.hpp"
#include "knotgenus/moves.hpp"
#include "knotgenus/oracle.hpp"
#include "knotgenus/search.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

namespace knotgenus::cli {

namespace {

using json = nlohmann::ordered_json;

/// One per-input record: flat JSON fields plus the text rendering.
struct Report {
  json fields;
  std::vector<std::string> text;
  int status = success;
};

std::string trim(std::string s) {
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::string pass_name(Pass p) { return p == Pass::over ? "over" : "under"; }

std::string join(const std::vector<Label>& labels, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < labels.size(); ++i)
    os << (i ? sep : "") << labels[i];
  return os.str();
}

std::vector<Label> parse_labels(const std::string& text) {
  std::vector<Label> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; }))
      throw InvalidInput("bad label list '" + text + "'");
    out.push_back(static_cast<Label>(std::stoul(item)));
  }
  if (out.empty())
    throw InvalidInput("empty label list");
  return out;
}

Report start(const char* op, const std::string& input) {
  Report r;
  r.fields["op"] = op;
  r.fields["input"] = input;
  return r;
}

void add_genus_fields(Report& r, const GaussCode& code, const CycleDecomposition& dec) {
  const std::size_t g = genus(code, dec);
  if (genus_oracle(code) != g || boundary_components(code) != dec.count() + 1)
    throw InvariantViolation("cycle count disagrees with the ribbon-surface oracle");
  r.fields["code"] = serialize(code);
  r.fields["n"] = code.crossings();
  r.fields["s"] = dec.count();
  r.fields["genus"] = g;
}

std::string genus_line(const GaussCode& code, const CycleDecomposition& dec) {
  std::ostringstream os;
  os << "n=" << code.crossings() << " s=" << dec.count() << " g=" << genus(code, dec);
  return os.str();
}

Report op_validate(const std::string& input) {
  Report r = start("validate", input);
  const auto code = parse_gauss(input);
  r.fields["valid"] = true;
  r.fields["code"] = serialize(code);
  r.fields["n"] = code.crossings();
  r.fields["signed"] = code.is_signed();
  r.fields["canonical"] = serialize(canonical_form(code));
  r.text.push_back("valid n=" + std::to_string(code.crossings()) + " canonical=" + serialize(canonical_form(code)));
  return r;
}

Report op_genus(const std::string& input, bool with_cycles) {
  Report r = start(with_cycles ? "cycles" : "genus", input);
  const auto code = parse_gauss(input);
  const auto dec = cycles(code);
  add_genus_fields(r, code, dec);
  r.text.push_back(genus_line(code, dec));
  if (with_cycles) {
    json list = json::array();
    for (const auto& c : dec.cycles) {
      std::string s = to_string(units_at(code, c.recorded));
      list.push_back(s);
      r.text.push_back(s);
    }
    r.fields["cycles"] = list;
  }
  return r;
}

Report op_bridges(const std::string& input, const std::string& kind_name, std::size_t min_len) {
  Report r = start("bridges", input);
  const auto code = parse_gauss(input);
  const auto dec = cycles(code);
  add_genus_fields(r, code, dec);
  const BridgeKind kind = kind_name == "over"    ? BridgeKind::over
                          : kind_name == "under" ? BridgeKind::under
                                                 : BridgeKind::both;
  json list = json::array();
  r.text.push_back(genus_line(code, dec));
  for (const auto& b : enumerate_bridges(code, kind, min_len)) {
    const bool strict = strictly_decreases(code, b);
    const std::size_t kg = knotoid_genus(code, b);
    if (strict != (kg < genus(code, dec)))
      throw InvariantViolation("strict-decrease predicate disagrees with knotoid genus");
    list.push_back({{"kind", pass_name(b.kind)},
                    {"labels", b.labels},
                    {"positions", b.positions},
                    {"length", b.length()},
                    {"strictly_decreases", strict},
                    {"knotoid_genus", kg}});
    r.text.push_back(pass_name(b.kind) + " " + join(b.labels) + " strict=" + (strict ? "yes" : "no") +
                     " knotoid_genus=" + std::to_string(kg));
  }
  r.fields["bridges"] = list;
  return r;
}

Report op_move(const std::string& input, const std::string& labels) {
  Report r = start("move", input);
  const auto code = parse_gauss(input);
  const auto bridge = find_maximal_bridge(code, parse_labels(labels));
  const auto mo = bridge_replace(code, bridge);

  const std::size_t before = genus(code);
  const std::size_t after = genus(mo.result);
  const std::size_t expected = knotoid_genus(code, bridge);
  if (after != expected || after > before)
    throw InvariantViolation("move result genus " + std::to_string(after) + " differs from knotoid genus " +
                             std::to_string(expected));
  if (mo.strict_decrease_predicted != (after < before))
    throw InvariantViolation("strict-decrease prediction failed");

  r.fields["bridge"] = bridge.labels;
  r.fields["kind"] = pass_name(bridge.kind);
  r.fields["genus"] = before;
  r.fields["result"] = serialize(mo.result);
  r.fields["result_n"] = mo.result.crossings();
  r.fields["result_genus"] = after;
  r.fields["reduced"] = serialize(mo.reduced);
  r.fields["anchor"] = mo.anchor ? to_string(*mo.anchor) : "";
  r.fields["guide_cycle"] = to_string(mo.guide_cycle);
  r.fields["pattern_labels"] = mo.pattern_labels;
  r.fields["inserted_labels"] = mo.inserted_labels;
  r.fields["strict_decrease_predicted"] = mo.strict_decrease_predicted;

  r.text.push_back(serialize(mo.result));
  r.text.push_back("anchor=" + (mo.anchor ? to_string(*mo.anchor) : std::string("-")) +
                   " patterns=" + join(mo.pattern_labels) + " inserted=" + join(mo.inserted_labels));
  r.text.push_back("reduced=" + serialize(mo.reduced));
  r.text.push_back("guide=" + to_string(mo.guide_cycle));
  r.text.push_back("genus " + std::to_string(before) + " -> " + std::to_string(after) +
                   (mo.strict_decrease_predicted ? " (strict)" : ""));
  return r;
}

Report op_reduce(const std::string& input) {
  Report r = start("reduce", input);
  const auto code = parse_gauss(input);
  const auto red = rii_reduce_traced(code);
  const std::size_t before = genus(code);
  const std::size_t after = genus(red.result);
  if (after > before || red.result.crossings() + 2 * red.cancelled.size() != code.crossings() ||
      find_rii_pair(red.result))
    throw InvariantViolation("Reidemeister II reduction postcondition failed");
  json pairs = json::array();
  for (auto [a, b] : red.cancelled)
    pairs.push_back({a, b});
  r.fields["genus"] = before;
  r.fields["result"] = serialize(red.result);
  r.fields["result_n"] = red.result.crossings();
  r.fields["result_genus"] = after;
  r.fields["cancelled"] = pairs;
  r.text.push_back(serialize(red.result));
  r.text.push_back("cancelled=" + std::to_string(red.cancelled.size()) + " genus " + std::to_string(before) +
                   " -> " + std::to_string(after));
  return r;
}

Report op_knotoid(const std::string& input, const std::string& labels) {
  Report r = start("knotoid-genus", input);
  const auto code = parse_gauss(input);
  const auto bridge = find_bridge(code, parse_labels(labels));
  const std::size_t kg = knotoid_genus(code, bridge);
  r.fields["bridge"] = bridge.labels;
  r.fields["kind"] = pass_name(bridge.kind);
  r.fields["genus"] = genus(code);
  r.fields["knotoid_genus"] = kg;
  r.fields["knotoid_code"] = serialize(remove_chords(code, bridge.labels));
  r.text.push_back("knotoid_genus=" + std::to_string(kg));
  return r;
}

Report op_import_dt(const std::string& input, const std::string& signs) {
  Report r = start("import-dt", input);
  GaussCode code = dt_to_gauss(parse_dt(input));
  if (!signs.empty()) {
    if (signs.size() != code.crossings())
      throw InvalidInput("--signs needs one of '+'/'-' per crossing (" + std::to_string(code.crossings()) + ")");
    std::map<Label, Sign> map;
    for (std::size_t i = 0; i < signs.size(); ++i) {
      if (signs[i] != '+' && signs[i] != '-')
        throw InvalidInput("--signs accepts only '+' and '-'");
      map[static_cast<Label>(i + 1)] = signs[i] == '+' ? Sign::positive : Sign::negative;
    }
    code = attach_signs(code, map);
  }
  const auto dec = cycles(code);
  add_genus_fields(r, code, dec);
  r.text.push_back(serialize(code));
  r.text.push_back(genus_line(code, dec));
  return r;
}

Report op_search(const std::string& input, const SearchConfig& config) {
  Report r = start("search", input);
  const auto code = parse_gauss(input);
  const auto res = search(code, config);
  if (res.best_genus > res.input_genus || genus(res.best_code) != res.best_genus)
    throw InvariantViolation("search result genus inconsistent");
  r.fields["input_genus"] = res.input_genus;
  r.fields["best_genus"] = res.best_genus;
  r.fields["best_code"] = serialize(res.best_code);
  r.fields["best_n"] = res.best_code.crossings();
  r.fields["nodes_expanded"] = res.nodes_expanded;
  r.fields["duplicates_pruned"] = res.duplicates_pruned;
  r.fields["exhausted"] = res.exhausted;
  json trace = json::array();
  std::size_t previous = res.input_genus;
  for (const auto& step : res.move_trace) {
    if (step.genus > previous)
      throw InvariantViolation("search trace genus increased");
    previous = step.genus;
    json pairs = json::array();
    for (auto [a, b] : step.rii_cancelled)
      pairs.push_back({a, b});
    trace.push_back({{"kind", pass_name(step.bridge_kind)},
                     {"bridge", step.bridge_labels},
                     {"pattern_labels", step.pattern_labels},
                     {"genus_after_move", step.genus_after_move},
                     {"rii_cancelled", pairs},
                     {"code", serialize(step.code)},
                     {"genus", step.genus}});
  }
  r.fields["trace"] = trace;

  r.text.push_back("best_genus=" + std::to_string(res.best_genus) + " input_genus=" + std::to_string(res.input_genus) +
                   " nodes_expanded=" + std::to_string(res.nodes_expanded) +
                   " duplicates_pruned=" + std::to_string(res.duplicates_pruned));
  r.text.push_back(serialize(res.best_code));
  for (const auto& step : res.move_trace)
    r.text.push_back("  " + pass_name(step.bridge_kind) + " " + join(step.bridge_labels) + " -> g=" +
                     std::to_string(step.genus) + " n=" + std::to_string(step.code.crossings()) +
                     " rii=" + std::to_string(step.rii_cancelled.size()));
  return r;
}

/// Runs `op`, turning exceptions into an error report with the right status.
Report guarded(const char* op, const std::string& input, const std::function<Report()>& body) {
  try {
    return body();
  } catch (const InvalidInput& e) {
    Report r = start(op, input);
    r.fields["error"] = e.what();
    r.status = invalid_input;
    return r;
  } catch (const InvariantViolation& e) {
    Report r = start(op, input);
    r.fields["error"] = std::string("internal invariant violation: ") + e.what();
    r.status = internal_error;
    return r;
  }
}

int emit(const Report& r, bool as_json, std::ostream& out, std::ostream& err) {
  if (r.status != success)
    err << "error: " << r.fields["error"].get<std::string>() << '\n';
  if (as_json) {
    out << r.fields.dump() << '\n';
  } else {
    for (const auto& line : r.text)
      out << line << '\n';
  }
  return r.status;
}

std::string read_code(const std::string& arg, std::istream& in) {
  if (arg != "-")
    return arg;
  return trim(std::string(std::istreambuf_iterator<char>(in), {}));
}

// CLI11 reads "-12 26 ..." as a short option; hide a leading minus sign
// on positional DT arguments behind a marker and restore it afterwards.
constexpr char negative_marker = '\x01';

std::vector<std::string> protect_negatives(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.size() > 1 && a[0] == '-' && (a[1] >= '0' && a[1] <= '9'))
      a[0] = negative_marker;
  return args;
}

std::string restore_negative(std::string s) {
  if (!s.empty() && s[0] == negative_marker)
    s[0] = '-';
  return s;
}

} // namespace

int run(const std::vector<std::string>& raw_args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Canonical (Seifert) genus of knot, knotoid and virtual-knot diagrams from Gauss codes", "knotgenus"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string code_arg, bridge_arg, kind = "both", file, op = "genus", input_kind = "gauss", signs;
  std::size_t min_len = 1;
  SearchConfig config;
  std::string strategy = "greedy";
  std::size_t beam = 0;
  bool no_rii = false;

  auto* validate_cmd = app.add_subcommand("validate", "Check a Gauss code");
  validate_cmd->add_option("code", code_arg, "Gauss code or - for stdin")->required();

  auto* genus_cmd = app.add_subcommand("genus", "Canonical genus of a Gauss code");
  genus_cmd->add_option("code", code_arg, "Gauss code or - for stdin")->required();

  auto* cycles_cmd = app.add_subcommand("cycles", "Seifert circles of a Gauss code");
  cycles_cmd->add_option("code", code_arg, "Gauss code or - for stdin")->required();

  auto* bridges_cmd = app.add_subcommand("bridges", "Maximal bridges of a Gauss code");
  bridges_cmd->add_option("code", code_arg, "Gauss code or - for stdin")->required();
  bridges_cmd->add_option("--kind", kind, "over, under or both")
      ->check(CLI::IsMember({"over", "under", "both"}))
      ->capture_default_str();
  bridges_cmd->add_option("--min-len", min_len, "Minimum bridge length")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* move_cmd = app.add_subcommand("move", "Bridge-replacing move");
  move_cmd->add_option("code", code_arg, "Signed Gauss code or - for stdin")->required();
  move_cmd->add_option("--bridge", bridge_arg, "Comma-separated labels of a maximal bridge")->required();

  auto* reduce_cmd = app.add_subcommand("reduce", "Reidemeister II reduction");
  reduce_cmd->add_option("code", code_arg, "Signed Gauss code or - for stdin")->required();

  auto* knotoid_cmd = app.add_subcommand("knotoid-genus", "Genus after removing a bridge");
  knotoid_cmd->add_option("code", code_arg, "Gauss code or - for stdin")->required();
  knotoid_cmd->add_option("--bridge", bridge_arg, "Comma-separated labels of a bridge")->required();

  auto* dt_cmd = app.add_subcommand("import-dt", "Convert a Dowker-Thistlethwaite code");
  dt_cmd->add_option("dt", code_arg, "DT code (quoted) or - for stdin")->required();
  dt_cmd->add_option("--signs", signs, "Crossing signs in label order, e.g. +-+");

  auto add_search_options = [&](CLI::App* cmd) {
    cmd->add_option("--strategy", strategy, "greedy or bfs")
        ->check(CLI::IsMember({"greedy", "bfs"}))
        ->capture_default_str();
    cmd->add_option("--depth", config.max_depth, "Maximum number of moves")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_option("--beam", beam, "Beam width for greedy search (0 = unlimited)")->capture_default_str();
    cmd->add_option("--min-len", config.min_bridge_len, "Minimum bridge length")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    cmd->add_flag("--no-rii", no_rii, "Skip Reidemeister II reduction after moves");
    cmd->add_flag("--strict-only", config.only_strict, "Only expand moves that strictly lower the genus");
    cmd->add_option("--threads", config.threads, "Worker threads (0 = all cores)")->capture_default_str();
  };

  auto* search_cmd = app.add_subcommand("search", "Minimize genus by bridge-replacing moves");
  search_cmd->add_option("code", code_arg, "Signed Gauss code or - for stdin")->required();
  add_search_options(search_cmd);

  auto* batch_cmd = app.add_subcommand("batch", "Process a file with one code per line");
  batch_cmd->add_option("file", file, "Input file or - for stdin")->required();
  batch_cmd->add_option("--op", op, "genus or search")->check(CLI::IsMember({"genus", "search"}))->capture_default_str();
  batch_cmd->add_option("--input", input_kind, "gauss or dt")->check(CLI::IsMember({"gauss", "dt"}))->capture_default_str();
  add_search_options(batch_cmd);

  std::vector<std::string> args = protect_negatives(raw_args);
  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return success;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return success;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return invalid_input;
  }

  code_arg = restore_negative(code_arg);
  config.apply_rii = !no_rii;
  config.strategy = strategy == "bfs" ? SearchStrategy::breadth_first : SearchStrategy::greedy;
  config.beam_width = beam == 0 ? std::nullopt : std::optional<std::size_t>(beam);
  const bool as_json = format == "json";

  if (*batch_cmd) {
    std::vector<BatchLine> lines;
    if (file == "-") {
      lines = read_batch(in);
    } else {
      std::ifstream f(file);
      if (!f) {
        err << "error: cannot open " << file << '\n';
        return invalid_input;
      }
      lines = read_batch(f);
    }

    auto process = [&](const std::string& text) -> Report {
      if (op == "search")
        return guarded("search", text, [&] {
          SearchConfig per_line = config;
          per_line.threads = 1;
          return op_search(text, per_line);
        });
      if (input_kind == "dt")
        return guarded("import-dt", text, [&] { return op_import_dt(text, ""); });
      return guarded("genus", text, [&] { return op_genus(text, false); });
    };

    std::vector<Report> reports(lines.size());
    std::size_t workers = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
    workers = std::max<std::size_t>(1, std::min(workers, lines.size()));
    std::atomic<std::size_t> cursor{0};
    {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
          for (std::size_t i = cursor++; i < lines.size(); i = cursor++)
            reports[i] = process(lines[i].text);
        });
    }

    int status = success;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      Report& r = reports[i];
      r.fields["line"] = lines[i].line_number;
      if (r.status != success)
        err << "line " << lines[i].line_number << ": " << r.fields["error"].get<std::string>() << '\n';
      if (as_json) {
        out << r.fields.dump() << '\n';
      } else {
        std::string summary;
        if (r.status != success)
          summary = "error: " + r.fields["error"].get<std::string>();
        else if (op == "search")
          summary = r.text.front() + " best_code=" + r.text[1];
        else
          summary = r.text.back();
        out << lines[i].text << '\t' << summary << '\n';
      }
      status = std::max(status, r.status);
    }
    return status;
  }

  const std::string input = read_code(code_arg, in);
  Report r;
  if (*validate_cmd)
    r = guarded("validate", input, [&] { return op_validate(input); });
  else if (*genus_cmd)
    r = guarded("genus", input, [&] { return op_genus(input, false); });
  else if (*cycles_cmd)
    r = guarded("cycles", input, [&] { return op_genus(input, true); });
  else if (*bridges_cmd)
    r = guarded("bridges", input, [&] { return op_bridges(input, kind, min_len); });
  else if (*move_cmd)
    r = guarded("move", input, [&] { return op_move(input, bridge_arg); });
  else if (*reduce_cmd)
    r = guarded("reduce", input, [&] { return op_reduce(input); });
  else if (*knotoid_cmd)
    r = guarded("knotoid-genus", input, [&] { return op_knotoid(input, bridge_arg); });
  else if (*dt_cmd)
    r = guarded("import-dt", input, [&] { return op_import_dt(input, signs); });
  else if (*search_cmd)
    r = guarded("search", input, [&] { return op_search(input, config); });
  return emit(r, as_json, out, err);
}

} // namespace knotgenus::cli
