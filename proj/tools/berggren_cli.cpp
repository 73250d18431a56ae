// berggren: command-line front end over the library.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or validation error.

#include "berggren/berggren.hpp"
#include "berggren/verify.hpp"
#include "record.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace berggren;
using berggren::cli::format;
using berggren::cli::json;

constexpr int exit_ok = 0;
constexpr int exit_verify_failed = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ppt read_triple(const std::string& text) {
  auto raw = cli::parse_triple(text);
  if (!raw) throw usage_error("--triple expects x,y,z with decimal integers, got '" + text + "'");
  auto v = validate_triple(*raw);
  if (v.swapped) std::cerr << "note: legs swapped into (odd, even, hypotenuse) order\n";
  return v.triple;
}

bigint read_bigint(const std::string& text, const char* flag) {
  bigint out;
  if (!parse_bigint(text, out)) throw usage_error(std::string(flag) + " expects a decimal integer, got '" + text + "'");
  return out;
}

format resolve_format(const std::string& flag) {
  std::string name = flag;
  if (name.empty()) {
    const char* env = std::getenv("BERGGREN_FORMAT");
    name = env ? env : "json";
  }
  auto f = cli::parse_format(name);
  if (!f) throw usage_error("unknown format '" + name + "' (json|csv)");
  return *f;
}

void print_record(const ppt& t, const std::optional<tree_path>& path, format f, json extra = json::object()) {
  if (f == format::csv) {
    std::cout << cli::csv_header() << '\n' << cli::csv_row(t, path) << '\n';
    return;
  }
  json j = cli::triple_record(t, path);
  for (auto& [key, value] : extra.items()) j[key] = value;
  std::cout << j.dump() << '\n';
}

// Hidden test hook: "L:row:col:delta" perturbs one generator entry.
generator_set mutated_generators(const std::string& spec) {
  generator_set g = generator_set::standard();
  if (spec.empty()) return g;
  char l = 0;
  int row = 0, col = 0;
  long long delta = 0;
  if (std::sscanf(spec.c_str(), "%c:%d:%d:%lld", &l, &row, &col, &delta) != 4 || !letter_from_char(l) || row < 0 ||
      row > 2 || col < 0 || col > 2)
    throw usage_error("--mutate expects L:row:col:delta");
  g[*letter_from_char(l)](row, col) += delta;
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berggren tree of primitive Pythagorean triples"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format_flag;
  app.add_option("--format", format_flag, "Output format: json|csv (default: $BERGGREN_FORMAT or json)");

  std::string triple_text = "3,4,5";
  std::string path_text;
  auto* descend_cmd = app.add_subcommand("descend", "Apply a path over {A,B,C} to a triple");
  descend_cmd->add_option("--triple", triple_text, "Start triple x,y,z")->capture_default_str();
  descend_cmd->add_option("--path", path_text, "Word over A, B, C (empty = no descent)");

  auto* locate_cmd = app.add_subcommand("locate", "Print the unique path from (3,4,5) to a triple");
  locate_cmd->add_option("--triple", triple_text, "Triple x,y,z")->required();

  std::string max_z_text;
  unsigned jobs = 1;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "Stream every tree node with z <= N, breadth first");
  enumerate_cmd->add_option("--max-z", max_z_text, "Hypotenuse bound N >= 5")->required();
  enumerate_cmd->add_option("--jobs", jobs, "Worker threads (output order is unchanged)");

  std::string r_text;
  bool count_only = false;
  auto* inradius_cmd = app.add_subcommand("inradius", "All primitive triples with inradius R");
  inradius_cmd->add_option("--r", r_text, "Inradius R >= 1")->required();
  inradius_cmd->add_flag("--count-only", count_only, "Print only the number of triples");

  std::string letter_text;
  std::uint64_t chain_n = 1;
  auto* chain_cmd = app.add_subcommand("chain", "Triple and radii of L^n (3,4,5)");
  chain_cmd->add_option("--letter", letter_text, "A, B or C")->required();
  chain_cmd->add_option("--n", chain_n, "Chain index n >= 1")->required();

  auto* geometry_cmd = app.add_subcommand("geometry", "Triangle spanned by the three children of a triple");
  geometry_cmd->add_option("--triple", triple_text, "Triple x,y,z")->required();

  verify::options vopt;
  std::string mutate;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "Check every identity against brute-force oracles");
  verify_cmd->add_option("--max-z", vopt.max_z, "Hypotenuse bound for tree and geometry checks")->capture_default_str();
  verify_cmd->add_option("--max-n", vopt.max_n, "Power / chain index bound")->capture_default_str();
  verify_cmd->add_option("--max-r", vopt.max_r, "Inradius bound")->capture_default_str();
  verify_cmd->add_option("--max-lemma-n", vopt.max_lemma_n, "Bound for A^(n-1)(3,4,5) = F(1,n)")->capture_default_str();
  verify_cmd->add_option("--samples", vopt.samples, "Random paths for the round-trip check")->capture_default_str();
  verify_cmd->add_option("--max-depth", vopt.max_depth, "Random path length bound")->capture_default_str();
  verify_cmd->add_option("--seed", vopt.seed, "Seed for random paths")->capture_default_str();
  verify_cmd->add_option("--jobs", vopt.jobs, "Run checks on this many threads");
  verify_cmd->add_flag("--timing", timing, "Append wall-clock seconds per check");
  verify_cmd->add_option("--mutate", mutate)->group("");  // hidden: perturb a generator entry

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    const format fmt = resolve_format(format_flag);

    if (*descend_cmd) {
      const ppt start = read_triple(triple_text);
      const tree_path word = tree_path::parse(path_text);
      const ppt end = standard_tree().descend_path(word, start);
      print_record(end, path_of(end), fmt);
    } else if (*locate_cmd) {
      const ppt t = read_triple(triple_text);
      print_record(t, path_of(t), fmt);
    } else if (*enumerate_cmd) {
      const bigint bound = read_bigint(max_z_text, "--max-z");
      if (bound < 5) throw usage_error("--max-z must be at least 5");
      if (fmt == format::csv) std::cout << cli::csv_header() << '\n';
      auto emit = [fmt](const tree_node& node) {
        if (fmt == format::csv)
          std::cout << cli::csv_row(node.triple, node.path) << '\n';
        else
          std::cout << cli::triple_record(node.triple, node.path).dump() << '\n';
      };
      if (jobs > 1) {
        for (const auto& node : standard_tree().enumerate_parallel(bound, jobs)) emit(node);
      } else {
        for (const auto& node : enumerate_tree(bound)) emit(node);
      }
    } else if (*inradius_cmd) {
      const bigint r = read_bigint(r_text, "--r");
      if (r < 1) throw usage_error("--r must be at least 1");
      if (count_only) {
        std::cout << count_with_inradius(r) << '\n';
      } else if (fmt == format::csv) {
        std::cout << cli::csv_header() << '\n';
        for (const auto& t : enumerate_with_inradius(r)) std::cout << cli::csv_row(t, std::nullopt) << '\n';
      } else {
        for (const auto& t : enumerate_with_inradius(r)) std::cout << cli::triple_record(t, std::nullopt).dump() << '\n';
      }
    } else if (*chain_cmd) {
      const auto l = letter_text.size() == 1 ? letter_from_char(letter_text[0]) : std::nullopt;
      if (!l) throw usage_error("--letter must be A, B or C");
      if (chain_n < 1) throw usage_error("--n must be at least 1");
      const chain_point cp = make_chain_point(*l, chain_n);
      std::optional<tree_path> path;
      if (chain_n <= 100000) path = tree_path(std::vector<letter>(chain_n, *l));
      print_record(cp.triple, path, fmt,
                   {{"letter", std::string(1, to_char(*l))}, {"n", std::to_string(chain_n)}});
    } else if (*geometry_cmd) {
      const ppt t = read_triple(triple_text);
      print_record(t, path_of(t), fmt, {{"geometry", cli::geometry_block(descendant_triangle_metrics(t))}});
    } else if (*verify_cmd) {
      const tree tr(mutated_generators(mutate));
      bool all = true;
      for (const auto& res : verify::run_all(vopt, tr)) {
        all = all && res.passed;
        std::cout << (res.passed ? "PASS  " : "FAIL  ") << res.name << "  [" << res.detail << ']';
        if (timing) std::cout << "  " << res.seconds << "s";
        std::cout << '\n';
      }
      std::cout << (all ? "all checks passed" : "verification FAILED") << '\n';
      return all ? exit_ok : exit_verify_failed;
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const berggren::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_ok;
}
