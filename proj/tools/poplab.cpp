// poplab: command-line front end.
//
// Exit codes: 0 success or passing suite, 1 failing suite, 2 usage or input error.

#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "poplab/bijections.hpp"
#include "poplab/catalog.hpp"
#include "poplab/data.hpp"
#include "poplab/dsl.hpp"
#include "poplab/enumerate.hpp"
#include "poplab/error.hpp"
#include "poplab/stats.hpp"
#include "poplab/suites.hpp"

namespace fs = std::filesystem;
using namespace poplab;

namespace {

// "@path" names a file; a bare name or a missing path falls back to the
// bundled directory, with or without ".json".
fs::path resolve(const std::string& ref, const std::string& bundled) {
  const std::string name = !ref.empty() && ref[0] == '@' ? ref.substr(1) : ref;
  if (fs::exists(name)) return name;
  const fs::path dir = data_dir() / bundled;
  for (const fs::path& candidate : {dir / name, dir / (name + ".json")}) {
    if (fs::exists(candidate)) return candidate;
  }
  const fs::path stem = fs::path(name).filename();
  for (const fs::path& candidate : {dir / stem, dir / (stem.string() + ".json")}) {
    if (fs::exists(candidate)) return candidate;
  }
  throw Error("cannot find " + bundled + " file '" + name + "'");
}

PopPattern read_pattern(const std::string& text, const std::optional<std::string>& poset) {
  if (!text.empty() && text[0] == '@') return load_pattern(resolve(text, "patterns"));
  if (poset) return parse_pattern(text, load_poset(resolve(*poset, "posets")));
  return parse_pattern(text);
}

std::vector<PopPattern> read_patterns(const std::vector<std::string>& texts) {
  std::vector<PopPattern> out;
  for (const auto& t : texts) out.push_back(read_pattern(t, std::nullopt));
  return out;
}

std::string rational_text(const Rational& r) {
  return r.get_den() == 1 ? r.get_num().get_str() : r.get_str();
}

void print_sequence(const std::vector<Integer>& values, int first, const std::string& format) {
  if (format == "json") {
    nlohmann::json j = {{"first", first}, {"values", nlohmann::json::array()}};
    for (const auto& v : values) j["values"].push_back(v.get_str());
    std::cout << j.dump() << '\n';
  } else if (format == "csv") {
    std::cout << "n,value\n";
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << first + static_cast<int>(i) << ',' << values[i].get_str() << '\n';
  } else {
    std::cout << to_bfile(values, first);
  }
}

void print_rows(const std::vector<std::vector<Integer>>& rows, const std::string& format) {
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json r = nlohmann::json::array();
      for (const auto& v : row) r.push_back(v.get_str());
      j.push_back(r);
    }
    std::cout << j.dump() << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.size());
  if (format == "csv") {
    std::cout << 'n';
    for (std::size_t k = 0; k < width; ++k) std::cout << ",y^" << k;
    std::cout << '\n';
  }
  const char sep = format == "csv" ? ',' : ' ';
  for (std::size_t n = 0; n < rows.size(); ++n) {
    std::cout << n;
    for (std::size_t k = 0; k < width; ++k) std::cout << sep << (k < rows[n].size() ? rows[n][k].get_str() : "0");
    std::cout << '\n';
  }
}

CatalogParams parse_params(const std::vector<std::string>& items) {
  CatalogParams out;
  for (const auto& item : items) {
    std::stringstream list(item);
    std::string kv;
    while (std::getline(list, kv, ',')) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos || eq == 0) throw Error("parameter '" + kv + "' is not key=value");
      try {
        out[kv.substr(0, eq)] = std::stoi(kv.substr(eq + 1));
      } catch (const std::logic_error&) {
        throw Error("parameter '" + kv + "' needs an integer value");
      }
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partially ordered pattern laboratory"};
  app.require_subcommand(1);

  std::string format = "bfile";
  int jobs = 1;
  auto add_shared = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"bfile", "csv", "json", "text"}));
    cmd->add_option("--jobs", jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
  };

  std::string pattern_text;
  std::optional<std::string> poset_ref;
  int n = 0;
  std::vector<std::string> restrict_texts;

  auto* count = app.add_subcommand("count", "Avoider counts for n = 1..N");
  count->add_option("--pattern", pattern_text, "Pattern text or @file.json")->required();
  count->add_option("--poset", poset_ref, "Poset @file.json or bundled name");
  count->add_option("--n", n, "Largest length")->required()->check(CLI::NonNegativeNumber);
  count->add_option("--restrict", restrict_texts, "Additional patterns to avoid");
  add_shared(count);

  std::string stat = "occurrences";
  auto* dist = app.add_subcommand("distribution", "Distribution of a pattern over S_n");
  dist->add_option("--pattern", pattern_text, "Pattern text or @file.json")->required();
  dist->add_option("--poset", poset_ref, "Poset @file.json or bundled name");
  dist->add_option("--n", n, "Length")->required()->check(CLI::NonNegativeNumber);
  dist->add_option("--restrict", restrict_texts, "Patterns the permutations must avoid");
  dist->add_option("--stat", stat, "Statistic")->check(CLI::IsMember({"occurrences", "nonoverlap"}));
  add_shared(dist);

  std::string form;
  std::vector<std::string> params;
  int order = 10;
  bool as_counts = false;
  auto* series = app.add_subcommand("series", "Coefficients of a catalogued generating function");
  series->add_option("--form", form, "Form id C1..C20")->required();
  series->add_option("--params", params, "key=value pairs, comma separated");
  series->add_option("--order", order, "Truncation order")->check(CLI::NonNegativeNumber);
  series->add_flag("--as-counts", as_counts, "Print n! [x^n] for exponential forms");
  add_shared(series);

  std::string suite = "all";
  bool slow = false;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name or all");
  verify->add_flag("--slow", slow, "Include the n = 9 open-problem values");
  verify->add_flag("--timing", timing, "Report wall-clock times");
  add_shared(verify);

  std::string input;
  int k = 0;
  auto* bij = app.add_subcommand("bijection", "Apply a bijection");
  auto* cyc = bij->add_subcommand("cycles", "Cycle form <-> avoider of a-a1..ak");
  cyc->add_option("--input", input, "\"(1 2)(3 4)\" or a one-line avoider")->required();
  cyc->add_option("--k", k, "Largest cycle length")->required()->check(CLI::PositiveNumber);
  auto* faces = bij->add_subcommand("faces", "Hypercube face -> good permutation");
  faces->add_option("--input", input, "Vector over {0,1,x,y}")->required();
  bij->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    SweepOptions sweep;
    sweep.jobs = jobs;
    if (*count) {
      const PopPattern p = read_pattern(pattern_text, poset_ref);
      std::vector<PopPattern> all{p};
      for (auto& r : read_patterns(restrict_texts)) all.push_back(std::move(r));
      std::vector<Integer> values;
      for (int m = 1; m <= n; ++m) values.push_back(count_avoiders(all, m, sweep));
      print_sequence(values, 1, format);
    } else if (*dist) {
      const PopPattern p = read_pattern(pattern_text, poset_ref);
      const auto restriction = read_patterns(restrict_texts);
      DistributionTable t;
      if (stat == "nonoverlap") {
        if (!restriction.empty()) throw Error("--restrict applies to occurrences only");
        t = nonoverlap_distribution(p, n, sweep);
      } else {
        t = distribution(p, n, restriction, sweep);
      }
      if (format == "json") {
        std::cout << t.to_json().dump() << '\n';
      } else {
        std::cout << t.to_csv();
      }
    } else if (*series) {
      const CatalogEntry e = catalog(form, parse_params(params), order);
      if (as_counts) {
        if (e.bivariate) {
          print_rows(bgf_table(e.series, e.exponential), format);
        } else {
          const auto f = map_coeffs<Rational>(e.series, [](const Poly1& c) { return c.coeff(0); });
          print_sequence(e.exponential ? egf_counts(f) : gf_counts(f), 0, format);
        }
      } else if (format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (int m = 0; m <= e.series.order(); ++m) {
          if (e.bivariate) {
            nlohmann::json c = nlohmann::json::array();
            for (int d = 0; d <= e.series[m].degree(); ++d) c.push_back(rational_text(e.series[m].coeff(d)));
            j.push_back(c);
          } else {
            j.push_back(rational_text(e.series[m].coeff(0)));
          }
        }
        std::cout << j.dump() << '\n';
      } else {
        std::cout << series_lines(e.series);
      }
    } else if (*verify) {
      SuiteOptions opts;
      opts.jobs = jobs;
      opts.slow = slow;
      const SuiteReport r = run_suite(suite, opts);
      if (format == "json") {
        std::cout << r.to_json(timing).dump(2) << '\n';
      } else {
        std::cout << r.to_text(timing);
      }
      return r.passed() ? 0 : 1;
    } else if (*cyc) {
      if (input.find('(') != std::string::npos) {
        const CycleForm c = parse_cycles(input);
        int size = 0;
        for (const auto& cycle : c) size += static_cast<int>(cycle.size());
        std::cout << cycles_to_avoider(from_cycles(size, c), k).to_string() << '\n';
      } else {
        std::cout << format_cycles(standard_cycle_form(avoider_to_cycles(Permutation::parse(input), k))) << '\n';
      }
    } else if (*faces) {
      std::cout << face_to_good_perm(HypercubeFace::parse(input)).to_string() << '\n';
    }
  } catch (const std::exception& e) {
    std::cerr << "poplab: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
