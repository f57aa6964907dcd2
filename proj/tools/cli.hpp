#pragma once

// Command-line front end. Exit codes: 0 success / all checks pass, 1 some
// identity check failed, 2 usage error.

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <hookschur/format.hpp>
#include <hookschur/hilbert.hpp>
#include <hookschur/partitions.hpp>
#include <hookschur/symfun.hpp>

namespace hookschur::cli {

enum class OutputFormat { plain, json, csv };

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline OutputFormat parse_format(const std::string& s) {
  if (s == "json") return OutputFormat::json;
  if (s == "csv") return OutputFormat::csv;
  return OutputFormat::plain;
}

inline void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"plain", "json", "csv"}))
      ->capture_default_str();
}

struct Options {
  int k = 0;
  int l = 0;
  int n = 0;
  std::size_t order = kDefaultOrder;
  std::string partition;
  bool list = false;
  std::string format = "plain";
  std::string suite;
  int max_k = 5;
  int max_l = 5;
};

inline void print_series(const TruncSeries& s, OutputFormat fmt, std::ostream& out) {
  switch (fmt) {
    case OutputFormat::plain: out << to_string(s) << "\n"; break;
    case OutputFormat::json: out << to_json(s).dump() << "\n"; break;
    case OutputFormat::csv: out << to_csv(s); break;
  }
}

inline int cmd_hilbert(const Options& o, std::ostream& out) {
  print_series(hilbert_series(o.k, o.l, o.order), parse_format(o.format), out);
  return kExitOk;
}

inline int cmd_count(const Options& o, std::ostream& out) {
  const auto hooked = enumerate_hook(o.n, o.k, o.l);
  switch (parse_format(o.format)) {
    case OutputFormat::plain:
      out << hooked.size() << "\n";
      if (o.list)
        for (const auto& p : hooked) out << to_string(p) << "\n";
      break;
    case OutputFormat::json: {
      Json j{{"n", o.n}, {"k", o.k}, {"l", o.l}, {"count", hooked.size()}};
      if (o.list) {
        Json parts = Json::array();
        for (const auto& p : hooked) parts.push_back(to_json(p));
        j["partitions"] = std::move(parts);
      }
      out << j.dump() << "\n";
      break;
    }
    case OutputFormat::csv:
      out << o.n << "," << o.k << "," << o.l << "," << hooked.size() << "\n";
      if (o.list) {
        for (const auto& p : hooked) {
          std::string row;
          for (int part : p.parts()) row += (row.empty() ? "" : ",") + std::to_string(part);
          out << row << "\n";
        }
      }
      break;
  }
  return kExitOk;
}

inline int cmd_hookschur(const Partition& lambda, const Options& o, std::ostream& out) {
  const MultiPoly p = hook_schur(lambda, o.k, o.l);
  switch (parse_format(o.format)) {
    case OutputFormat::plain: out << to_string(p) << "\n"; break;
    case OutputFormat::json: out << to_json(p).dump() << "\n"; break;
    case OutputFormat::csv: out << to_csv(p); break;
  }
  return kExitOk;
}

// Writes each report in the chosen format; returns the exit code they imply.
inline int emit_reports(const std::vector<Report>& reports, OutputFormat fmt, std::ostream& out) {
  bool all_pass = true;
  for (const auto& r : reports) {
    all_pass = all_pass && r.pass;
    switch (fmt) {
      case OutputFormat::plain: out << to_plain(r) << "\n"; break;
      case OutputFormat::json: out << to_json(r).dump() << "\n"; break;
      case OutputFormat::csv: out << to_csv(r) << "\n"; break;
    }
  }
  return all_pass ? kExitOk : kExitCheckFailed;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<Report> reports;
  auto add = [&](Report r) { reports.push_back(std::move(r)); };
  const bool all = o.suite == "all";

  if ((all && o.max_k >= 1) || o.suite == "tbinomial")
    for (auto& r : verify_tbinomial_identities(o.max_k)) add(std::move(r));
  if (all || o.suite == "vandermonde")
    for (int k = 0; k <= o.max_k; ++k)
      for (int l = 0; l <= o.max_l; ++l) add(verify_qvandermonde(k, l));
  if (all || o.suite == "lemma")
    for (int k = 0; k <= o.max_k; ++k)
      for (int l = 0; l <= o.max_l; ++l) add(verify_lemma(k, l));
  if (all || o.suite == "intermediate")
    for (int k = 0; k <= o.max_k; ++k)
      for (int l = 2; l <= o.max_l; ++l) add(verify_intermediate_expression(k, l));
  if (all || o.suite == "theorem")
    for (int k = 0; k <= o.max_k; ++k)
      for (int l = 0; l <= o.max_l; ++l)
        for (auto& r : verify_theorem(k, l, o.order)) add(std::move(r));

  return emit_reports(reports, parse_format(o.format), out);
}

}  // namespace detail

// args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hilbert series of hook Schur function rings, hook partition counts and identity checks",
               "hookschur"};
  app.require_subcommand(1);
  detail::Options o;
  const auto nonneg = CLI::NonNegativeNumber;

  auto* hilbert = app.add_subcommand("hilbert", "Print the Hilbert series G_{k,l}(t) through t^N");
  hilbert->add_option("-k", o.k, "Rows of the hook arm")->required()->check(nonneg);
  hilbert->add_option("-l", o.l, "Columns of the hook leg")->required()->check(nonneg);
  hilbert->add_option("-N", o.order, "Truncation order")->check(nonneg)->capture_default_str();
  detail::add_format_option(hilbert, o.format);

  auto* count = app.add_subcommand("count", "Count partitions of n inside the (k,l)-hook");
  count->add_option("-n", o.n, "Size of the partitions")->required()->check(nonneg);
  count->add_option("-k", o.k, "Rows of the hook arm")->required()->check(nonneg);
  count->add_option("-l", o.l, "Columns of the hook leg")->required()->check(nonneg);
  count->add_flag("--list", o.list, "Also list the partitions");
  detail::add_format_option(count, o.format);

  auto* hookschur = app.add_subcommand("hookschur", "Expand the hook Schur polynomial HS_lambda(x; y)");
  hookschur->add_option("-p", o.partition, "Partition as comma-separated decreasing parts, e.g. 3,1,1")->required();
  hookschur->add_option("-k", o.k, "Number of x variables")->required()->check(nonneg);
  hookschur->add_option("-l", o.l, "Number of y variables")->required()->check(nonneg);
  detail::add_format_option(hookschur, o.format);

  auto* verify = app.add_subcommand("verify", "Check the identities over parameter ranges");
  verify->add_option("suite", o.suite, "all | lemma | theorem | tbinomial | vandermonde | intermediate")
      ->required()
      ->check(CLI::IsMember({"all", "lemma", "theorem", "tbinomial", "vandermonde", "intermediate"}));
  verify->add_option("--max-k", o.max_k, "Largest k (or a for the t-binomial checks)")
      ->check(nonneg)
      ->capture_default_str();
  verify->add_option("--max-l", o.max_l, "Largest l")->check(nonneg)->capture_default_str();
  verify->add_option("-N", o.order, "Truncation order for series comparisons")
      ->check(nonneg)
      ->capture_default_str();
  detail::add_format_option(verify, o.format);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*hilbert) return detail::cmd_hilbert(o, out);
    if (*count) return detail::cmd_count(o, out);
    if (*hookschur) return detail::cmd_hookschur(parse_partition(o.partition), o, out);
    if (*verify) {
      if (o.suite == "tbinomial" && o.max_k < 1) {
        err << "error: verify tbinomial requires --max-k >= 1\n";
        return kExitUsage;
      }
      if (o.suite == "intermediate" && o.max_l < 2) {
        err << "error: verify intermediate requires --max-l >= 2\n";
        return kExitUsage;
      }
      return detail::cmd_verify(o, out);
    }
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hookschur::cli
