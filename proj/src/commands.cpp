#include "sureloss/commands.hpp"

#include "sureloss/choquet.hpp"
#include "sureloss/coupon.hpp"
#include "sureloss/errors.hpp"
#include "sureloss/odds_csv.hpp"
#include "sureloss/report.hpp"
#include "sureloss/strategy.hpp"
#include "sureloss/sure_loss.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace sureloss::cli {

using nlohmann::json;

namespace {

const OddsTable& require_bookmaker(const Market& market, const std::string& name) {
  if (const auto* table = market.find(name)) return *table;
  std::string known;
  for (const auto& t : market.tables()) known += (known.empty() ? "" : ", ") + t.bookmaker();
  throw DomainError("unknown bookmaker '" + name + "' (available: " + known + ")");
}

json labels(const OutcomeSpace& space) { return json(space.labels()); }

Gamble parse_gamble(const std::string& text, std::size_t expected) {
  std::vector<Rational> values;
  std::stringstream in(text);
  std::string cell;
  while (std::getline(in, cell, ',')) values.push_back(Rational::parse(cell));
  if (values.size() != expected)
    throw DomainError("gamble has " + std::to_string(values.size()) + " values but the file has " +
                      std::to_string(expected) + " outcomes");
  return Gamble(std::move(values));
}

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string shown(const json& number) { return number.at("decimal").get<std::string>(); }

void render_asl(std::ostringstream& os, const json& r) {
  const bool market = r.at("scope") == "market";
  os << (market ? "Market (maximum odds across bookmakers)" : "Bookmaker " + r.at("bookmaker").get<std::string>())
     << "\n\n";
  os << pad("outcome", 18) << pad("odds", 10) << pad("upper p", 10) << (market ? "bookmaker" : "") << "\n";
  for (const auto& row : r.at("outcomes")) {
    os << pad(row.at("outcome").get<std::string>(), 18) << pad(row.at("odds").get<std::string>(), 10)
       << pad(shown(row.at("upper_probability")), 10);
    if (market) os << row.at("bookmaker").get<std::string>();
    os << "\n";
  }
  os << "\nsum b/(a+b)   " << shown(r.at("total")) << "  (" << r.at("total").at("exact").get<std::string>() << ")\n";
  os << "over-round    " << shown(r.at("over_round")) << "%\n";
  os << "verdict       " << (r.at("avoids_sure_loss").get<bool>() ? "avoids sure loss" : "incurs sure loss") << "\n";
}

void render_strategy(std::ostringstream& os, const json& s) {
  os << "best coupon: first bet on " << s.at("first").get<std::string>() << ", coupon on "
     << s.at("coupon").get<std::string>() << "\n";
  os << "upper natural extension " << shown(s.at("alpha")) << ", guaranteed gain " << shown(s.at("guaranteed_gain"))
     << " (" << s.at("guaranteed_gain").at("exact").get<std::string>() << ")\n\n";
  os << pad("outcome", 18) << pad("odds", 10) << pad("stake", 24) << "customer payoff\n";
  for (const auto& row : s.at("stakes"))
    os << pad(row.at("outcome").get<std::string>(), 18) << pad(row.at("odds").get<std::string>(), 10)
       << pad(row.at("stake").at("exact").get<std::string>(), 24) << shown(row.at("customer_payoff")) << "\n";
  os << "\ncertificate: " << s.at("certificate").at("status").get<std::string>() << "\n";
}

void render_coupons(std::ostringstream& os, const json& r) {
  os << "Bookmaker " << r.at("bookmaker").get<std::string>() << ": " << r.at("evaluated").get<std::size_t>()
     << " coupon pairs, " << r.at("exploitable_count").get<std::size_t>() << " exploitable\n";
  if (r.contains("coupons")) {
    os << "\n" << pad("first", 18) << pad("coupon", 18) << "upper\n";
    for (const auto& row : r.at("coupons"))
      os << pad(row.at("first").get<std::string>(), 18) << pad(row.at("coupon").get<std::string>(), 18)
         << shown(row.at("upper")) << "\n";
  }
  for (const auto& skip : r.at("skipped"))
    os << "skipped " << skip.at("first").get<std::string>() << " -> " << skip.at("coupon").get<std::string>()
       << ": " << skip.at("reason").get<std::string>() << "\n";
  os << "\n";
  if (r.at("strategy").is_null())
    os << r.at("message").get<std::string>() << "\n";
  else
    render_strategy(os, r.at("strategy"));
}

void render_extension(std::ostringstream& os, const json& r) {
  os << "Bookmaker " << r.at("bookmaker").get<std::string>() << "\n";
  os << "upper natural extension " << shown(r.at("upper")) << " (" << r.at("upper").at("exact").get<std::string>()
     << ")\n";
  os << "lower natural extension " << shown(r.at("lower")) << " (" << r.at("lower").at("exact").get<std::string>()
     << ")\n";
  const auto& d = r.at("decomposition");
  os << "level sets: " << d.at("base").at("exact").get<std::string>() << " on all outcomes";
  for (const auto& level : d.at("levels")) {
    os << " + " << level.at("step").at("exact").get<std::string>() << " on {";
    bool first = true;
    for (const auto& w : level.at("set")) {
      os << (first ? "" : ", ") << w.get<std::string>();
      first = false;
    }
    os << "}";
  }
  os << "\n";
}

struct OutputOptions {
  std::string out_file;
  std::string format = "json";
};

void add_output_options(CLI::App* cmd, OutputOptions& opts) {
  cmd->add_option("--out", opts.out_file, "Write the report to FILE instead of stdout");
  cmd->add_option("--format", opts.format, "Report format")->check(CLI::IsMember({"json", "table"}));
}

void emit(const std::string& text, const OutputOptions& opts, std::ostream& out) {
  if (opts.out_file.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opts.out_file);
  if (!file) throw ParseError("cannot write '" + opts.out_file + "'", 0, 0);
  file << text;
}

void emit_report(const json& report, const OutputOptions& opts, std::ostream& out) {
  emit(opts.format == "table" ? render_table(report) : report.dump(2) + "\n", opts, out);
}

}  // namespace

json check_asl(const Market& market, const std::optional<std::string>& bookmaker) {
  json out{{"command", "check-asl"}};
  if (bookmaker) {
    const auto& table = require_bookmaker(market, *bookmaker);
    out.update(report::asl_verdict(table, check_asl_single(table), {}));
    out["scope"] = "bookmaker";
    out["bookmaker"] = *bookmaker;
  } else {
    const auto table = max_odds(market);
    std::vector<std::string> sources;
    for (auto t : max_odds_sources(market)) sources.push_back(market.tables()[t].bookmaker());
    out.update(report::asl_verdict(table, check_asl_single(table), sources));
    out["scope"] = "market";
    out["bookmaker"] = nullptr;
    out["bookmakers"] = market.tables().size();
  }
  return out;
}

json find_coupon_arbitrage(const Market& market, const std::string& bookmaker,
                           const std::optional<Rational>& max_coupon, bool all) {
  const auto& table = require_bookmaker(market, bookmaker);
  const auto& space = table.space();
  const auto verdict = check_asl_single(table);
  json out{{"command", "find-coupon-arbitrage"},
           {"bookmaker", bookmaker},
           {"outcome_labels", labels(space)},
           {"base", json{{"avoids_sure_loss", verdict.avoids},
                         {"total", report::number(verdict.total)},
                         {"over_round", report::number(over_round(table))}}},
           {"max_coupon", max_coupon ? json(max_coupon->str()) : json(nullptr)}};
  require_base_avoids_sure_loss(table);

  CouponRules rules;
  rules.max_coupon_value = max_coupon;
  const auto enumeration = enumerate_coupons(table, rules);

  std::size_t exploitable = 0;
  json coupons = json::array();
  for (const auto& entry : enumeration.entries) {
    if (entry.exploitable()) ++exploitable;
    if (all) coupons.push_back(report::coupon_entry(space, entry));
  }
  json skipped = json::array();
  for (const auto& s : enumeration.skipped)
    skipped.push_back(json{{"first", space.label(s.first)}, {"coupon", space.label(s.coupon)}, {"reason", s.reason}});

  out["evaluated"] = enumeration.entries.size();
  out["exploitable_count"] = exploitable;
  out["skipped"] = std::move(skipped);
  if (all) out["coupons"] = std::move(coupons);

  if (exploitable == 0) {
    out["strategy"] = nullptr;
    out["message"] = "no exploitable coupon";
  } else {
    const auto& best = enumeration.entries.front().coupon;
    out["strategy"] = report::strategy(table, best.gamble, coupon_strategy(table, best));
    out["message"] = "sure gain available";
  }
  return out;
}

json natural_extension(const Market& market, const std::string& bookmaker, const std::string& gamble) {
  const auto& table = require_bookmaker(market, bookmaker);
  const auto& space = table.space();
  const Gamble f = parse_gamble(gamble, space.size());
  const UpperPMF pbar = upper_pmf_from_odds(table);

  json values = json::array();
  for (const auto& v : f.payoffs()) values.push_back(v.str());
  return json{{"command", "natural-extension"},
              {"bookmaker", bookmaker},
              {"outcome_labels", labels(space)},
              {"gamble", std::move(values)},
              {"upper", report::number(upper_natural_extension(pbar, f))},
              {"lower", report::number(lower_natural_extension(pbar, f))},
              {"decomposition", report::decomposition(space, decompose(f))}};
}

std::string render_table(const json& report) {
  std::ostringstream os;
  const auto command = report.value("command", std::string{});
  if (command == "check-asl")
    render_asl(os, report);
  else if (command == "find-coupon-arbitrage")
    render_coupons(os, report);
  else if (command == "natural-extension")
    render_extension(os, report);
  else
    os << report.dump(2) << "\n";
  return os.str();
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sure-loss and free-coupon arbitrage analysis for fractional betting odds"};
  app.require_subcommand(1);

  OutputOptions output;
  std::string file;
  std::string bookmaker;
  std::string max_coupon;
  std::string gamble;
  bool all = false;

  auto* check = app.add_subcommand("check-asl", "Check whether odds avoid sure loss");
  check->add_option("file", file, "Odds CSV (outcome,bookmaker,odds)")->required();
  check->add_option("--bookmaker", bookmaker, "Check a single bookmaker instead of the whole market");
  add_output_options(check, output);

  auto* coupons = app.add_subcommand("find-coupon-arbitrage", "Search first-bet free coupons for a sure gain");
  coupons->add_option("file", file, "Odds CSV")->required();
  coupons->add_option("--bookmaker", bookmaker, "Bookmaker issuing the coupon")->required();
  coupons->add_option("--max-coupon", max_coupon, "Maximum coupon value a/b");
  coupons->add_flag("--all", all, "List every coupon pair");
  add_output_options(coupons, output);

  auto* extension = app.add_subcommand("natural-extension", "Lower and upper natural extension of a gamble");
  extension->add_option("file", file, "Odds CSV")->required();
  extension->add_option("--bookmaker", bookmaker, "Bookmaker whose odds define the model")->required();
  extension->add_option("--gamble", gamble, "Payoffs v1,v2,... in file outcome order")->required();
  add_output_options(extension, output);

  auto* convert = app.add_subcommand("convert-wide", "Convert a wide odds table to the long CSV format");
  convert->add_option("file", file, "Wide CSV (outcome,<bookmaker>,...)")->required();
  convert->add_option("--out", output.out_file, "Write the CSV to FILE instead of stdout");

  std::vector<std::string> argv_storage{"sureloss"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*convert) {
      std::ifstream in(file);
      if (!in) throw ParseError("cannot open wide odds file '" + file + "'", 0, 0);
      std::ostringstream csv;
      write_odds_csv(csv, parse_wide_odds_csv(in));
      emit(csv.str(), output, out);
      return kOk;
    }

    const Market market = read_odds_csv(file);
    if (*check) {
      emit_report(check_asl(market, bookmaker.empty() ? std::nullopt : std::optional(bookmaker)), output, out);
    } else if (*coupons) {
      std::optional<Rational> cap;
      if (!max_coupon.empty()) cap = Rational::parse(max_coupon);
      emit_report(find_coupon_arbitrage(market, bookmaker, cap, all), output, out);
    } else if (*extension) {
      emit_report(natural_extension(market, bookmaker, gamble), output, out);
    }
    return kOk;
  } catch (const BaseSureLossError& e) {
    err << "error: " << e.what() << "\n";
    return kBaseSureLoss;
  } catch (const CertificateError& e) {
    err << "internal error: " << e.what() << "\n";
    return kCertificateFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace sureloss::cli
