#include "sureloss/odds_csv.hpp"

#include "sureloss/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <ostream>

namespace sureloss {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Next record that is neither blank nor a comment, with its line number.
struct LineReader {
  std::istream& in;
  std::size_t line = 0;

  std::optional<std::string> next() {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line;
      if (line == 1 && raw.rfind("\xEF\xBB\xBF", 0) == 0) raw.erase(0, 3);
      const std::string text = trim(raw);
      if (text.empty() || text.front() == '#') continue;
      return text;
    }
    return std::nullopt;
  }
};

FractionalOdds parse_odds_cell(const std::string& cell, std::size_t line, std::size_t column) {
  try {
    return FractionalOdds::parse(cell);
  } catch (const DomainError& e) {
    throw ParseError("invalid odds '" + cell + "': " + e.what(), line, column);
  }
}

std::string quote(const std::string& field) {
  if (field.find_first_of(",\"") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <typename Key>
std::size_t intern(std::vector<Key>& order, const Key& key) {
  auto it = std::find(order.begin(), order.end(), key);
  if (it != order.end()) return static_cast<std::size_t>(it - order.begin());
  order.push_back(key);
  return order.size() - 1;
}

}  // namespace

std::vector<std::string> split_csv_record(const std::string& record, std::size_t line) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < record.size(); ++i) {
    const char c = record[i];
    if (quoted) {
      if (c == '"' && i + 1 < record.size() && record[i + 1] == '"') {
        field += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(trim(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) throw ParseError("unterminated quoted field", line, fields.size() + 1);
  fields.push_back(trim(field));
  return fields;
}

Market parse_odds_csv(std::istream& in) {
  LineReader reader{in};
  const auto header = reader.next();
  if (!header) throw ParseError("odds file is empty; expected header 'outcome,bookmaker,odds'", 1, 1);
  const auto columns = split_csv_record(*header, reader.line);
  if (columns != std::vector<std::string>{"outcome", "bookmaker", "odds"})
    throw ParseError("expected header 'outcome,bookmaker,odds'", reader.line, 1);

  std::vector<std::string> outcomes;
  std::vector<std::string> bookmakers;
  std::map<std::pair<std::size_t, std::size_t>, FractionalOdds> quotes;

  while (auto record = reader.next()) {
    const auto fields = split_csv_record(*record, reader.line);
    if (fields.size() != 3)
      throw ParseError("expected 3 fields, found " + std::to_string(fields.size()), reader.line,
                       std::min<std::size_t>(fields.size() + 1, 4));
    if (fields[0].empty()) throw ParseError("empty outcome label", reader.line, 1);
    if (fields[1].empty()) throw ParseError("empty bookmaker name", reader.line, 2);

    const auto outcome = intern(outcomes, fields[0]);
    const auto bookmaker = intern(bookmakers, fields[1]);
    auto odds = parse_odds_cell(fields[2], reader.line, 3);
    if (!quotes.emplace(std::make_pair(outcome, bookmaker), std::move(odds)).second)
      throw ParseError("duplicate odds for outcome '" + fields[0] + "' at bookmaker '" + fields[1] + "'",
                       reader.line, 1);
  }
  if (quotes.empty()) throw ParseError("odds file has a header but no rows", reader.line, 1);

  OutcomeSpace space(outcomes);
  std::vector<OddsTable> tables;
  for (std::size_t b = 0; b < bookmakers.size(); ++b) {
    std::vector<FractionalOdds> odds;
    for (std::size_t w = 0; w < outcomes.size(); ++w) {
      auto it = quotes.find({w, b});
      if (it == quotes.end())
        throw ParseError("bookmaker '" + bookmakers[b] + "' has no odds for outcome '" + outcomes[w] + "'", 0, 0);
      odds.push_back(it->second);
    }
    tables.emplace_back(bookmakers[b], space, std::move(odds));
  }
  return Market(std::move(space), std::move(tables));
}

Market read_odds_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open odds file '" + path.string() + "'", 0, 0);
  return parse_odds_csv(in);
}

void write_odds_csv(std::ostream& out, const Market& market) {
  out << "outcome,bookmaker,odds\n";
  const auto& space = market.space();
  for (std::size_t w = 0; w < space.size(); ++w)
    for (const auto& table : market.tables())
      out << quote(space.label(w)) << ',' << quote(table.bookmaker()) << ',' << table.odds(w).str() << '\n';
}

Market parse_wide_odds_csv(std::istream& in) {
  LineReader reader{in};
  const auto header = reader.next();
  if (!header) throw ParseError("wide odds file is empty", 1, 1);
  const auto columns = split_csv_record(*header, reader.line);
  if (columns.size() < 2 || columns.front() != "outcome")
    throw ParseError("expected header 'outcome,<bookmaker>,...'", reader.line, 1);
  const std::vector<std::string> bookmakers(columns.begin() + 1, columns.end());

  std::vector<std::string> outcomes;
  std::vector<std::vector<FractionalOdds>> by_bookmaker(bookmakers.size());
  while (auto record = reader.next()) {
    const auto fields = split_csv_record(*record, reader.line);
    if (fields.size() != columns.size())
      throw ParseError("expected " + std::to_string(columns.size()) + " fields, found " +
                           std::to_string(fields.size()),
                       reader.line, std::min(fields.size(), columns.size()) + 1);
    if (fields[0].empty()) throw ParseError("empty outcome label", reader.line, 1);
    if (std::find(outcomes.begin(), outcomes.end(), fields[0]) != outcomes.end())
      throw ParseError("duplicate outcome '" + fields[0] + "'", reader.line, 1);
    outcomes.push_back(fields[0]);
    for (std::size_t b = 0; b < bookmakers.size(); ++b)
      by_bookmaker[b].push_back(parse_odds_cell(fields[b + 1], reader.line, b + 2));
  }
  if (outcomes.empty()) throw ParseError("wide odds file has a header but no rows", reader.line, 1);

  OutcomeSpace space(outcomes);
  std::vector<OddsTable> tables;
  for (std::size_t b = 0; b < bookmakers.size(); ++b) {
    if (bookmakers[b].empty()) throw ParseError("empty bookmaker name in header", 0, b + 2);
    tables.emplace_back(bookmakers[b], space, std::move(by_bookmaker[b]));
  }
  return Market(std::move(space), std::move(tables));
}

}  // namespace sureloss
