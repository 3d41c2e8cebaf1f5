#include "mec/dataset_csv.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace mec {

namespace {

std::string trim(const std::string& s) {
  auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string cell;
  std::istringstream stream(line);
  while (std::getline(stream, cell, ',')) cells.push_back(trim(cell));
  if (!line.empty() && line.back() == ',') cells.push_back("");
  return cells;
}

int parse_int(const std::string& cell, const std::string& file, int row, int col) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc{} || ptr != cell.data() + cell.size())
    throw ParseError(file, row, col, "'" + cell + "' is not an integer");
  return value;
}

}  // namespace

Dataset parse_dataset_csv(std::istream& in, const std::string& filename,
                          std::ostream* warnings) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(filename, 1, 0, "missing header row");

  auto header = split_cells(line);
  if (header.empty() || (header.size() == 1 && header[0].empty()))
    throw ParseError(filename, 1, 0, "empty header row");

  std::vector<std::string> names;
  std::vector<int> cardinalities;
  int annotated = 0;
  for (std::size_t col = 0; col < header.size(); ++col) {
    const std::string& cell = header[col];
    auto colon = cell.find(':');
    if (colon == std::string::npos) {
      if (cell.empty())
        throw ParseError(filename, 1, static_cast<int>(col + 1), "empty variable name");
      names.push_back(cell);
      cardinalities.push_back(0);  // to be inferred
      continue;
    }
    std::string name = trim(cell.substr(0, colon));
    std::string card = trim(cell.substr(colon + 1));
    if (name.empty())
      throw ParseError(filename, 1, static_cast<int>(col + 1), "empty variable name");
    int r = parse_int(card, filename, 1, static_cast<int>(col + 1));
    if (r < 2)
      throw ParseError(filename, 1, static_cast<int>(col + 1),
                       "cardinality must be at least 2, got " + card);
    names.push_back(name);
    cardinalities.push_back(r);
    ++annotated;
  }
  if (annotated != 0 && annotated != static_cast<int>(header.size()))
    throw ParseError(filename, 1, 0,
                     "either every header cell carries name:cardinality or none does");

  int width = static_cast<int>(header.size());
  std::vector<std::vector<int>> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    auto cells = split_cells(line);
    if (static_cast<int>(cells.size()) != width)
      throw ParseError(filename, line_no, 0,
                       "expected " + std::to_string(width) + " cells, got " +
                           std::to_string(cells.size()));
    std::vector<int> row(width);
    for (int col = 0; col < width; ++col) {
      int v = parse_int(cells[col], filename, line_no, col + 1);
      if (v < 0)
        throw ParseError(filename, line_no, col + 1, "negative category code");
      if (annotated && v >= cardinalities[col])
        throw ParseError(filename, line_no, col + 1,
                         "value " + std::to_string(v) + " outside 0.." +
                             std::to_string(cardinalities[col] - 1) + " for variable '" +
                             names[col] + "'");
      row[col] = v;
    }
    rows.push_back(std::move(row));
  }

  if (!annotated) {
    for (int col = 0; col < width; ++col) {
      int max_seen = 1;  // cardinality at least 2
      for (const auto& row : rows) max_seen = std::max(max_seen, row[col]);
      cardinalities[col] = max_seen + 1;
    }
    if (warnings)
      *warnings << filename
                << ": warning: cardinalities inferred from observed values; unobserved "
                   "categories would change Dim and all penalized scores\n";
  }

  return Dataset(std::move(cardinalities), rows, std::move(names));
}

Dataset parse_dataset_file(const std::string& path, std::ostream* warnings) {
  std::ifstream in(path);
  if (!in) throw InvalidArgumentError("cannot open dataset file: " + path);
  return parse_dataset_csv(in, path, warnings);
}

}  // namespace mec
