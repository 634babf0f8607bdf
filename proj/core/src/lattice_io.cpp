#include "adnrg/lattice_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "adnrg/error.hpp"

namespace adnrg {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

Coord parse_coord(const std::string& tok, std::size_t line_no) {
  Coord v = 0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  if (!tok.empty() && tok[0] == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw Error(ErrorCode::Parse,
                "line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
  }
  return v;
}

}  // namespace

LatticeSet read_set_text(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t dim = 0;
  std::vector<Coord> flat;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (dim == 0) {
      if (line.rfind("dim=", 0) != 0) {
        throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) +
                                          ": expected 'dim=<d>' header");
      }
      const Coord d = parse_coord(trim(line.substr(4)), line_no);
      if (d <= 0) throw Error(ErrorCode::Parse, "dimension must be positive");
      dim = static_cast<std::size_t>(d);
      continue;
    }
    std::istringstream row(line);
    std::string tok;
    std::size_t count = 0;
    while (row >> tok) {
      flat.push_back(parse_coord(tok, line_no));
      ++count;
    }
    if (count != dim) {
      throw Error(ErrorCode::Parse, "line " + std::to_string(line_no) + ": expected " +
                                        std::to_string(dim) + " coordinates, got " +
                                        std::to_string(count));
    }
  }
  if (dim == 0) throw Error(ErrorCode::Parse, "missing 'dim=<d>' header");
  return LatticeSet::from_flat(dim, std::move(flat));
}

void write_set_text(std::ostream& out, const LatticeSet& set) {
  out << "dim=" << set.dim() << '\n';
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto p = set[i];
    for (std::size_t j = 0; j < p.size(); ++j) {
      if (j) out << ' ';
      out << p[j];
    }
    out << '\n';
  }
}

std::string to_text(const LatticeSet& set) {
  std::ostringstream os;
  write_set_text(os, set);
  return os.str();
}

nlohmann::json set_to_json(const LatticeSet& set) {
  nlohmann::json pts = nlohmann::json::array();
  for (std::size_t i = 0; i < set.size(); ++i) {
    const auto p = set[i];
    pts.push_back(std::vector<Coord>(p.begin(), p.end()));
  }
  return {{"dim", set.dim()}, {"points", std::move(pts)}};
}

LatticeSet set_from_json(const nlohmann::json& j) {
  try {
    const auto dim = j.at("dim").get<std::size_t>();
    if (dim == 0) throw Error(ErrorCode::Parse, "dimension must be positive");
    std::vector<Coord> flat;
    for (const auto& p : j.at("points")) {
      const auto coords = p.get<std::vector<Coord>>();
      if (coords.size() != dim) {
        throw Error(ErrorCode::Parse, "point with " + std::to_string(coords.size()) +
                                          " coordinates in a dim=" + std::to_string(dim) +
                                          " set");
      }
      flat.insert(flat.end(), coords.begin(), coords.end());
    }
    return LatticeSet::from_flat(dim, std::move(flat));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Parse, e.what());
  }
}

LatticeSet load_set(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
  try {
    if (path.extension() == ".json") {
      nlohmann::json j;
      try {
        in >> j;
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::Parse, e.what());
      }
      return set_from_json(j);
    }
    return read_set_text(in);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.message());
  }
}

void save_set(const std::filesystem::path& path, const LatticeSet& set) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
  if (path.extension() == ".json") {
    out << set_to_json(set).dump() << '\n';
  } else {
    write_set_text(out, set);
  }
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace adnrg
