#include "lam/io.hpp"

#include <fstream>
#include <sstream>

namespace lam {

std::string write_lamination(const Lamination& L) {
  std::ostringstream os;
  os << "d=" << L.d << " depth=" << L.depth << " recipe=" << L.recipe << "\n";
  os << "leaves " << L.leaves.size() << "\n";
  for (auto& c : L.leaves)
    os << c.str() << "\n";
  os << "gaps " << L.fatou_gaps.size() << "\n";
  for (auto& g : L.fatou_gaps)
    os << g.serialize() << "\n";
  return os.str();
}

namespace {

std::string field(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0)
    throw ParseError("expected " + key + "=..., got '" + tok + "'");
  return tok.substr(key.size() + 1);
}

std::size_t count_line(std::istream& is, const std::string& word) {
  std::string line;
  if (!std::getline(is, line))
    throw ParseError("missing '" + word + "' section");
  std::istringstream ls(line);
  std::string w;
  std::size_t n;
  if (!(ls >> w >> n) || w != word)
    throw ParseError("expected '" + word + " <count>', got '" + line + "'");
  return n;
}

}  // namespace

Lamination read_lamination(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line))
    throw ParseError("empty lamination file");
  std::istringstream hs(line);
  std::string t1, t2, t3;
  if (!(hs >> t1 >> t2 >> t3))
    throw ParseError("malformed header: '" + line + "'");
  Lamination L;
  L.d = std::stoi(field(t1, "d"));
  if (L.d != 2 && L.d != 3)
    throw ParseError("degree must be 2 or 3");
  L.depth = std::stoi(field(t2, "depth"));
  L.recipe = field(t3, "recipe");
  std::size_t n = count_line(is, "leaves");
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::getline(is, line))
      throw ParseError("file ends inside the leaf list");
    Chord c = Chord::parse(line);
    if (c.degenerate())
      throw ParseError("degenerate leaf '" + line + "'");
    L.leaves.push_back(c);
  }
  std::size_t m = count_line(is, "gaps");
  for (std::size_t i = 0; i < m; ++i) {
    if (!std::getline(is, line))
      throw ParseError("file ends inside the gap list");
    L.fatou_gaps.push_back(GapGen::parse(line, L.d));
  }
  L.normalize();
  return L;
}

Lamination load_lamination(const std::string& path) {
  std::ifstream f(path);
  if (!f)
    throw DomainError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return read_lamination(ss.str());
}

void save_lamination(const Lamination& L, const std::string& path) {
  std::ofstream f(path);
  if (!f)
    throw DomainError("cannot write " + path);
  f << write_lamination(L);
}

}  // namespace lam
