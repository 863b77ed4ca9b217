#include "transversal/manifold_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace transversal {

ManifoldFileError::ManifoldFileError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

std::string strip(const std::string& raw) {
  std::string s = raw.substr(0, raw.find('#'));
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

struct Line {
  int number;
  std::string text;
};

}  // namespace

ChartAtlas read_manifold(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    std::string s = strip(raw);
    if (!s.empty()) lines.push_back({number, std::move(s)});
  }
  if (lines.empty()) throw ManifoldFileError(std::max(number, 1), "empty manifold file");

  std::size_t at = 0;
  int d = 0;
  int n = 0;
  {
    std::istringstream hdr(lines[at].text);
    std::string keyword;
    if (!(hdr >> keyword >> d >> n) || keyword != "dims") {
      throw ManifoldFileError(lines[at].number, "expected 'dims <d> <n>'");
    }
    std::string extra;
    if (hdr >> extra) throw ManifoldFileError(lines[at].number, "trailing tokens after dims");
    if (d < 1) throw ManifoldFileError(lines[at].number, "d must be >= 1 (zero-dimensional manifolds are not admissible)");
    if (n < d + 1) throw ManifoldFileError(lines[at].number, "n must be >= d+1");
    ++at;
  }

  ChartAtlas atlas;
  while (at < lines.size()) {
    if (lines[at].text != "chart") {
      throw ManifoldFileError(lines[at].number, "expected 'chart'");
    }
    ++at;
    if (at >= lines.size()) throw ManifoldFileError(lines.back().number, "chart without box line");
    std::istringstream boxline(lines[at].text);
    std::string keyword;
    boxline >> keyword;
    if (keyword != "box") throw ManifoldFileError(lines[at].number, "expected 'box lo1 hi1 ...'");
    Eigen::VectorXd lo(d), hi(d);
    for (int j = 0; j < d; ++j) {
      if (!(boxline >> lo[j] >> hi[j])) {
        throw ManifoldFileError(lines[at].number, "box needs " + std::to_string(2 * d) + " numbers");
      }
    }
    std::string extra;
    if (boxline >> extra) throw ManifoldFileError(lines[at].number, "trailing tokens after box");
    Box box;
    try {
      box = Box(lo, hi);
    } catch (const std::invalid_argument& e) {
      throw ManifoldFileError(lines[at].number, e.what());
    }
    const int box_line = lines[at].number;
    ++at;
    std::vector<Expression> components;
    for (int i = 0; i < n; ++i, ++at) {
      if (at >= lines.size() || lines[at].text == "chart") {
        throw ManifoldFileError(at < lines.size() ? lines[at].number : lines.back().number,
                                "chart needs " + std::to_string(n) + " component expressions");
      }
      try {
        components.push_back(Expression::parse(lines[at].text, d));
      } catch (const ExprError& e) {
        throw ManifoldFileError(lines[at].number, e.what());
      }
    }
    try {
      atlas.add(Parametrization(d, n, std::move(components), std::move(box)));
    } catch (const std::invalid_argument& e) {
      throw ManifoldFileError(box_line, e.what());
    }
  }
  if (atlas.empty()) throw ManifoldFileError(lines.back().number, "no charts");
  return atlas;
}

ChartAtlas read_manifold_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open manifold file " + path.string());
  return read_manifold(in);
}

void write_manifold(std::ostream& out, const ChartAtlas& atlas,
                    const std::vector<std::string>& header) {
  for (const auto& h : header) out << "# " << h << '\n';
  out << "dims " << atlas.d() << ' ' << atlas.n() << '\n';
  for (const auto& chart : atlas) {
    out << "chart\nbox";
    for (int j = 0; j < chart.d(); ++j) {
      out << ' ' << format_double(chart.domain().lo[j]) << ' '
          << format_double(chart.domain().hi[j]);
    }
    out << '\n';
    for (const auto& c : chart.components()) out << c.print() << '\n';
  }
}

void write_manifold_file(const std::filesystem::path& path, const ChartAtlas& atlas,
                         const std::vector<std::string>& header) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write manifold file " + path.string());
  write_manifold(out, atlas, header);
}

}  // namespace transversal
