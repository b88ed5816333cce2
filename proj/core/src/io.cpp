#include "updown/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "json.hpp"
#include "updown/errors.hpp"

namespace updown {
namespace {

std::string_view tidy(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void bad_line(int lineno, const std::string& what) {
  throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

int parse_int(std::string_view token, int lineno) {
  token = tidy(token);
  int value = 0;
  const auto [end, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || end != token.data() + token.size() ||
      token.empty()) {
    bad_line(lineno, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

// One member line: comma-separated elements of [1, n] inside braces.
SubsetMask parse_member(std::string_view body, int n, int lineno) {
  if (body.size() < 2 || body.front() != '{' || body.back() != '}') {
    bad_line(lineno, "expected a set in braces, got '" + std::string(body) + "'");
  }
  body = tidy(body.substr(1, body.size() - 2));
  SubsetMask mask = 0;
  if (body.empty()) return mask;
  while (true) {
    const auto comma = body.find(',');
    const std::string_view token =
        comma == std::string_view::npos ? body : body.substr(0, comma);
    const int e = parse_int(token, lineno);
    if (e < 1 || e > n) {
      bad_line(lineno, "element " + std::to_string(e) +
                           " outside the ground set [" + std::to_string(n) + "]");
    }
    const SubsetMask bit = SubsetMask{1} << (e - 1);
    if (mask & bit) {
      bad_line(lineno, "element " + std::to_string(e) + " repeated");
    }
    mask |= bit;
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
    if (tidy(body).empty()) bad_line(lineno, "trailing comma");
  }
  return mask;
}

// "%.2f" so the emitted bytes do not depend on stream state
std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

}  // namespace

void write_family(std::ostream& out, const Family& f) {
  out << "n=" << f.ground_size() << '\n';
  f.for_each_member([&](SubsetMask a) { out << mask_to_string(a) << '\n'; });
}

Family read_family(std::istream& in) {
  std::string line;
  int lineno = 0;
  int n = -1;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view t = tidy(line);
    if (t.empty()) continue;
    if (t.substr(0, 2) != "n=") {
      bad_line(lineno, "expected the n=<size> header first");
    }
    n = parse_int(t.substr(2), lineno);
    have_header = true;
    try {
      [[maybe_unused]] const Family probe(n);  // range-check n up front
    } catch (const Error& e) {
      bad_line(lineno, e.what());
    }
    break;
  }
  if (!have_header) throw ParseError("missing n=<size> header");
  std::vector<SubsetMask> members;
  std::unordered_set<SubsetMask> seen;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view t = tidy(line);
    if (t.empty()) continue;
    const SubsetMask mask = parse_member(t, n, lineno);
    if (!seen.insert(mask).second) {
      bad_line(lineno, "set " + mask_to_string(mask) + " listed twice");
    }
    members.push_back(mask);
  }
  return Family(n, members);
}

std::string family_json(const Family& f) {
  nlohmann::json j;
  j["n"] = f.ground_size();
  auto sets = nlohmann::json::array();
  f.for_each_member([&](SubsetMask a) { sets.push_back(mask_elements(a)); });
  j["sets"] = std::move(sets);
  return j.dump();
}

void write_chain(std::ostream& out, const Chain& chain) {
  out << "n=" << chain.n << '\n';
  for (const Family& f : chain.families) {
    out << "m=" << f.count() << '\n';
    f.for_each_member([&](SubsetMask a) { out << mask_to_string(a) << '\n'; });
  }
}

void write_phi_table_tsv(std::ostream& out, const PhiTable& table) {
  out << "m\tphi\n";
  for (std::size_t m = 0; m < table.values.size(); ++m) {
    out << m << '\t' << table.values[m] << '\n';
  }
}

std::string phi_table_json(const PhiTable& table) {
  nlohmann::json j;
  j["n"] = table.n;
  j["phi"] = table.values;
  return j.dump();
}

void write_ferrers_tsv(std::ostream& out, const PhiTable& table) {
  out << "x\ty\n";
  for (std::size_t x = 1; x < table.values.size(); ++x) {
    for (std::uint64_t y = 1; y <= table.values[x]; ++y) {
      out << x << '\t' << y << '\n';
    }
  }
}

void write_ferrers_svg(std::ostream& out, const PhiTable& table,
                       const FerrersLayout& layout) {
  const double u = layout.unit;
  const int margin = layout.margin_units;
  const auto columns = static_cast<std::uint64_t>(table.values.size()) - 1;
  const std::uint64_t height = columns == 0 ? 0 : table.values[columns];
  const double w = (static_cast<double>(columns) + 2 * margin) * u;
  const double h = (static_cast<double>(height) + 2 * margin) * u;
  // column x occupies the horizontal band [x-1, x] in lattice units; cell
  // (x, y) is centered at (x - 0.5, y - 0.5) before the vertical flip
  const auto px = [&](double x) { return (x + margin) * u; };
  const auto py = [&](double y) {
    return (static_cast<double>(height) - y + margin) * u;
  };

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed2(w)
      << "\" height=\"" << fixed2(h) << "\" viewBox=\"0 0 " << fixed2(w) << ' '
      << fixed2(h) << "\">\n";
  out << "<rect width=\"" << fixed2(w) << "\" height=\"" << fixed2(h)
      << "\" fill=\"#ffffff\"/>\n";

  const std::uint64_t d = durfee_side(table);
  if (d > 0) {
    const double side = static_cast<double>(d) * u;
    out << "<rect x=\"" << fixed2(px(static_cast<double>(columns - d)))
        << "\" y=\"" << fixed2(py(static_cast<double>(d))) << "\" width=\""
        << fixed2(side) << "\" height=\"" << fixed2(side)
        << "\" fill=\"#d9d9d9\"/>\n";
  }

  for (std::uint64_t x = 1; x <= columns; ++x) {
    for (std::uint64_t y = 1; y <= table.values[x]; ++y) {
      out << "<circle cx=\"" << fixed2(px(static_cast<double>(x) - 0.5))
          << "\" cy=\"" << fixed2(py(static_cast<double>(y) - 0.5))
          << "\" r=\"" << fixed2(layout.dot_radius * u)
          << "\" fill=\"#30506a\"/>\n";
    }
  }

  if (columns > 0) {
    const double scale = std::ldexp(1.0, table.n + 2);  // 2^{n+2}
    out << "<polyline fill=\"none\" stroke=\"#b04030\" stroke-width=\"1.5\""
           " stroke-dasharray=\"4 3\" points=\"";
    for (std::uint64_t x = 0; x <= columns; ++x) {
      const double fx = static_cast<double>(x);
      const double fy = std::sqrt(scale * fx) - fx;
      if (x > 0) out << ' ';
      out << fixed2(px(fx)) << ',' << fixed2(py(fy));
    }
    out << "\"/>\n";
  }
  out << "</svg>\n";
}

}  // namespace updown
