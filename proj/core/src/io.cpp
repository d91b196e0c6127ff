#include "ordcalc/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "ordcalc/hall.hpp"

namespace ordcalc {

GroupShape shape_of(const FiniteGroup& G) {
  const GroupElement& id = G.identity();
  GroupShape s;
  s.kind = id.kind();
  s.degree_or_dim = id.is_permutation() ? id.degree() : id.dim();
  s.modulus = id.is_permutation() ? 0 : id.modulus();
  return s;
}

namespace {

std::vector<std::int64_t> parse_integers(std::string_view text, const char* what) {
  std::vector<std::int64_t> out;
  std::string token;
  std::istringstream in{std::string(text)};
  while (in >> token) {
    // allow commas as separators
    std::string cleaned;
    for (char c : token)
      if (c != ',') cleaned += c;
    if (cleaned.empty()) continue;
    try {
      std::size_t used = 0;
      const long long v = std::stoll(cleaned, &used);
      if (used != cleaned.size()) throw std::invalid_argument(cleaned);
      out.push_back(v);
    } catch (const std::exception&) {
      throw ParseError(std::string(what) + ": bad integer '" + cleaned + "'");
    }
  }
  return out;
}

GroupElement parse_cycles(std::string_view text, int degree) {
  std::vector<int> images(static_cast<std::size_t>(degree));
  for (int i = 0; i < degree; ++i) images[static_cast<std::size_t>(i)] = i;
  std::size_t pos = 0;
  bool any = false;
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    if (text[pos] != '(') throw ParseError("cycle notation: expected '('");
    const std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw ParseError("cycle notation: missing ')'");
    const std::vector<std::int64_t> pts =
        parse_integers(text.substr(pos + 1, close - pos - 1), "cycle notation");
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::int64_t from = pts[i];
      const std::int64_t to = pts[(i + 1) % pts.size()];
      if (from < 1 || from > degree || to < 1 || to > degree)
        throw ParseError("cycle notation: point outside 1.." + std::to_string(degree));
      if (images[static_cast<std::size_t>(from - 1)] != static_cast<int>(from - 1) &&
          pts.size() > 1)
        throw ParseError("cycle notation: point " + std::to_string(from) +
                         " appears in two cycles");
      images[static_cast<std::size_t>(from - 1)] = static_cast<int>(to - 1);
    }
    any = true;
    pos = close + 1;
  }
  if (!any) throw ParseError("cycle notation: empty element text");
  try {
    return GroupElement::permutation(images);
  } catch (const DomainError& err) {
    throw ParseError(std::string("cycle notation: ") + err.what());
  }
}

}  // namespace

GroupElement parse_element(std::string_view text, const GroupShape& shape) {
  if (shape.kind == ReprKind::Permutation) {
    if (text.find('(') != std::string_view::npos) return parse_cycles(text, shape.degree_or_dim);
    const std::vector<std::int64_t> images1 = parse_integers(text, "image list");
    if (static_cast<int>(images1.size()) != shape.degree_or_dim)
      throw ParseError("image list: expected " + std::to_string(shape.degree_or_dim) +
                       " images, got " + std::to_string(images1.size()));
    std::vector<int> images;
    for (std::int64_t v : images1) {
      if (v < 1 || v > shape.degree_or_dim)
        throw ParseError("image list: image outside 1.." + std::to_string(shape.degree_or_dim));
      images.push_back(static_cast<int>(v - 1));
    }
    try {
      return GroupElement::permutation(images);
    } catch (const DomainError& err) {
      throw ParseError(std::string("image list: ") + err.what());
    }
  }
  const std::vector<std::int64_t> entries = parse_integers(text, "matrix entries");
  const int d = shape.degree_or_dim;
  if (static_cast<int>(entries.size()) != d * d)
    throw ParseError("matrix entries: expected " + std::to_string(d * d) +
                     " row-major values, got " + std::to_string(entries.size()));
  std::vector<int> rows;
  for (std::int64_t v : entries) rows.push_back(static_cast<int>(v % shape.modulus));
  try {
    return GroupElement::unitriangular(d, shape.modulus, rows);
  } catch (const DomainError& err) {
    throw ParseError(std::string("matrix entries: ") + err.what());
  }
}

std::string format_element(const GroupElement& e) {
  std::ostringstream out;
  if (e.is_permutation()) {
    if (e.is_identity()) return "()";
    std::vector<bool> seen(static_cast<std::size_t>(e.degree()), false);
    for (int start = 0; start < e.degree(); ++start) {
      if (seen[static_cast<std::size_t>(start)] || e.image(start) == start) continue;
      out << '(';
      int p = start;
      bool first = true;
      do {
        seen[static_cast<std::size_t>(p)] = true;
        if (!first) out << ' ';
        out << (p + 1);
        first = false;
        p = e.image(p);
      } while (p != start);
      out << ')';
    }
    return out.str();
  }
  for (int i = 0; i < e.dim(); ++i)
    for (int j = 0; j < e.dim(); ++j) {
      if (i || j) out << ' ';
      out << e.entry(i, j);
    }
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

GroupFileSpec parse_group_file(std::istream& in) {
  GroupFileSpec spec;
  bool have_kind = false, have_size = false, have_modulus = false;
  std::vector<std::string> generator_texts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string_view stripped = trim(line);
    if (stripped.empty() || stripped.front() == '#') continue;
    const std::size_t space = stripped.find_first_of(" \t");
    const std::string_view key = space == std::string_view::npos
                                     ? stripped
                                     : stripped.substr(0, space);
    const std::string_view value =
        space == std::string_view::npos ? std::string_view{} : trim(stripped.substr(space + 1));
    auto int_value = [&](const char* what) {
      const std::vector<std::int64_t> v = parse_integers(value, what);
      if (v.size() != 1) throw ParseError(std::string(what) + ": expected one integer");
      return v[0];
    };
    if (key == "name") {
      spec.name = std::string(value);
    } else if (key == "kind") {
      if (value == "permutation") spec.shape.kind = ReprKind::Permutation;
      else if (value == "unitriangular") spec.shape.kind = ReprKind::Unitriangular;
      else throw ParseError("line " + std::to_string(lineno) + ": unknown kind '" +
                            std::string(value) + "'");
      have_kind = true;
    } else if (key == "degree" || key == "dimension") {
      spec.shape.degree_or_dim = static_cast<int>(int_value(key == "degree" ? "degree" : "dimension"));
      have_size = true;
    } else if (key == "modulus") {
      spec.shape.modulus = static_cast<int>(int_value("modulus"));
      have_modulus = true;
    } else if (key == "generator") {
      generator_texts.emplace_back(value);
    } else {
      throw ParseError("line " + std::to_string(lineno) + ": unknown key '" +
                       std::string(key) + "'");
    }
  }
  if (!have_kind) throw ParseError("group file: missing 'kind'");
  if (!have_size)
    throw ParseError("group file: missing 'degree' (permutation) or 'dimension' (matrix)");
  if (spec.shape.kind == ReprKind::Unitriangular && !have_modulus)
    throw ParseError("group file: missing 'modulus'");
  if (generator_texts.empty()) throw ParseError("group file: no generators");
  for (const std::string& text : generator_texts)
    spec.generators.push_back(parse_element(text, spec.shape));
  return spec;
}

GroupFileSpec load_group_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open group file '" + path + "'");
  return parse_group_file(in);
}

std::string render_lambda_records(int gamma, int max_class) {
  const hall::Basis& basis = hall::Basis::for_class(gamma, max_class);
  const hall::HallPolynomials& hp = hall::hall_polynomials(gamma, max_class);
  std::ostringstream out;
  for (int k = 2; k < basis.size(); ++k) {
    out << gamma << ' ' << k << ' ' << basis.at(k).weight;
    for (const BigInt& l : hp.at(k).lambda) out << ' ' << l;
    out << '\n';
  }
  return out.str();
}

std::string render_lambda_table(int max_gamma) {
  std::string out;
  for (int g = 1; g <= max_gamma; ++g) out += render_lambda_records(g, max_gamma);
  return out;
}

std::string compare_lambda_golden(int gamma, int max_class, std::string_view golden) {
  std::vector<std::string> expected_lines;
  {
    std::istringstream in{render_lambda_records(gamma, max_class)};
    std::string line;
    while (std::getline(in, line)) expected_lines.push_back(line);
  }
  std::vector<std::string> golden_lines;
  {
    std::istringstream in{std::string(golden)};
    std::string line;
    while (std::getline(in, line)) {
      const std::string_view stripped = trim(line);
      if (stripped.empty() || stripped.front() == '#') continue;
      std::istringstream fields{line};
      int g = 0;
      if (!(fields >> g)) return "golden file: malformed record '" + line + "'";
      if (g == gamma) golden_lines.emplace_back(stripped);
    }
  }
  if (golden_lines.size() != expected_lines.size())
    return "golden file: " + std::to_string(golden_lines.size()) + " records for class " +
           std::to_string(gamma) + ", computed " + std::to_string(expected_lines.size());
  for (std::size_t i = 0; i < expected_lines.size(); ++i)
    if (golden_lines[i] != expected_lines[i])
      return "golden mismatch: file has '" + golden_lines[i] + "', computed '" +
             expected_lines[i] + "'";
  return {};
}

}  // namespace ordcalc
