#include "tsg/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace tsg {

namespace {

std::string_view trim(std::string_view s, std::size_t* offset = nullptr) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  if (offset) *offset += b;
  return s.substr(b, e - b);
}

[[noreturn]] void unknown(std::string_view token, std::size_t position, const FiniteGroup& g) {
  throw error(errc::unknown_element, "unknown element '" + std::string(token) + "' in " + g.name() +
                                         " at position " + std::to_string(position));
}

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t base) : text_(text), base_(base) {}

  bool done() const { return pos_ >= text_.size(); }
  std::size_t position() const { return base_ + pos_; }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }
  long long integer() {
    std::size_t start = pos_;
    bool negative = eat("-");
    std::size_t digits = pos_;
    long long v = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000'000) throw parse_error("integer too large", base_ + start);
      ++pos_;
    }
    if (pos_ == digits) throw parse_error("expected an integer", base_ + start);
    return negative ? -v : v;
  }
  // Optional '^' exponent; defaults to 1.
  long long exponent() {
    if (!eat("^")) return 1;
    return integer();
  }

 private:
  std::string_view text_;
  std::size_t base_;
  std::size_t pos_ = 0;
};

// Splits at commas not enclosed in parentheses; returns (token, offset) pairs.
std::vector<std::pair<std::string_view, std::size_t>> split_top_level(std::string_view text, std::size_t base) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '(') ++depth;
    if (c == ')') {
      if (depth == 0) throw parse_error("unbalanced ')'", base + i);
      --depth;
    }
    if (c == ',' && depth == 0) {
      out.emplace_back(text.substr(start, i - start), base + start);
      start = i + 1;
    }
  }
  if (depth != 0) throw parse_error("unbalanced '('", base + text.size());
  out.emplace_back(text.substr(start), base + start);
  return out;
}

element_t parse_power_word(const FiniteGroup& g, std::string_view text, std::size_t base,
                           const std::vector<std::pair<std::string_view, element_t>>& letters) {
  Cursor cur(text, base);
  element_t result = g.identity();
  cur.skip_space();
  if (cur.done()) throw parse_error("empty element name", base);
  while (!cur.done()) {
    element_t letter = -1;
    for (const auto& [name, value] : letters) {
      if (cur.eat(name)) {
        letter = value;
        break;
      }
    }
    if (letter < 0) unknown(text, base, g);
    result = g.mul(result, g.pow(letter, cur.exponent()));
    cur.skip_space();
  }
  return result;
}

element_t parse_permutation(const FiniteGroup& g, std::string_view text, std::size_t base) {
  const auto& st = g.structure();
  const int n = st.parameter;
  std::vector<int> image(n);
  for (int i = 0; i < n; ++i) image[i] = i;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw parse_error("empty element name", base);
  while (i < text.size()) {
    if (text[i] != '(') throw parse_error("expected '(' in cycle notation", base + i);
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw parse_error("unterminated cycle", base + i);
    std::string_view body = text.substr(i + 1, close - i - 1);
    std::vector<int> points;
    const bool spaced = body.find(' ') != std::string_view::npos;
    for (std::size_t j = 0; j < body.size(); ++j) {
      const char c = body[j];
      if (c == ' ') continue;
      if (!std::isdigit(static_cast<unsigned char>(c))) throw parse_error("expected a point number", base + i + 1 + j);
      int v = c - '0';
      if (spaced) {
        while (j + 1 < body.size() && std::isdigit(static_cast<unsigned char>(body[j + 1]))) v = v * 10 + (body[++j] - '0');
      }
      if (v < 1 || v > n) unknown(text, base, g);
      for (int p : points)
        if (p == v - 1) throw parse_error("repeated point in cycle", base + i + 1 + j);
      points.push_back(v - 1);
    }
    // Same convention as the group product: the rightmost cycle acts first.
    std::vector<int> cycle(n);
    for (int k = 0; k < n; ++k) cycle[k] = k;
    for (std::size_t k = 0; k < points.size(); ++k) cycle[points[k]] = points[(k + 1) % points.size()];
    std::vector<int> composed(n);
    for (int k = 0; k < n; ++k) composed[k] = image[cycle[k]];
    image = std::move(composed);
    i = close + 1;
    skip();
  }
  for (std::size_t idx = 0; idx < st.permutations.size(); ++idx)
    if (st.permutations[idx] == image) return static_cast<element_t>(idx);
  unknown(text, base, g);  // odd permutation in an alternating group
}

element_t parse_element_at(const FiniteGroup& g, std::string_view raw, std::size_t base) {
  std::string_view text = trim(raw, &base);
  if (text.empty()) throw parse_error("empty element name", base);
  if (auto found = g.find(text)) return *found;
  if (text == "e") return g.identity();

  const auto& st = g.structure();
  switch (st.kind) {
    case GroupKind::cyclic:
      return parse_power_word(g, text, base, {{"g", g.order() > 1 ? 1 : 0}});
    case GroupKind::dihedral: {
      const int n = st.parameter;
      const element_t s = n > 1 ? 1 : 0;
      const element_t t = n;
      return parse_power_word(g, text, base, {{"s", s}, {"σ", s}, {"t", t}, {"τ", t}});
    }
    case GroupKind::symmetric:
    case GroupKind::alternating:
      return parse_permutation(g, text, base);
    case GroupKind::direct_product:
    case GroupKind::semidirect_product: {
      if (text.front() != '(' || text.back() != ')') unknown(text, base, g);
      auto parts = split_top_level(text.substr(1, text.size() - 2), base + 1);
      if (parts.size() != 2) throw parse_error("expected a pair '(x,y)'", base);
      const element_t a = parse_element_at(*st.first, parts[0].first, parts[0].second);
      const element_t b = parse_element_at(*st.second, parts[1].first, parts[1].second);
      return a * st.second->order() + b;
    }
    case GroupKind::quotient:
      return st.projection[parse_element_at(*st.first, text, base)];
    case GroupKind::table:
      break;
  }
  unknown(text, base, g);
}

FiniteGroup parse_term(std::string_view text, std::size_t base) {
  std::size_t offset = base;
  std::string_view t = trim(text, &offset);
  if (t.empty()) throw parse_error("expected a group term", offset);
  const char kind = t.front();
  if (kind != 'C' && kind != 'D' && kind != 'S' && kind != 'A')
    throw parse_error("unknown group family '" + std::string(1, kind) + "'", offset);
  Cursor cur(t.substr(1), offset + 1);
  if (cur.peek() == '-') throw parse_error("group parameter must be positive", cur.position());
  const long long n = cur.integer();
  if (!cur.done()) throw parse_error("unexpected trailing characters", cur.position());
  if (n < 1 || n > 1'000'000) throw error(errc::invalid_parameter, "group parameter out of range: " + std::to_string(n));
  switch (kind) {
    case 'C': return make_cyclic(static_cast<int>(n));
    case 'D': return make_dihedral(static_cast<int>(n));
    case 'S': return make_symmetric(static_cast<int>(n));
    default: return make_alternating(static_cast<int>(n));
  }
}

}  // namespace

FiniteGroup parse_group_spec(std::string_view text) {
  constexpr std::string_view kSemidirect = "semidirect:";
  std::size_t offset = 0;
  std::string_view spec = trim(text, &offset);
  if (spec.empty()) throw parse_error("empty group spec", offset);

  std::optional<FiniteGroup> acc;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::string_view rest = spec.substr(start);
    if (rest.substr(0, kSemidirect.size()) == kSemidirect) {
      FiniteGroup sd = load_semidirect(std::string(trim(rest.substr(kSemidirect.size()))));
      acc = acc ? direct_product(*acc, sd) : sd;
      break;
    }
    const std::size_t cross = rest.find('x');
    const std::string_view term = rest.substr(0, cross);
    FiniteGroup g = parse_term(term, offset + start);
    acc = acc ? direct_product(*acc, g) : g;
    if (cross == std::string_view::npos) break;
    start += cross + 1;
    if (start == spec.size()) throw parse_error("expected a group term after 'x'", offset + start);
  }
  return *acc;
}

FiniteGroup load_semidirect(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::io_error, "cannot open semidirect description '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_semidirect(buffer.str());
}

FiniteGroup parse_semidirect(std::string_view contents) {
  std::optional<FiniteGroup> h, k;
  Action action;
  std::vector<bool> given;
  std::size_t line_start = 0;
  while (line_start < contents.size()) {
    std::size_t line_end = contents.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = contents.size();
    std::size_t base = line_start;
    std::string_view line = trim(contents.substr(line_start, line_end - line_start), &base);
    line_start = line_end + 1;
    if (line.empty() || line.front() == '#') continue;

    if (!k && (line.substr(0, 2) == "H " || line.substr(0, 2) == "K ")) {
      FiniteGroup g = parse_group_spec(line.substr(2));
      if (line.front() == 'H') {
        h = std::move(g);
      } else {
        if (!h) throw parse_error("K must follow H", base);
        k = std::move(g);
        action.assign(k->order(), {});
        given.assign(k->order(), false);
      }
      continue;
    }
    if (!h || !k) throw parse_error("expected 'H <spec>' and 'K <spec>' before the action", base);
    const std::size_t colon = line.find(':');
    if (colon == std::string_view::npos) throw parse_error("expected '<element>: <images>'", base);
    const element_t a = parse_element_at(*k, line.substr(0, colon), base);
    if (given[a]) throw parse_error("duplicate action for " + k->label(a), base);
    std::vector<element_t> images;
    std::string_view rest = line.substr(colon + 1);
    std::size_t i = 0;
    while (i < rest.size()) {
      while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
      if (i == rest.size()) break;
      std::size_t j = i;
      while (j < rest.size() && !std::isspace(static_cast<unsigned char>(rest[j]))) ++j;
      images.push_back(parse_element_at(*h, rest.substr(i, j - i), base + colon + 1 + i));
      i = j;
    }
    action[a] = std::move(images);
    given[a] = true;
  }
  if (!h || !k) throw parse_error("semidirect description needs 'H <spec>' and 'K <spec>' lines", 0);
  for (element_t a = 0; a < k->order(); ++a)
    if (!given[a]) throw error(errc::invalid_action, "no action given for element " + k->label(a) + " of K");
  return semidirect_product(*h, *k, action);
}

element_t parse_element(const FiniteGroup& group, std::string_view text) {
  return parse_element_at(group, text, 0);
}

ElementSubset parse_subset(const FiniteGroup& group, std::string_view text) {
  if (trim(text).empty()) throw error(errc::invalid_parameter, "empty subset");
  std::vector<element_t> members;
  for (const auto& [token, offset] : split_top_level(text, 0)) members.push_back(parse_element_at(group, token, offset));
  return ElementSubset(group, std::move(members));
}

}  // namespace tsg
