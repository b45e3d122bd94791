#include "cyclicdef/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "cyclicdef/errors.hpp"
#include "cyclicdef/isomorphism.hpp"
#include "cyclicdef/oracle.hpp"

namespace cyclicdef {

namespace detail {
extern const std::string_view kDeskCatalogText;
}

CatalogError::CatalogError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(line ? "line " + std::to_string(line) + ", column " +
                                    std::to_string(column) + ": " + message
                              : message),
      line_(line),
      column_(column) {}

CatalogEntry make_entry(std::uint32_t order, std::uint32_t index, std::string name,
                        std::vector<Permutation> generators, std::size_t cap) {
  if (order == 0 || index == 0) throw CatalogError("order and index must be positive");
  if (generators.empty()) throw CatalogError("entry needs at least one generator");
  Group g;
  try {
    g = Group::closure(generators, cap);
  } catch (const ClosureCapExceeded& e) {
    throw CatalogError(e.what());
  } catch (const std::invalid_argument& e) {
    throw CatalogError(e.what());
  }
  if (g.order() != order) {
    throw CatalogError("generators close to a group of order " + std::to_string(g.order()) +
                       ", expected " + std::to_string(order));
  }
  g = g.with_name(name).with_id({order, index});
  return {order, index, std::move(name), std::move(generators), std::move(g)};
}

bool Catalog::is_complete_through(std::uint32_t order) const {
  for (std::uint32_t n = 1; n <= order; ++n) {
    if (!complete_orders.contains(n)) return false;
  }
  return true;
}

std::vector<const CatalogEntry*> Catalog::entries_of_order(std::uint32_t order) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries) {
    if (e.order == order) out.push_back(&e);
  }
  return out;
}

const CatalogEntry* Catalog::find(GroupId id) const {
  for (const auto& e : entries) {
    if (e.id() == id) return &e;
  }
  return nullptr;
}

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

class LineCursor {
 public:
  LineCursor(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw CatalogError(msg, line_no_, at + 1);
  }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  void skip() {
    while (pos_ < line_.size() && is_space(line_[pos_])) ++pos_;
  }
  bool done() {
    skip();
    return pos_ == line_.size();
  }
  std::size_t pos() const { return pos_; }

  // Next whitespace-delimited token.
  std::string_view token() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && !is_space(line_[pos_])) ++pos_;
    return line_.substr(start, pos_ - start);
  }

  std::uint32_t number(const char* what) {
    skip();
    const std::size_t start = pos_;
    std::string_view tok = token();
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      fail(std::string("expected ") + what, start);
    }
    if (tok.size() > 9) fail(std::string(what) + " too large", start);
    const auto value = static_cast<std::uint32_t>(std::stoul(std::string(tok)));
    if (value == 0) fail(std::string(what) + " must be positive", start);
    return value;
  }

  std::string_view rest() const { return line_.substr(pos_); }
  void advance(std::size_t n) { pos_ += n; }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

std::set<std::uint32_t> parse_order_list(LineCursor& cur) {
  std::set<std::uint32_t> out;
  std::string_view rest = cur.rest();
  const std::size_t base = cur.pos();
  std::size_t i = 0;
  auto read_int = [&](std::size_t& at) -> std::uint32_t {
    const std::size_t start = at;
    std::uint64_t v = 0;
    while (at < rest.size() && std::isdigit(static_cast<unsigned char>(rest[at]))) {
      v = v * 10 + static_cast<std::uint64_t>(rest[at] - '0');
      if (v > 100'000'000) cur.fail("order too large", base + start);
      ++at;
    }
    if (at == start || v == 0) cur.fail("expected a positive order", base + start);
    return static_cast<std::uint32_t>(v);
  };
  while (true) {
    while (i < rest.size() && (is_space(rest[i]) || rest[i] == ',')) ++i;
    if (i == rest.size()) break;
    const std::uint32_t lo = read_int(i);
    std::uint32_t hi = lo;
    if (i < rest.size() && rest[i] == '-') {
      ++i;
      hi = read_int(i);
      if (hi < lo) cur.fail("empty order range", base + i - 1);
    }
    for (std::uint32_t n = lo; n <= hi; ++n) out.insert(n);
  }
  if (out.empty()) cur.fail("!complete needs at least one order");
  return out;
}

CatalogEntry parse_entry(LineCursor& cur, std::size_t line_no, const ParseOptions& options) {
  const std::uint32_t order = cur.number("order");
  const std::uint32_t index = cur.number("index");
  cur.skip();
  const std::size_t name_at = cur.pos();
  std::string name(cur.token());
  if (name.empty() || name == ":") cur.fail("expected a group name", name_at);
  cur.skip();
  if (cur.rest().empty() || cur.rest().front() != ':') cur.fail("expected ':' after the name");
  cur.advance(1);

  // Generators separated by ';'.
  std::vector<std::pair<std::string_view, std::size_t>> gen_texts;
  {
    std::string_view rest = cur.rest();
    const std::size_t base = cur.pos();
    std::size_t start = 0;
    for (std::size_t i = 0; i <= rest.size(); ++i) {
      if (i == rest.size() || rest[i] == ';') {
        gen_texts.emplace_back(rest.substr(start, i - start), base + start);
        start = i + 1;
      }
    }
  }

  std::vector<std::vector<std::vector<std::size_t>>> gen_cycles;
  std::size_t degree = 1;
  for (const auto& [text, at] : gen_texts) {
    try {
      gen_cycles.push_back(parse_cycles(text));
    } catch (const CycleSyntaxError& e) {
      cur.fail(e.what(), at + e.column());
    }
    for (const auto& cycle : gen_cycles.back()) {
      for (std::size_t p : cycle) degree = std::max(degree, p + 1);
    }
  }
  std::vector<Permutation> gens;
  for (const auto& cycles : gen_cycles) {
    Permutation p = Permutation::identity(degree);
    for (const auto& c : cycles) p = compose(p, Permutation::from_cycles(degree, {c}));
    gens.push_back(std::move(p));
  }
  try {
    return make_entry(order, index, std::move(name), std::move(gens), options.closure_cap);
  } catch (const CatalogError& e) {
    throw CatalogError(e.what(), line_no, 1);
  }
}

std::string format_order_list(const std::set<std::uint32_t>& orders) {
  std::string out;
  auto it = orders.begin();
  while (it != orders.end()) {
    const std::uint32_t lo = *it;
    std::uint32_t hi = lo;
    ++it;
    while (it != orders.end() && *it == hi + 1) {
      hi = *it;
      ++it;
    }
    if (!out.empty()) out += ' ';
    out += std::to_string(lo);
    if (hi != lo) out += "-" + std::to_string(hi);
  }
  return out;
}

}  // namespace

Catalog parse_catalog(std::istream& in, const ParseOptions& options) {
  Catalog catalog;
  std::map<GroupId, std::size_t> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    LineCursor cur(line, line_no);
    if (cur.done()) continue;
    const std::string_view rest = cur.rest();
    if (rest.front() == '#') {
      std::string_view body = rest.substr(1);
      while (!body.empty() && is_space(body.front())) body.remove_prefix(1);
      while (!body.empty() && is_space(body.back())) body.remove_suffix(1);
      if (body == "indexing: gap-smallgroups") catalog.gap_indexing = true;
      continue;
    }
    if (rest.front() == '!') {
      const std::size_t at = cur.pos();
      if (cur.token() != "!complete") cur.fail("unknown directive", at);
      auto orders = parse_order_list(cur);
      catalog.complete_orders.insert(orders.begin(), orders.end());
      continue;
    }
    CatalogEntry entry = parse_entry(cur, line_no, options);
    if (auto [it, fresh] = seen.emplace(entry.id(), line_no); !fresh) {
      throw CatalogError("duplicate id " + to_string(entry.id()) + " (first on line " +
                             std::to_string(it->second) + ")",
                         line_no, 1);
    }
    catalog.entries.push_back(std::move(entry));
  }
  if (in.bad()) throw CatalogError("read error");
  return catalog;
}

Catalog parse_catalog(std::string_view text, const ParseOptions& options) {
  std::istringstream in{std::string(text)};
  return parse_catalog(in, options);
}

Catalog load_catalog(const std::filesystem::path& path, const ParseOptions& options) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file " + path.string());
  return parse_catalog(in, options);
}

std::string write_catalog(const Catalog& catalog) {
  std::string out;
  if (catalog.gap_indexing) out += "# indexing: gap-smallgroups\n";
  if (!catalog.complete_orders.empty()) {
    out += "!complete " + format_order_list(catalog.complete_orders) + "\n";
  }
  for (const auto& e : catalog.entries) {
    out += std::to_string(e.order) + " " + std::to_string(e.index) + " " + e.name + " :";
    for (std::size_t i = 0; i < e.generators.size(); ++i) {
      out += i ? " ; " : " ";
      out += to_cycle_string(e.generators[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_string(Diagnostic::Kind kind) {
  switch (kind) {
    case Diagnostic::Kind::order_mismatch: return "order-mismatch";
    case Diagnostic::Kind::duplicate_id: return "duplicate-id";
    case Diagnostic::Kind::duplicate_class: return "duplicate-class";
    case Diagnostic::Kind::missing_class: return "missing-class";
    case Diagnostic::Kind::extra_class: return "extra-class";
  }
  return "unknown";
}

std::vector<Diagnostic> validate_catalog(const Catalog& catalog, std::size_t cap) {
  using Kind = Diagnostic::Kind;
  std::vector<Diagnostic> out;

  std::map<GroupId, std::size_t> ids;
  for (const auto& e : catalog.entries) {
    if (!ids.emplace(e.id(), 0).second) {
      out.push_back({Kind::duplicate_id, e.id(), "id " + to_string(e.id()) + " appears twice"});
    }
    try {
      const Group g = Group::closure(e.generators, cap);
      if (g.order() != e.order) {
        out.push_back({Kind::order_mismatch, e.id(),
                       "generators close to order " + std::to_string(g.order())});
      }
    } catch (const std::exception& ex) {
      out.push_back({Kind::order_mismatch, e.id(), ex.what()});
    }
  }

  for (std::uint32_t order : catalog.complete_orders) {
    const auto entries = catalog.entries_of_order(order);
    std::vector<Group> groups;
    for (const auto* e : entries) {
      if (e->group.order() == order) groups.push_back(e->group);
    }
    const auto classes = classify(groups);
    std::size_t class_count = 0;
    std::vector<std::size_t> first_of_class;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (classes[i] == first_of_class.size()) {
        first_of_class.push_back(i);
        ++class_count;
      } else {
        const auto& rep = groups[first_of_class[classes[i]]];
        out.push_back({Kind::duplicate_class, groups[i].id(),
                       "entry " + to_string(*groups[i].id()) + " is isomorphic to " +
                           to_string(*rep.id())});
      }
    }
    if (order <= oracle::kMaxOrder) {
      const std::size_t expected = oracle::enumerate_tables(order).size();
      if (class_count < expected) {
        out.push_back({Kind::missing_class, std::nullopt,
                       "order " + std::to_string(order) + " lists " +
                           std::to_string(class_count) + " classes, exhaustive search finds " +
                           std::to_string(expected)});
      } else if (class_count > expected) {
        out.push_back({Kind::extra_class, std::nullopt,
                       "order " + std::to_string(order) + " lists " +
                           std::to_string(class_count) + " classes, exhaustive search finds " +
                           std::to_string(expected)});
      }
    } else if (class_count == 0) {
      out.push_back({Kind::missing_class, std::nullopt,
                     "order " + std::to_string(order) + " is declared complete but has no entries"});
    }
  }
  return out;
}

std::string_view bundled_desk_catalog_text() { return detail::kDeskCatalogText; }

const Catalog& bundled_desk_catalog() {
  static const Catalog catalog = parse_catalog(detail::kDeskCatalogText);
  return catalog;
}

std::string display_name(std::string_view name) {
  std::string out;
  for (char c : name) {
    if (c == 'x' || c == ':' || c == '.') {
      out += ' ';
      out += c;
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

}  // namespace cyclicdef
