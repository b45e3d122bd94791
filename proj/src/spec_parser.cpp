#include "cyclicdef/spec_parser.hpp"

#include <cctype>
#include <string>

#include "cyclicdef/errors.hpp"

namespace cyclicdef {
namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec result = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return result;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InvalidSpec("group spec, offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  std::int64_t integer() {
    skip();
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t start = pos_;
    std::int64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return negative ? -value : value;
  }

  std::uint32_t positive() {
    const std::int64_t v = integer();
    if (v <= 0) fail("expected a positive number");
    return static_cast<std::uint32_t>(v);
  }

  GroupSpec expr() {
    std::vector<GroupSpec> factors{term()};
    while (accept("x")) factors.push_back(term());
    if (factors.size() == 1) return factors.front();
    // Flatten nested products so C2x(C2xD8) and C2xC2xD8 agree.
    std::vector<GroupSpec> flat;
    for (auto& f : factors) {
      if (auto* dp = std::get_if<spec::DirectProduct>(&f.kind)) {
        flat.insert(flat.end(), dp->factors.begin(), dp->factors.end());
      } else {
        flat.push_back(std::move(f));
      }
    }
    return direct_product(std::move(flat));
  }

  GroupSpec term() {
    GroupSpec normal = power();
    if (!accept(":")) return normal;
    GroupSpec acting = power();
    expect("@");
    return semidirect(std::move(normal), std::move(acting), action());
  }

  spec::Action action() {
    if (accept("[")) {
      spec::ImageAction ia;
      do {
        std::vector<std::vector<std::int64_t>> rows;
        do {
          std::vector<std::int64_t> row{integer()};
          while (accept(",")) row.push_back(integer());
          rows.push_back(std::move(row));
        } while (accept(";"));
        ia.images.push_back(std::move(rows));
      } while (accept("|"));
      expect("]");
      return ia;
    }
    spec::PowerAction pa{{integer()}};
    while (accept(",")) pa.exponents.push_back(integer());
    return pa;
  }

  GroupSpec power() {
    GroupSpec base = atom();
    if (!accept("^")) return base;
    const std::uint32_t k = positive();
    if (k > 32) fail("exponent too large");
    if (k == 1) return base;
    return direct_product(std::vector<GroupSpec>(k, base));
  }

  GroupSpec atom() {
    if (accept("(")) {
      GroupSpec inner = expr();
      expect(")");
      return inner;
    }
    if (accept("SL(2,3)")) return sl23();
    if (accept("GL(2,3)")) return gl23();
    if (accept("Dic")) return dicyclic(positive());
    if (accept("C")) return cyclic(positive());
    if (accept("D")) return dihedral(positive());
    if (accept("Q")) return dicyclic(positive());
    if (accept("S")) return symmetric(positive());
    if (accept("A")) return alternating(positive());
    fail("expected a group family");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace cyclicdef
