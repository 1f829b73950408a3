#include "cantor/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace cantor {

namespace {

bool valid_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) {
    return false;
  }
  return std::all_of(name.begin(), name.end(), [](char ch) {
    return std::isalnum(static_cast<unsigned char>(ch)) != 0;
  });
}

}  // namespace

GenName::GenName(std::string name) : symbol_(std::move(name)) {
  if (!valid_name(symbol_)) {
    throw std::invalid_argument("invalid generator name \"" + symbol_ + "\"");
  }
}

GenName::GenName(Address first, Address second) {
  if (!incomparable(first, second)) {
    throw std::invalid_argument("invalid swap <" + first.to_string() + " "
                                + second.to_string()
                                + ">: addresses must be incomparable");
  }
  symbol_ = "<" + first.to_string() + " " + second.to_string() + ">";
  swap_ = SwapLiteral{std::move(first), std::move(second)};
}

GenName swap_gen(std::string_view first, std::string_view second) {
  return GenName(Address::parse(first), Address::parse(second));
}

WordExpr WordExpr::gen(GenName g) {
  WordExpr e;
  e.kind_ = Kind::Gen;
  e.generator_ = std::move(g);
  return e;
}

WordExpr WordExpr::swap(std::string_view first, std::string_view second) {
  return gen(swap_gen(first, second));
}

WordExpr WordExpr::inverse(WordExpr x) {
  WordExpr e;
  e.kind_ = Kind::Inverse;
  e.children_.push_back(std::move(x));
  return e;
}

WordExpr WordExpr::power(WordExpr x, long long n) {
  WordExpr e;
  e.kind_ = Kind::Power;
  e.exponent_ = n;
  e.children_.push_back(std::move(x));
  return e;
}

WordExpr WordExpr::conjugate(WordExpr base, WordExpr by) {
  WordExpr e;
  e.kind_ = Kind::Conjugate;
  e.children_.push_back(std::move(base));
  e.children_.push_back(std::move(by));
  return e;
}

WordExpr WordExpr::commutator(WordExpr x, WordExpr y) {
  WordExpr e;
  e.kind_ = Kind::Commutator;
  e.children_.push_back(std::move(x));
  e.children_.push_back(std::move(y));
  return e;
}

WordExpr WordExpr::product(std::vector<WordExpr> factors) {
  if (factors.empty()) {
    return {};
  }
  if (factors.size() == 1) {
    return std::move(factors.front());
  }
  WordExpr e;
  e.kind_ = Kind::Product;
  e.children_ = std::move(factors);
  return e;
}

ParseError::ParseError(std::string const& what, std::size_t position)
    : std::runtime_error("parse error at column " + std::to_string(position + 1)
                         + ": " + what),
      position_(position) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  WordExpr parse_all() {
    WordExpr e = parse_expr();
    skip_space();
    if (pos_ != text_.size()) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(std::string const& what) const {
    throw ParseError(what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size()
           && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char ch) {
    if (peek() != ch) {
      fail(std::string("expected '") + ch + "'");
    }
    ++pos_;
  }

  static bool starts_atom(char ch) {
    return std::isalpha(static_cast<unsigned char>(ch)) || ch == '<'
           || ch == '(' || ch == '[' || ch == '1';
  }

  WordExpr parse_expr() {
    std::vector<WordExpr> terms;
    while (starts_atom(peek())) {
      terms.push_back(parse_term());
    }
    return WordExpr::product(std::move(terms));
  }

  WordExpr parse_term() {
    WordExpr e = parse_atom();
    while (peek() == '^') {
      ++pos_;
      if (auto n = try_integer_exponent()) {
        e = *n == -1 ? WordExpr::inverse(std::move(e))
                     : WordExpr::power(std::move(e), *n);
      } else if (starts_atom(peek())) {
        e = WordExpr::conjugate(std::move(e), parse_atom());
      } else {
        fail("expected an exponent after '^'");
      }
    }
    return e;
  }

  // INT or '(' INT ')'; leaves the position untouched when neither matches.
  std::optional<long long> try_integer_exponent() {
    std::size_t const saved = pos_;
    char ch = peek();
    if (ch == '(') {
      ++pos_;
      if (auto n = try_integer(); n && peek() == ')') {
        ++pos_;
        return n;
      }
      pos_ = saved;
      return std::nullopt;
    }
    return try_integer();
  }

  std::optional<long long> try_integer() {
    std::size_t const start = pos_;
    char ch = peek();
    std::size_t const number_start = pos_;
    if (ch == '-' || ch == '+') {
      ++pos_;
    }
    std::size_t const digits_start = pos_;
    while (pos_ < text_.size()
           && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ == digits_start) {
      pos_ = start;
      return std::nullopt;
    }
    std::string_view digits = text_.substr(number_start, pos_ - number_start);
    if (digits.front() == '+') {
      digits.remove_prefix(1);
    }
    long long value = 0;
    auto [end, ec] = std::from_chars(digits.data(),
                                     digits.data() + digits.size(), value);
    if (ec != std::errc{} || end != digits.data() + digits.size()) {
      pos_ = number_start;
      fail("exponent out of range");
    }
    return value;
  }

  WordExpr parse_atom() {
    char ch = peek();
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t const start = pos_;
      while (pos_ < text_.size()
             && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      }
      return WordExpr::gen(GenName(std::string(text_.substr(start, pos_ - start))));
    }
    if (ch == '1') {
      ++pos_;
      if (pos_ < text_.size()
          && std::isalnum(static_cast<unsigned char>(text_[pos_]))) {
        fail("expected a generator, found a number");
      }
      return {};
    }
    if (ch == '<') {
      return parse_swap();
    }
    if (ch == '(') {
      ++pos_;
      WordExpr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (ch == '[') {
      ++pos_;
      WordExpr x = parse_expr();
      expect(',');
      WordExpr y = parse_expr();
      expect(']');
      return WordExpr::commutator(std::move(x), std::move(y));
    }
    if (ch == '\0') {
      fail("unexpected end of input");
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  WordExpr parse_swap() {
    std::size_t const start = pos_;
    ++pos_;  // '<'
    Address first = parse_address();
    Address second = parse_address();
    expect('>');
    if (!incomparable(first, second)) {
      throw ParseError("swap <" + first.to_string() + " " + second.to_string()
                           + "> has comparable addresses",
                       start);
    }
    return WordExpr::gen(GenName(std::move(first), std::move(second)));
  }

  Address parse_address() {
    skip_space();
    std::size_t const start = pos_;
    while (pos_ < text_.size()
           && (text_[pos_] == '0' || text_[pos_] == '1' || text_[pos_] == 'e')) {
      ++pos_;
    }
    if (start == pos_) {
      fail("expected an address of 0/1 letters");
    }
    try {
      return Address::parse(text_.substr(start, pos_ - start));
    } catch (std::invalid_argument const& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void append_reduced(Word& out, WordLetter const& letter) {
  if (!out.empty() && out.back().gen == letter.gen
      && out.back().sign == -letter.sign) {
    out.pop_back();
  } else {
    out.push_back(letter);
  }
}

void append_all(Word& out, Word const& w) {
  for (auto const& letter : w) {
    append_reduced(out, letter);
  }
}

bool is_atomic(WordExpr const& e) {
  switch (e.kind()) {
    case WordExpr::Kind::Empty:
    case WordExpr::Kind::Gen:
    case WordExpr::Kind::Commutator:
      return true;
    default:
      return false;
  }
}

// Something that may sit on the left of '^'.
bool is_term(WordExpr const& e) {
  return e.kind() != WordExpr::Kind::Product;
}

std::string as_atom(WordExpr const& e) {
  return is_atomic(e) ? to_string(e) : "(" + to_string(e) + ")";
}

std::string as_term(WordExpr const& e) {
  return is_term(e) ? to_string(e) : "(" + to_string(e) + ")";
}

void collect_generators(WordExpr const& e, std::vector<GenName>& out) {
  if (e.kind() == WordExpr::Kind::Gen) {
    if (std::find(out.begin(), out.end(), e.generator()) == out.end()) {
      out.push_back(e.generator());
    }
    return;
  }
  for (auto const& child : e.children()) {
    collect_generators(child, out);
  }
}

}  // namespace

WordExpr parse(std::string_view text) { return Parser(text).parse_all(); }

Word inverse(Word const& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    out.push_back({it->gen, -it->sign});
  }
  return out;
}

Word free_reduce(Word const& w) {
  Word out;
  out.reserve(w.size());
  append_all(out, w);
  return out;
}

bool is_freely_reduced(Word const& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i].gen == w[i + 1].gen && w[i].sign == -w[i + 1].sign) {
      return false;
    }
  }
  return true;
}

Word flatten(WordExpr const& e) {
  using Kind = WordExpr::Kind;
  auto const& kids = e.children();
  Word out;
  switch (e.kind()) {
    case Kind::Empty:
      break;
    case Kind::Gen:
      out.push_back({e.generator(), +1});
      break;
    case Kind::Inverse:
      out = inverse(flatten(kids[0]));
      break;
    case Kind::Power: {
      Word const unit = e.exponent() < 0 ? inverse(flatten(kids[0]))
                                         : flatten(kids[0]);
      long long const reps = e.exponent() < 0 ? -e.exponent() : e.exponent();
      for (long long i = 0; i < reps; ++i) {
        append_all(out, unit);
      }
      break;
    }
    case Kind::Conjugate: {
      Word const by = flatten(kids[1]);
      append_all(out, inverse(by));
      append_all(out, flatten(kids[0]));
      append_all(out, by);
      break;
    }
    case Kind::Commutator: {
      Word const x = flatten(kids[0]);
      Word const y = flatten(kids[1]);
      append_all(out, inverse(x));
      append_all(out, inverse(y));
      append_all(out, x);
      append_all(out, y);
      break;
    }
    case Kind::Product:
      for (auto const& kid : kids) {
        append_all(out, flatten(kid));
      }
      break;
  }
  return out;
}

std::string format(Word const& w) {
  if (w.empty()) {
    return "1";
  }
  std::string out;
  for (auto const& letter : w) {
    if (!out.empty()) {
      out += ' ';
    }
    out += letter.gen.symbol();
    if (letter.sign < 0) {
      out += "^-1";
    }
  }
  return out;
}

std::string to_string(WordExpr const& e) {
  using Kind = WordExpr::Kind;
  auto const& kids = e.children();
  switch (e.kind()) {
    case Kind::Empty:
      return "1";
    case Kind::Gen:
      return e.generator().symbol();
    case Kind::Inverse:
      return as_atom(kids[0]) + "^-1";
    case Kind::Power:
      return as_atom(kids[0]) + "^" + std::to_string(e.exponent());
    case Kind::Conjugate:
      return as_atom(kids[0]) + "^" + as_atom(kids[1]);
    case Kind::Commutator:
      return "[" + to_string(kids[0]) + ", " + to_string(kids[1]) + "]";
    case Kind::Product: {
      std::string out;
      for (auto const& kid : kids) {
        if (!out.empty()) {
          out += ' ';
        }
        out += as_term(kid);
      }
      return out;
    }
  }
  return {};
}

std::vector<GenName> generators_of(WordExpr const& e) {
  std::vector<GenName> out;
  collect_generators(e, out);
  return out;
}

}  // namespace cantor
