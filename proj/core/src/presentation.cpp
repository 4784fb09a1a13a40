#include "fpg/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "fpg/errors.hpp"
#include "json.hpp"

namespace fpg {

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      message_(message),
      line_(line),
      column_(column) {}

int Word::max_generator() const noexcept {
  int m = 0;
  for (Letter x : letters_) m = std::max(m, std::abs(x));
  return m;
}

bool Word::is_freely_reduced() const noexcept {
  for (std::size_t i = 1; i < letters_.size(); ++i) {
    if (letters_[i] == -letters_[i - 1]) return false;
  }
  return true;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == -x) {
      out.pop_back();
    } else {
      out.push_back(x);
    }
  }
  return Word(std::move(out));
}

Word cyclic_reduce(const Word& w) {
  std::size_t lo = 0;
  std::size_t hi = w.size();
  while (hi - lo >= 2 && w[lo] == -w[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(std::vector<Letter>(w.begin() + static_cast<std::ptrdiff_t>(lo),
                                  w.begin() + static_cast<std::ptrdiff_t>(hi)));
}

Word invert(const Word& w) {
  std::vector<Letter> out(w.size());
  std::transform(w.begin(), w.end(), out.rbegin(), [](Letter x) { return -x; });
  return Word(std::move(out));
}

Word concat(const Word& a, const Word& b) {
  std::vector<Letter> out(a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return Word(std::move(out));
}

Word power(const Word& w, long n) {
  const Word base = n < 0 ? invert(w) : w;
  std::vector<Letter> out;
  const long reps = n < 0 ? -n : n;
  out.reserve(base.size() * static_cast<std::size_t>(reps));
  for (long i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(Word(std::move(out)));
}

Word commutator(const Word& x, const Word& y) {
  return free_reduce(concat(concat(invert(x), invert(y)), concat(x, y)));
}

std::vector<long> exponent_sums(const Word& w, std::size_t generator_count) {
  std::vector<long> sums(generator_count, 0);
  for (Letter x : w) {
    const auto g = static_cast<std::size_t>(std::abs(x)) - 1;
    if (g >= generator_count) throw std::out_of_range("letter outside generator range");
    sums[g] += x > 0 ? 1 : -1;
  }
  return sums;
}

bool is_identifier(const std::string& s) noexcept {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

Presentation::Presentation(std::vector<std::string> generator_names, std::vector<Word> relators)
    : names_(std::move(generator_names)) {
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!is_identifier(name)) throw std::invalid_argument("invalid generator name '" + name + "'");
    if (!seen.insert(name).second) {
      throw std::invalid_argument("duplicate generator name '" + name + "'");
    }
  }
  const int k = static_cast<int>(names_.size());
  for (const auto& r : relators) {
    if (std::any_of(r.begin(), r.end(), [](Letter x) { return x == 0; })) {
      throw std::invalid_argument("relator contains letter 0");
    }
    if (r.max_generator() > k) throw std::invalid_argument("relator letter outside generator range");
    Word reduced = cyclic_reduce(free_reduce(r));
    if (!reduced.empty()) relators_.push_back(std::move(reduced));
  }
}

int Presentation::generator_index(const std::string& name) const noexcept {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? 0 : static_cast<int>(it - names_.begin()) + 1;
}

std::string Presentation::letter_name(Letter x) const {
  const auto& name = names_.at(static_cast<std::size_t>(std::abs(x)) - 1);
  return x > 0 ? name : name + "^-1";
}

std::string Presentation::format_word(const Word& w) const {
  if (w.empty()) return "1";
  std::ostringstream out;
  std::size_t i = 0;
  bool first = true;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const long run = static_cast<long>(j - i);
    if (!first) out << '*';
    first = false;
    out << names_.at(static_cast<std::size_t>(std::abs(w[i])) - 1);
    const long e = w[i] > 0 ? run : -run;
    if (e != 1) out << '^' << e;
    i = j;
  }
  return out.str();
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Presentation presentation() {
    expect('<', "expected '<' to open the presentation");
    std::vector<std::string> names;
    skip_space();
    if (peek() != '|') {
      while (true) {
        skip_space();
        const auto [line, col] = position();
        std::string name = identifier("expected a generator name");
        if (generator_index(names, name) != 0) {
          throw ParseError("duplicate generator '" + name + "'", line, col);
        }
        names.push_back(std::move(name));
        skip_space();
        if (peek() == ',') {
          advance();
          continue;
        }
        break;
      }
    }
    expect('|', "expected ',' or '|' after generator list");
    names_ = &names;
    std::vector<Word> relators;
    skip_space();
    if (peek() != '>') {
      while (true) {
        relators.push_back(expression());
        skip_space();
        if (peek() == ',') {
          advance();
          continue;
        }
        break;
      }
    }
    expect('>', "expected ',' or '>' after relator");
    skip_space();
    if (!at_end()) fail("unexpected text after the closing '>'");
    names_ = nullptr;
    return Presentation(std::move(names), std::move(relators));
  }

  std::vector<Word> word_list(const std::vector<std::string>& names) {
    names_ = &names;
    std::vector<Word> words;
    skip_space();
    if (at_end()) return words;
    while (true) {
      words.push_back(expression());
      skip_space();
      if (peek() == ',') {
        advance();
        continue;
      }
      break;
    }
    skip_space();
    if (!at_end()) fail("expected ',' between words");
    return words;
  }

 private:
  static constexpr long kMaxExponent = 1'000'000;
  static constexpr std::size_t kMaxWordLength = 10'000'000;

  static int generator_index(const std::vector<std::string>& names, const std::string& name) {
    auto it = std::find(names.begin(), names.end(), name);
    return it == names.end() ? 0 : static_cast<int>(it - names.begin()) + 1;
  }

  Word expression() {
    skip_space();
    if (!starts_factor()) fail("expected a generator, '(' or '['");
    std::vector<Letter> letters;
    while (true) {
      Word t = term();
      letters.insert(letters.end(), t.begin(), t.end());
      if (letters.size() > kMaxWordLength) fail("word too long");
      skip_space();
      if (peek() == '*') {
        advance();
        skip_space();
        if (!starts_factor()) fail("expected a factor after '*'");
        continue;
      }
      if (starts_factor()) continue;
      break;
    }
    return free_reduce(Word(std::move(letters)));
  }

  Word term() {
    Word w = factor();
    skip_space();
    while (peek() == '^') {
      advance();
      skip_space();
      const long e = integer();
      if (w.size() * static_cast<std::size_t>(std::labs(e)) > kMaxWordLength) fail("word too long");
      w = power(w, e);
      skip_space();
    }
    return w;
  }

  Word factor() {
    skip_space();
    const char c = peek();
    if (c == '(') {
      advance();
      Word w = expression();
      expect(')', "expected ')'");
      return w;
    }
    if (c == '[') {
      advance();
      Word x = expression();
      expect(',', "expected ',' inside commutator");
      Word y = expression();
      expect(']', "expected ']' to close commutator");
      return commutator(x, y);
    }
    const auto [line, col] = position();
    std::string name = identifier("expected a generator, '(' or '['");
    const int g = generator_index(*names_, name);
    if (g == 0) throw ParseError("unknown generator '" + name + "'", line, col);
    return Word{g};
  }

  long integer() {
    const auto [line, col] = position();
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = peek() == '-';
      advance();
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) {
      throw ParseError("expected an integer exponent", line, col);
    }
    long value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > kMaxExponent) throw ParseError("exponent out of range", line, col);
      advance();
    }
    return negative ? -value : value;
  }

  std::string identifier(const char* what) {
    if (!std::isalpha(static_cast<unsigned char>(peek()))) fail(what);
    std::string out;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') {
      out.push_back(peek());
      advance();
    }
    return out;
  }

  bool starts_factor() const {
    const char c = peek();
    return c == '(' || c == '[' || std::isalpha(static_cast<unsigned char>(c));
  }

  void expect(char c, const char* what) {
    skip_space();
    if (peek() != c) fail(what);
    advance();
  }

  void skip_space() {
    while (!at_end()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (!at_end() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  bool at_end() const { return pos_ >= text_.size(); }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  std::pair<std::size_t, std::size_t> position() const { return {line_, col_}; }

  [[noreturn]] void fail(const std::string& message) const {
    std::string where = at_end() ? " at end of input" : std::string(" near '") + peek() + "'";
    throw ParseError(message + where, line_, col_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
  const std::vector<std::string>* names_ = nullptr;
};

}  // namespace

Presentation parse_presentation(const std::string& text) {
  return Parser(text).presentation();
}

std::vector<Word> parse_word_list(const std::string& text, const Presentation& ambient) {
  return Parser(text).word_list(ambient.generator_names());
}

std::string to_dsl(const Presentation& p) {
  std::ostringstream out;
  out << "< ";
  for (std::size_t i = 0; i < p.generator_names().size(); ++i) {
    out << (i ? ", " : "") << p.generator_names()[i];
  }
  out << (p.generator_names().empty() ? "| " : " | ");
  for (std::size_t i = 0; i < p.relators().size(); ++i) {
    out << (i ? ", " : "") << p.format_word(p.relators()[i]);
  }
  out << (p.relators().empty() ? ">" : " >");
  return out.str();
}

std::string to_json(const Presentation& p) {
  nlohmann::ordered_json j;
  j["generators"] = p.generator_names();
  auto relators = nlohmann::ordered_json::array();
  auto words = nlohmann::ordered_json::array();
  for (const auto& r : p.relators()) {
    relators.push_back(std::vector<Letter>(r.begin(), r.end()));
    words.push_back(p.format_word(r));
  }
  j["relators"] = std::move(relators);
  j["relator_words"] = std::move(words);
  return j.dump(2);
}

}  // namespace fpg
