#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace fpg {

/// Signed generator index: +i is generator i (1-based), -i its inverse.
using Letter = int;

/// A word in the generators of a presentation.
///
/// Words are plain letter sequences; reduction is explicit through
/// free_reduce() and cyclic_reduce().
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters) : letters_(letters) {}
  explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

  std::span<const Letter> letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const { return letters_[i]; }

  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  /// Largest |letter| occurring, 0 for the empty word.
  int max_generator() const noexcept;
  bool is_freely_reduced() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Letter> letters_;
};

Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);
Word invert(const Word& w);
Word concat(const Word& a, const Word& b);
/// w repeated |n| times, inverted first when n < 0, then freely reduced.
Word power(const Word& w, long n);
/// [x,y] = x^-1 y^-1 x y, freely reduced.
Word commutator(const Word& x, const Word& y);

/// Exponent sum of each generator (index 0 holds generator 1).
std::vector<long> exponent_sums(const Word& w, std::size_t generator_count);

/// Finitely presented group < generators | relators >.
///
/// Construction validates generator names and letter ranges, reduces each
/// relator freely and cyclically, and drops relators that become empty.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> generator_names, std::vector<Word> relators);

  const std::vector<std::string>& generator_names() const noexcept { return names_; }
  const std::vector<Word>& relators() const noexcept { return relators_; }
  std::size_t generator_count() const noexcept { return names_.size(); }

  /// 1-based generator index for a name, 0 when absent.
  int generator_index(const std::string& name) const noexcept;

  /// Render one letter / word in DSL syntax, e.g. "a^-1*b^2".
  std::string letter_name(Letter x) const;
  std::string format_word(const Word& w) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

/// Whether s matches the identifier rule: ASCII letter, then letters, digits or '_'.
bool is_identifier(const std::string& s) noexcept;

/// Parse the presentation DSL `< g1, g2 | r1, r2 >`. Throws ParseError.
Presentation parse_presentation(const std::string& text);

/// Parse a comma-separated list of word expressions over the generators of
/// `ambient`, e.g. "a*b, [a,b]^2". Throws ParseError.
std::vector<Word> parse_word_list(const std::string& text, const Presentation& ambient);

/// Serialize back to the DSL; parse_presentation(to_dsl(p)) == p.
std::string to_dsl(const Presentation& p);

/// Canonical JSON: {"generators": [...], "relators": [[letters]...], "relator_words": [...]}.
std::string to_json(const Presentation& p);

}  // namespace fpg
