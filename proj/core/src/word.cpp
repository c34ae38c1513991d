#include "gsc/word.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace gsc {

namespace {

bool valid_name(const std::string& n) {
  if (n.empty()) return false;
  for (char c : n) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '#')
      return false;
  }
  return true;
}

}  // namespace

Alphabet make_alphabet(const std::vector<std::string>& names) {
  if (names.empty()) throw Error::parse("alphabet: empty generator list");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_name(n))
      throw Error::parse("alphabet: invalid generator name '" + n + "'");
    if (!seen.insert(n).second)
      throw Error::parse("alphabet: duplicate generator name '" + n + "'");
  }
  for (const auto& n : names) {
    if (seen.count(n + "^-1"))
      throw Error::parse("alphabet: name '" + n +
                         "^-1' collides with the inverse of '" + n + "'");
  }

  Alphabet a;
  a.names_ = names;
  int k = a.letter_count();
  std::vector<Letter> order(k);
  for (Letter s = 0; s < k; ++s) order[s] = s;
  std::sort(order.begin(), order.end(), [&a](Letter x, Letter y) {
    return a.letter_name(x) < a.letter_name(y);
  });
  a.by_name_ = order;
  a.name_rank_.assign(k, 0);
  for (int r = 0; r < k; ++r) a.name_rank_[order[r]] = r;
  return a;
}

std::string Alphabet::letter_name(Letter s) const {
  const std::string& base = names_[generator_of(s)];
  return is_positive(s) ? base : base + "^-1";
}

std::optional<Letter> Alphabet::find(std::string_view token) const {
  for (int i = 0; i < size(); ++i) {
    if (token == names_[i]) return static_cast<Letter>(2 * i);
  }
  if (token.size() > 3 && token.substr(token.size() - 3) == "^-1") {
    std::string_view base = token.substr(0, token.size() - 3);
    for (int i = 0; i < size(); ++i) {
      if (base == names_[i]) return static_cast<Letter>(2 * i + 1);
    }
  }
  return std::nullopt;
}

bool Alphabet::compact() const {
  for (const auto& n : names_) {
    if (n.size() != 1 || !std::islower(static_cast<unsigned char>(n[0])))
      return false;
  }
  return true;
}

Word parse_word(std::string_view text, const Alphabet& alphabet) {
  bool has_separator = text.find_first_of(" \t\r\n,^") != std::string_view::npos;
  Word w;
  if (!has_separator && alphabet.compact()) {
    for (char c : text) {
      if (std::islower(static_cast<unsigned char>(c))) {
        auto s = alphabet.find(std::string_view(&c, 1));
        if (!s) throw Error::parse(std::string("unknown symbol '") + c + "'");
        w.push_back(*s);
      } else if (std::isupper(static_cast<unsigned char>(c))) {
        char lower = static_cast<char>(std::tolower(c));
        auto s = alphabet.find(std::string_view(&lower, 1));
        if (!s) throw Error::parse(std::string("unknown symbol '") + c + "'");
        w.push_back(inverse(*s));
      } else {
        throw Error::parse(std::string("unknown symbol '") + c + "'");
      }
    }
    return w;
  }
  // Token form.
  std::string buf(text);
  for (char& c : buf) {
    if (c == ',') c = ' ';
  }
  std::istringstream in(buf);
  std::string tok;
  while (in >> tok) {
    auto s = alphabet.find(tok);
    if (!s) throw Error::parse("unknown symbol '" + tok + "'");
    w.push_back(*s);
  }
  return w;
}

std::string word_text(const Word& w, const Alphabet& alphabet) {
  std::string out;
  if (alphabet.compact()) {
    for (Letter s : w) {
      char c = alphabet.generator_name(generator_of(s))[0];
      out += is_positive(s) ? c : static_cast<char>(std::toupper(c));
    }
    return out;
  }
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += alphabet.letter_name(w[i]);
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] == inverse(w[i - 1])) return false;
  }
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || w.front() != inverse(w.back());
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter s : w) {
    if (!out.empty() && out.back() == inverse(s)) {
      out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return out;
}

CyclicReduction cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t i = 0, j = r.size();
  Word conj;
  while (j - i >= 2 && r[i] == inverse(r[j - 1])) {
    conj.push_back(r[i]);
    ++i;
    --j;
  }
  return {Word(r.begin() + i, r.begin() + j), conj};
}

Word invert(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word rotated(const Word& w, int r) {
  if (w.empty()) return w;
  r = ((r % static_cast<int>(w.size())) + static_cast<int>(w.size())) %
      static_cast<int>(w.size());
  Word out(w.begin() + r, w.end());
  out.insert(out.end(), w.begin(), w.begin() + r);
  return out;
}

bool shortlex_less(const Word& a, const Word& b, const Alphabet& alphabet) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int ra = alphabet.name_rank(a[i]);
    int rb = alphabet.name_rank(b[i]);
    if (ra != rb) return ra < rb;
  }
  return false;
}

}  // namespace gsc
