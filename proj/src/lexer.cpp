#include "lol/token.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace lol {

const std::vector<KeywordPhrase>& keyword_phrases() {
  static const std::vector<KeywordPhrase> table = [] {
    std::vector<KeywordPhrase> t = {
        {{"ITZ", "SRSLY", "LOTZ", "A"}, Tok::KwItzSrslyLotzA},
        {{"IM", "SRSLY", "MESIN", "WIF"}, Tok::KwImSrslyMesinWif},
        {{"I", "HAS", "A"}, Tok::KwIHasA},
        {{"WE", "HAS", "A"}, Tok::KwWeHasA},
        {{"ITZ", "SRSLY", "A"}, Tok::KwItzSrslyA},
        {{"IM", "MESIN", "WIF"}, Tok::KwImMesinWif},
        {{"DUN", "MESIN", "WIF"}, Tok::KwDunMesinWif},
        {{"TXT", "MAH", "BFF"}, Tok::KwTxtMahBff},
        {{"TXN", "MAH", "BFF"}, Tok::KwTxtMahBff},
        {{"IM", "IN", "YR"}, Tok::KwImInYr},
        {{"IM", "OUTTA", "YR"}, Tok::KwImOuttaYr},
        {{"IS", "NOW", "A"}, Tok::KwIsNowA},
        {{"IM", "SHARIN", "IT"}, Tok::KwImSharinIt},
        {{"O", "RLY", "?"}, Tok::KwORly},
        {{"ITZ", "A"}, Tok::KwItzA},
        {{"SUM", "OF"}, Tok::KwSumOf},
        {{"DIFF", "OF"}, Tok::KwDiffOf},
        {{"PRODUKT", "OF"}, Tok::KwProduktOf},
        {{"QUOSHUNT", "OF"}, Tok::KwQuoshuntOf},
        {{"MOD", "OF"}, Tok::KwModOf},
        {{"BOTH", "SAEM"}, Tok::KwBothSaem},
        {{"SQUAR", "OF"}, Tok::KwSquarOf},
        {{"UNSQUAR", "OF"}, Tok::KwUnsquarOf},
        {{"FLIP", "OF"}, Tok::KwFlipOf},
        {{"MAH", "FRENZ"}, Tok::KwMahFrenz},
        {{"AN", "STUFF"}, Tok::KwAnStuff},
        {{"THAR", "IZ"}, Tok::KwTharIz},
        {{"CAN", "HAS"}, Tok::KwCanHas},
        {{"YA", "RLY"}, Tok::KwYaRly},
        {{"NO", "WAI"}, Tok::KwNoWai},
        {{"WTF", "?"}, Tok::KwWtf},
        {{"HAI"}, Tok::KwHai},
        {{"KTHXBYE"}, Tok::KwKthxbye},
        {{"VISIBLE"}, Tok::KwVisible},
        {{"GIMMEH"}, Tok::KwGimmeh},
        {{"ITZ"}, Tok::KwItz},
        {{"R"}, Tok::KwR},
        {{"AN"}, Tok::KwAn},
        {{"A"}, Tok::KwA},
        {{"MAEK"}, Tok::KwMaek},
        {{"SRS"}, Tok::KwSrs},
        {{"DIFFRINT"}, Tok::KwDiffrint},
        {{"BIGGER"}, Tok::KwBigger},
        {{"SMALLR"}, Tok::KwSmallr},
        {{"OIC"}, Tok::KwOic},
        {{"OMG"}, Tok::KwOmg},
        {{"OMGWTF"}, Tok::KwOmgwtf},
        {{"GTFO"}, Tok::KwGtfo},
        {{"UPPIN"}, Tok::KwUppin},
        {{"NERFIN"}, Tok::KwNerfin},
        {{"YR"}, Tok::KwYr},
        {{"TIL"}, Tok::KwTil},
        {{"WILE"}, Tok::KwWile},
        {{"HUGZ"}, Tok::KwHugz},
        {{"TTYL"}, Tok::KwTtyl},
        {{"ME"}, Tok::KwMe},
        {{"WHATEVR"}, Tok::KwWhatevr},
        {{"WHATEVAR"}, Tok::KwWhatevar},
        {{"UR"}, Tok::KwUr},
        {{"MAH"}, Tok::KwMah},
        {{"WIN"}, Tok::KwWin},
        {{"FAIL"}, Tok::KwFail},
        {{"NOOB"}, Tok::KwNoob},
        {{"NUMBR"}, Tok::KwNumbr},
        {{"NUMBAR"}, Tok::KwNumbar},
        {{"YARN"}, Tok::KwYarn},
        {{"TROOF"}, Tok::KwTroof},
        {{"NUMBRS"}, Tok::KwNumbrs},
        {{"NUMBARS"}, Tok::KwNumbars},
        {{"YARNS"}, Tok::KwYarns},
        {{"TROOFS"}, Tok::KwTroofs},
    };
    std::stable_sort(t.begin(), t.end(), [](const KeywordPhrase& a, const KeywordPhrase& b) {
      return a.words.size() > b.words.size();
    });
    return t;
  }();
  return table;
}

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "ident";
    case Tok::Numbr: return "numbr";
    case Tok::Numbar: return "numbar";
    case Tok::Yarn: return "yarn";
    case Tok::Sep: return "sep";
    case Tok::IdxMarker: return "idx";
    case Tok::Question: return "question";
    case Tok::Eof: return "eof";
    case Tok::KwHai: return "HAI";
    case Tok::KwKthxbye: return "KTHXBYE";
    case Tok::KwCanHas: return "CAN_HAS";
    case Tok::KwVisible: return "VISIBLE";
    case Tok::KwGimmeh: return "GIMMEH";
    case Tok::KwIHasA: return "I_HAS_A";
    case Tok::KwWeHasA: return "WE_HAS_A";
    case Tok::KwItz: return "ITZ";
    case Tok::KwItzA: return "ITZ_A";
    case Tok::KwItzSrslyA: return "ITZ_SRSLY_A";
    case Tok::KwItzSrslyLotzA: return "ITZ_SRSLY_LOTZ_A";
    case Tok::KwTharIz: return "THAR_IZ";
    case Tok::KwImSharinIt: return "IM_SHARIN_IT";
    case Tok::KwR: return "R";
    case Tok::KwAn: return "AN";
    case Tok::KwA: return "A";
    case Tok::KwSumOf: return "SUM_OF";
    case Tok::KwDiffOf: return "DIFF_OF";
    case Tok::KwProduktOf: return "PRODUKT_OF";
    case Tok::KwQuoshuntOf: return "QUOSHUNT_OF";
    case Tok::KwModOf: return "MOD_OF";
    case Tok::KwBothSaem: return "BOTH_SAEM";
    case Tok::KwDiffrint: return "DIFFRINT";
    case Tok::KwBigger: return "BIGGER";
    case Tok::KwSmallr: return "SMALLR";
    case Tok::KwMaek: return "MAEK";
    case Tok::KwIsNowA: return "IS_NOW_A";
    case Tok::KwSrs: return "SRS";
    case Tok::KwORly: return "O_RLY";
    case Tok::KwYaRly: return "YA_RLY";
    case Tok::KwNoWai: return "NO_WAI";
    case Tok::KwOic: return "OIC";
    case Tok::KwWtf: return "WTF";
    case Tok::KwOmg: return "OMG";
    case Tok::KwOmgwtf: return "OMGWTF";
    case Tok::KwGtfo: return "GTFO";
    case Tok::KwImInYr: return "IM_IN_YR";
    case Tok::KwImOuttaYr: return "IM_OUTTA_YR";
    case Tok::KwUppin: return "UPPIN";
    case Tok::KwNerfin: return "NERFIN";
    case Tok::KwYr: return "YR";
    case Tok::KwTil: return "TIL";
    case Tok::KwWile: return "WILE";
    case Tok::KwMahFrenz: return "MAH_FRENZ";
    case Tok::KwMe: return "ME";
    case Tok::KwImSrslyMesinWif: return "IM_SRSLY_MESIN_WIF";
    case Tok::KwImMesinWif: return "IM_MESIN_WIF";
    case Tok::KwDunMesinWif: return "DUN_MESIN_WIF";
    case Tok::KwHugz: return "HUGZ";
    case Tok::KwTxtMahBff: return "TXT_MAH_BFF";
    case Tok::KwAnStuff: return "AN_STUFF";
    case Tok::KwTtyl: return "TTYL";
    case Tok::KwUr: return "UR";
    case Tok::KwMah: return "MAH";
    case Tok::KwWhatevr: return "WHATEVR";
    case Tok::KwWhatevar: return "WHATEVAR";
    case Tok::KwSquarOf: return "SQUAR_OF";
    case Tok::KwUnsquarOf: return "UNSQUAR_OF";
    case Tok::KwFlipOf: return "FLIP_OF";
    case Tok::KwWin: return "WIN";
    case Tok::KwFail: return "FAIL";
    case Tok::KwNoob: return "NOOB";
    case Tok::KwNumbr: return "NUMBR";
    case Tok::KwNumbar: return "NUMBAR";
    case Tok::KwYarn: return "YARN";
    case Tok::KwTroof: return "TROOF";
    case Tok::KwNumbrs: return "NUMBRS";
    case Tok::KwNumbars: return "NUMBARS";
    case Tok::KwYarns: return "YARNS";
    case Tok::KwTroofs: return "TROOFS";
  }
  return "?";
}

bool is_keyword(Tok t) { return t >= Tok::KwHai; }

namespace {

bool is_word_start(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    while (!eof()) {
      skip_spaces();
      if (eof()) break;
      char c = cur();
      Span here = span();
      if (c == '\n') {
        advance();
        emit_sep("\n", here);
      } else if (c == ',') {
        advance();
        emit_sep(",", here);
      } else if (c == '.') {
        consume_continuation();
      } else if (c == '"') {
        scan_yarn();
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        scan_number(false);
      } else if (c == '-') {
        if (pos_ + 1 < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_ + 1])) &&
            !prev_expr_final()) {
          scan_number(true);
        } else {
          throw LexError(here, "unexpected '-' (this language has no infix operators)");
        }
      } else if (c == '\'') {
        advance();
        if (!eof() && (cur() == 'Z' || cur() == 'z')) {
          std::string text = std::string("'") + cur();
          advance();
          out_.push_back({Tok::IdxMarker, text, here});
        } else {
          throw LexError(here, "expected 'Z array index marker after '");
        }
      } else if (c == '?') {
        advance();
        out_.push_back({Tok::Question, "?", here});
      } else if (is_word_start(c)) {
        scan_word_or_phrase();
      } else {
        throw LexError(here, std::string("stray character '") + c + "'");
      }
    }
    // drop a trailing separator; it carries no statement
    if (!out_.empty() && out_.back().kind == Tok::Sep) out_.pop_back();
    return std::move(out_);
  }

private:
  struct Cursor {
    size_t pos;
    int line;
    int col;
  };

  bool eof() const { return pos_ >= src_.size(); }
  char cur() const { return src_[pos_]; }
  Span span() const { return {line_, col_}; }

  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_spaces() {
    while (!eof() && (cur() == ' ' || cur() == '\t' || cur() == '\r')) advance();
  }

  void emit_sep(const char* text, Span at) {
    if (out_.empty() || out_.back().kind == Tok::Sep) return;
    out_.push_back({Tok::Sep, text, at});
  }

  bool prev_expr_final() const {
    if (out_.empty()) return false;
    switch (out_.back().kind) {
      case Tok::Ident:
      case Tok::Numbr:
      case Tok::Numbar:
      case Tok::Yarn:
      case Tok::KwWin:
      case Tok::KwFail:
      case Tok::KwNoob:
      case Tok::KwMe:
      case Tok::KwMahFrenz:
      case Tok::KwWhatevr:
      case Tok::KwWhatevar:
      case Tok::KwNumbr:
      case Tok::KwNumbar:
      case Tok::KwYarn:
      case Tok::KwTroof:
      case Tok::KwNumbrs:
      case Tok::KwNumbars:
      case Tok::KwYarns:
      case Tok::KwTroofs:
        return true;
      default:
        return false;
    }
  }

  // At the first '.' of a hoped-for "...": joins this line with the next.
  void consume_continuation() {
    Span here = span();
    if (src_.compare(pos_, 3, "...") != 0) throw LexError(here, "stray '.'");
    advance();
    advance();
    advance();
    skip_spaces();
    // a trailing comment after ... is allowed
    if (!eof() && is_word_start(cur())) {
      Cursor save = mark();
      std::string w = scan_raw_word();
      if (w == "BTW") {
        while (!eof() && cur() != '\n') advance();
      } else {
        restore(save);
        throw LexError(here, "unexpected text after '...' line continuation");
      }
    }
    if (eof()) throw LexError(here, "'...' continuation at end of input");
    if (cur() != '\n') throw LexError(here, "unexpected text after '...' line continuation");
    advance();  // swallow the newline: no separator
  }

  void scan_yarn() {
    Span here = span();
    std::string text;
    text += '"';
    advance();
    while (true) {
      if (eof() || cur() == '\n') throw LexError(here, "unterminated string literal");
      char c = cur();
      if (c == '"') {
        advance();
        text += '"';
        break;
      }
      if (c == ':') {
        advance();
        if (eof()) throw LexError(here, "unterminated string literal");
        char e = cur();
        if (e != ')' && e != '>' && e != '"' && e != ':')
          throw LexError(span(), std::string("unknown escape sequence ':") + e + "'");
        text += ':';
        text += e;
        advance();
        continue;
      }
      text += c;
      advance();
    }
    out_.push_back({Tok::Yarn, std::move(text), here});
  }

  void scan_number(bool negative) {
    Span here = span();
    std::string text;
    if (negative) {
      text += '-';
      advance();
    }
    while (!eof() && std::isdigit(static_cast<unsigned char>(cur()))) {
      text += cur();
      advance();
    }
    bool is_float = false;
    if (!eof() && cur() == '.' && pos_ + 1 < src_.size() &&
        std::isdigit(static_cast<unsigned char>(src_[pos_ + 1]))) {
      is_float = true;
      text += '.';
      advance();
      while (!eof() && std::isdigit(static_cast<unsigned char>(cur()))) {
        text += cur();
        advance();
      }
    }
    if (!is_float) {
      int64_t v = 0;
      auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
      if (ec != std::errc() || p != text.data() + text.size())
        throw LexError(here, "NUMBR literal out of range: " + text);
    }
    out_.push_back({is_float ? Tok::Numbar : Tok::Numbr, std::move(text), here});
  }

  Cursor mark() const { return {pos_, line_, col_}; }
  void restore(Cursor c) {
    pos_ = c.pos;
    line_ = c.line;
    col_ = c.col;
  }

  std::string scan_raw_word() {
    std::string w;
    while (!eof() && is_word_char(cur())) {
      w += cur();
      advance();
    }
    return w;
  }

  // Skips spaces and '...' continuations between the words of one phrase.
  void skip_between_words() {
    while (true) {
      skip_spaces();
      if (!eof() && cur() == '.' && src_.compare(pos_, 3, "...") == 0) {
        size_t save_pos = pos_;
        int save_line = line_, save_col = col_;
        advance();
        advance();
        advance();
        skip_spaces();
        if (!eof() && cur() == '\n') {
          advance();
          continue;
        }
        pos_ = save_pos;
        line_ = save_line;
        col_ = save_col;
      }
      return;
    }
  }

  void scan_word_or_phrase() {
    struct Unit {
      std::string text;
      Span at;
      Cursor after;
    };
    Span first = span();
    std::vector<Unit> units;
    Cursor start = mark();
    for (int i = 0; i < 4; ++i) {
      if (i > 0) skip_between_words();
      if (eof()) break;
      if (is_word_start(cur())) {
        Span at = span();
        std::string w = scan_raw_word();
        units.push_back({std::move(w), at, mark()});
      } else if (cur() == '?') {
        Span at = span();
        advance();
        units.push_back({"?", at, mark()});
      } else {
        break;
      }
    }
    for (const auto& phrase : keyword_phrases()) {
      size_t n = phrase.words.size();
      if (n > units.size()) continue;
      bool match = true;
      for (size_t i = 0; i < n; ++i)
        if (units[i].text != phrase.words[i]) {
          match = false;
          break;
        }
      if (match) {
        std::string text = units[0].text;
        for (size_t i = 1; i < n; ++i) {
          text += ' ';
          text += units[i].text;
        }
        restore(units[n - 1].after);
        out_.push_back({phrase.kind, std::move(text), first});
        return;
      }
    }
    // single word: comment openers or an identifier
    restore(start);
    std::string w = scan_raw_word();
    if (w == "BTW") {
      while (!eof() && cur() != '\n') advance();
      return;
    }
    if (w == "OBTW") {
      skip_multiline_comment(first);
      return;
    }
    if (w == "TLDR") throw LexError(first, "TLDR without a matching OBTW");
    out_.push_back({Tok::Ident, std::move(w), first});
  }

  void skip_multiline_comment(Span open) {
    while (true) {
      if (eof()) throw LexError(open, "unterminated OBTW comment");
      if (is_word_start(cur())) {
        if (scan_raw_word() == "TLDR") return;
      } else {
        advance();
      }
    }
  }

  std::string_view src_;
  size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::vector<Token> out_;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

std::string decode_yarn(const Token& tok) {
  const std::string& t = tok.text;
  std::string out;
  // raw text is quote-delimited with validated escapes
  for (size_t i = 1; i + 1 < t.size(); ++i) {
    if (t[i] == ':') {
      ++i;
      switch (t[i]) {
        case ')': out += '\n'; break;
        case '>': out += '\t'; break;
        case '"': out += '"'; break;
        case ':': out += ':'; break;
      }
    } else {
      out += t[i];
    }
  }
  return out;
}

}  // namespace lol
