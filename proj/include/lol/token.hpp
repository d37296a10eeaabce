// Token kinds, the multi-word keyword phrase table, and the lexer entry point.
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lol/diag.hpp"

namespace lol {

enum class Tok : uint8_t {
  // non-keyword kinds
  Ident,
  Numbr,
  Numbar,
  Yarn,
  Sep,        // newline or comma
  IdxMarker,  // 'Z
  Question,   // ? not absorbed by O RLY? / WTF?
  Eof,

  // program frame and basics
  KwHai,
  KwKthxbye,
  KwCanHas,
  KwVisible,
  KwGimmeh,

  // declarations
  KwIHasA,
  KwWeHasA,
  KwItz,
  KwItzA,
  KwItzSrslyA,
  KwItzSrslyLotzA,
  KwTharIz,
  KwImSharinIt,

  // assignment and expression glue
  KwR,
  KwAn,
  KwA,

  // operators
  KwSumOf,
  KwDiffOf,
  KwProduktOf,
  KwQuoshuntOf,
  KwModOf,
  KwBothSaem,
  KwDiffrint,
  KwBigger,
  KwSmallr,

  // casts and dynamic identifiers
  KwMaek,
  KwIsNowA,
  KwSrs,

  // control flow
  KwORly,
  KwYaRly,
  KwNoWai,
  KwOic,
  KwWtf,
  KwOmg,
  KwOmgwtf,
  KwGtfo,
  KwImInYr,
  KwImOuttaYr,
  KwUppin,
  KwNerfin,
  KwYr,
  KwTil,
  KwWile,

  // parallel extensions
  KwMahFrenz,
  KwMe,
  KwImSrslyMesinWif,
  KwImMesinWif,
  KwDunMesinWif,
  KwHugz,
  KwTxtMahBff,
  KwAnStuff,
  KwTtyl,
  KwUr,
  KwMah,

  // builtin math and randomness
  KwWhatevr,
  KwWhatevar,
  KwSquarOf,
  KwUnsquarOf,
  KwFlipOf,

  // literals
  KwWin,
  KwFail,
  KwNoob,

  // type names (plural forms appear in array declarations)
  KwNumbr,
  KwNumbar,
  KwYarn,
  KwTroof,
  KwNumbrs,
  KwNumbars,
  KwYarns,
  KwTroofs,
};

struct Token {
  Tok kind;
  std::string text;  // raw lexeme; multi-word keywords joined by single spaces
  Span span;
};

struct KeywordPhrase {
  std::vector<std::string_view> words;  // "?" counts as a word
  Tok kind;
};

// Phrase table ordered longest-first; both TXT MAH BFF and TXN MAH BFF map
// to the same kind.
const std::vector<KeywordPhrase>& keyword_phrases();

// Stable name used by --dump-tokens and the AST printer.
const char* tok_name(Tok t);

bool is_keyword(Tok t);

std::vector<Token> tokenize(std::string_view source);

// Decodes a YARN token's raw text (including quotes) into its string value.
std::string decode_yarn(const Token& tok);

}  // namespace lol
