#pragma once

// Layout description language (LDL): vocabulary, lexer, parser, validator and
// canonical serializer for symbolic slide layout prototypes.
//
// A sequence is <SOS>, one slide-type declaration (slide type + attrs), then
// zero or more <SEP>-delimited element declarations, then <EOS>. Element
// declarations start with an element type followed by attribute and position
// tokens in any order. A trailing <SEP> directly before <EOS> is accepted on
// input (the terminator style); the canonical serializer emits separator
// style without it.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdio>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "slidesmith/errors.hpp"

namespace slidesmith::ldl {

enum class TokenKind { SlideType, ElemType, Attr, Pos, Special, Reserved };

inline constexpr int kVocabSize = 200;
inline constexpr int kMaxSequenceTokens = 128;

struct Token {
  TokenKind kind{TokenKind::Reserved};
  int id{-1};
  std::string_view name;  // points into the registry; stable for program lifetime

  friend bool operator==(const Token& a, const Token& b) { return a.id == b.id; }
};

class Vocabulary {
 public:
  static const Vocabulary& instance() {
    static const Vocabulary v;
    return v;
  }

  int size() const { return static_cast<int>(tokens_.size()); }

  const Token& by_id(int id) const {
    if (id < 0 || id >= size()) fail(errc::bad_argument, std::to_string(id), "token id out of range");
    return tokens_[static_cast<size_t>(id)];
  }

  const Token* find(std::string_view name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : &tokens_[static_cast<size_t>(it->second)];
  }

  const Token& by_name(std::string_view name) const {
    const Token* t = find(name);
    if (!t) fail(errc::unknown_token, std::string(name), "name not in vocabulary");
    return *t;
  }

  int sos() const { return sos_; }
  int eos() const { return eos_; }
  int sep() const { return sep_; }

  std::vector<int> ids_of_kind(TokenKind k) const {
    std::vector<int> out;
    for (const Token& t : tokens_)
      if (t.kind == k) out.push_back(t.id);
    return out;
  }

  Vocabulary(const Vocabulary&) = delete;
  Vocabulary& operator=(const Vocabulary&) = delete;

 private:
  Vocabulary() {
    names_.reserve(kVocabSize);
    tokens_.reserve(kVocabSize);

    auto add = [this](TokenKind k, std::string name) {
      names_.push_back(std::move(name));
      Token t{k, static_cast<int>(tokens_.size()), names_.back()};
      index_.emplace(t.name, t.id);
      tokens_.push_back(t);
      return t.id;
    };

    sos_ = add(TokenKind::Special, "<SOS>");
    eos_ = add(TokenKind::Special, "<EOS>");
    sep_ = add(TokenKind::Special, "<SEP>");

    for (const char* n : {"SLIDE_TITLE", "SLIDE_CONTENT_SINGLE_COL", "SLIDE_CONTENT_TWO_COL",
                          "SLIDE_SECTION_HEADER", "SLIDE_IMAGE_CAPTION", "SLIDE_BLANK"})
      add(TokenKind::SlideType, n);

    for (const char* n : {"ELEM_TITLE", "ELEM_SUBTITLE", "ELEM_TEXT_BODY", "ELEM_IMAGE",
                          "ELEM_CHART", "ELEM_TABLE", "ELEM_FOOTER", "ELEM_HEADER"})
      add(TokenKind::ElemType, n);

    for (const char* n : {"ATTR_TEXT_POINTS_FEW", "ATTR_TEXT_POINTS_MEDIUM", "ATTR_TEXT_POINTS_MANY",
                          "ATTR_TEXT_LENGTH_SHORT", "ATTR_TEXT_LENGTH_LONG", "ATTR_IMAGE_ASPECT_WIDE",
                          "ATTR_IMAGE_ASPECT_SQUARE", "ATTR_IMAGE_ASPECT_TALL", "ATTR_SIZE_PRIMARY",
                          "ATTR_SIZE_SECONDARY", "ATTR_CONTENT_DENSE", "ATTR_CONTENT_SPARSE"})
      add(TokenKind::Attr, n);

    for (const char* n : {"POS_TOP", "POS_MIDDLE", "POS_BOTTOM", "POS_LEFT", "POS_CENTER",
                          "POS_RIGHT", "POS_FULL_WIDTH", "POS_HALF_WIDTH_LEFT", "POS_HALF_WIDTH_RIGHT",
                          "POS_TOP_LEFT", "POS_TOP_RIGHT", "POS_BOTTOM_LEFT", "POS_BOTTOM_RIGHT"})
      add(TokenKind::Pos, n);

    // Extension tier: tokens that appear only in example listings.
    for (const char* n : {"ELEM_CONTENT_BLOCK", "ELEM_FOOTER_FEATURED"})
      add(TokenKind::ElemType, n);
    for (const char* n : {"ATTR_STYLE_MODERN_INFOGRAPHIC", "ATTR_STYLE_TAG", "ATTR_LAYOUT_ICON_LEFT",
                          "ATTR_CENTER_IMAGE", "ATTR_TEXT_LENGTH_MEDIUM"})
      add(TokenKind::Attr, n);
    for (const char* n : {"POS_MIDDLE_LEFT_UPPER", "POS_MIDDLE_LEFT_CENTER", "POS_MIDDLE_LEFT_LOWER",
                          "POS_MIDDLE_RIGHT_UPPER", "POS_MIDDLE_RIGHT_CENTER", "POS_MIDDLE_RIGHT_LOWER",
                          "POS_MIDDLE_RIGHT", "POS_CENTER_HORIZONTAL", "POS_CENTER_VERTICAL",
                          "POS_BOTTOM_MIDDLE_SECTION"})
      add(TokenKind::Pos, n);

    // Pad to the fixed size with reserved ids.
    while (static_cast<int>(tokens_.size()) < kVocabSize) {
      char buf[24];
      std::snprintf(buf, sizeof(buf), "<RESERVED_%03d>", static_cast<int>(tokens_.size()));
      add(TokenKind::Reserved, buf);
    }
  }

  std::vector<std::string> names_;
  std::vector<Token> tokens_;
  std::unordered_map<std::string_view, int> index_;
  int sos_ = 0, eos_ = 1, sep_ = 2;
};

inline const Vocabulary& vocab() { return Vocabulary::instance(); }

inline Token tok(std::string_view name) { return vocab().by_name(name); }

// ---------------------------------------------------------------------------
// Lexer
// ---------------------------------------------------------------------------

// Whitespace separates tokens; /* ... */ comment spans are stripped.
inline std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  size_t i = 0;
  const size_t n = text.size();
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] == '/' && i + 1 < n && text[i + 1] == '*') {
      size_t close = text.find("*/", i + 2);
      if (close == std::string_view::npos)
        fail(errc::unterminated_comment, std::to_string(i), "comment opened here is never closed");
      i = close + 2;
      continue;
    }
    size_t start = i;
    while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::string_view word = text.substr(start, i - start);
    const Token* t = vocab().find(word);
    if (!t)
      fail(errc::unknown_token, std::to_string(start), "unregistered word '" + std::string(word) + "'");
    out.push_back(*t);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Parser
// ---------------------------------------------------------------------------

struct ElementDecl {
  Token elem_type;
  std::vector<Token> attrs;      // no duplicates, first-appearance order
  std::vector<Token> positions;  // declaration order

  friend bool operator==(const ElementDecl& a, const ElementDecl& b) {
    return a.elem_type == b.elem_type && a.attrs == b.attrs && a.positions == b.positions;
  }
};

struct ParsedLayout {
  Token slide_type;
  std::vector<Token> slide_attrs;
  std::vector<ElementDecl> elements;

  friend bool operator==(const ParsedLayout& a, const ParsedLayout& b) {
    return a.slide_type == b.slide_type && a.slide_attrs == b.slide_attrs && a.elements == b.elements;
  }
};

struct Violation {
  errc code{errc::grammar_violation};
  int position{0};  // token index
  std::string message;
};

// Incremental grammar automaton. Shared by parse/validate and by the decoder,
// which uses allows() to mask ungrammatical continuations.
class GrammarCursor {
 public:
  enum class State { ExpectSos, ExpectSlideType, SlideAttrs, ElemStart, ElemBody, Done };

  bool allows(int id) const {
    const Vocabulary& v = vocab();
    if (id < 0 || id >= v.size()) return false;
    const Token& t = v.by_id(id);
    switch (state_) {
      case State::ExpectSos:
        return id == v.sos();
      case State::ExpectSlideType:
        return t.kind == TokenKind::SlideType;
      case State::SlideAttrs:
        if (id == v.sep() || id == v.eos()) return true;
        return t.kind == TokenKind::Attr && !seen_attr_[static_cast<size_t>(id)];
      case State::ElemStart:
        return t.kind == TokenKind::ElemType || id == v.eos();
      case State::ElemBody:
        if (id == v.sep() || id == v.eos()) return true;
        if (t.kind == TokenKind::Pos) return true;
        return t.kind == TokenKind::Attr && !seen_attr_[static_cast<size_t>(id)];
      case State::Done:
        return false;
    }
    return false;
  }

  void advance(int id) {
    const Vocabulary& v = vocab();
    if (!allows(id)) fail(errc::grammar_violation, std::to_string(consumed_), "token not allowed here");
    const Token& t = v.by_id(id);
    ++consumed_;
    switch (state_) {
      case State::ExpectSos:
        state_ = State::ExpectSlideType;
        break;
      case State::ExpectSlideType:
        state_ = State::SlideAttrs;
        break;
      case State::SlideAttrs:
      case State::ElemBody:
        if (id == v.sep()) {
          state_ = State::ElemStart;
          std::fill(seen_attr_.begin(), seen_attr_.end(), false);
        } else if (id == v.eos()) {
          state_ = State::Done;
        } else if (t.kind == TokenKind::Attr) {
          seen_attr_[static_cast<size_t>(id)] = true;
        }
        break;
      case State::ElemStart:
        state_ = (id == v.eos()) ? State::Done : State::ElemBody;
        break;
      case State::Done:
        break;
    }
  }

  State state() const { return state_; }
  bool done() const { return state_ == State::Done; }
  int consumed() const { return consumed_; }
  bool can_finish() const {
    return state_ == State::SlideAttrs || state_ == State::ElemBody || state_ == State::ElemStart;
  }

  // Error-recovery hook for validate(): pretend the expected token was seen.
  void recover_to(State s) { state_ = s; }

 private:
  State state_ = State::ExpectSos;
  int consumed_ = 0;
  std::vector<bool> seen_attr_ = std::vector<bool>(kVocabSize, false);
};

namespace detail {

inline std::string describe(GrammarCursor::State s, const Token& t) {
  using State = GrammarCursor::State;
  switch (s) {
    case State::ExpectSos:
      return "sequence must start with <SOS>";
    case State::ExpectSlideType:
      return t.kind == TokenKind::SlideType ? "" : "slide type absent";
    case State::SlideAttrs:
      if (t.kind == TokenKind::SlideType) return "duplicate slide type";
      if (t.name == "<SOS>") return "duplicate <SOS>";
      if (t.kind == TokenKind::Attr) return "duplicate attribute in declaration";
      return "only attributes may follow the slide type";
    case State::ElemStart:
      return "element declaration must start with an element type";
    case State::ElemBody:
      if (t.name == "<SOS>") return "duplicate <SOS>";
      if (t.kind == TokenKind::SlideType) return "duplicate slide type";
      if (t.kind == TokenKind::Attr) return "duplicate attribute in declaration";
      return "token not valid inside an element declaration";
    case State::Done:
      return "token after <EOS>";
  }
  return "grammar violation";
}

}  // namespace detail

// All grammar/invariant violations with token positions. Empty result iff
// parse() succeeds on the same sequence.
inline std::vector<Violation> validate(const std::vector<int>& ids) {
  using State = GrammarCursor::State;
  const Vocabulary& v = vocab();
  std::vector<Violation> out;
  GrammarCursor cur;
  for (size_t i = 0; i < ids.size(); ++i) {
    int id = ids[i];
    if (id < 0 || id >= v.size()) {
      out.push_back({errc::unknown_token, static_cast<int>(i), "id outside vocabulary"});
      continue;
    }
    const Token& t = v.by_id(id);
    if (t.kind == TokenKind::Reserved) {
      out.push_back({errc::grammar_violation, static_cast<int>(i), "reserved token in sequence"});
      continue;
    }
    if (cur.allows(id)) {
      cur.advance(id);
      continue;
    }
    out.push_back({errc::grammar_violation, static_cast<int>(i), detail::describe(cur.state(), t)});
    // Recover so one mistake is not reported once per remaining token: assume
    // the expected opener was present, then consume the token if it now fits.
    if (cur.state() == State::ExpectSos)
      cur.recover_to(State::ExpectSlideType);
    else if (cur.state() == State::ExpectSlideType)
      cur.recover_to(State::SlideAttrs);
    if (cur.allows(id)) cur.advance(id);
  }
  if (!cur.done()) {
    if (ids.empty())
      out.push_back({errc::grammar_violation, 0, "empty sequence"});
    else
      out.push_back({errc::grammar_violation, static_cast<int>(ids.size()), "missing <EOS>"});
  }
  if (ids.size() > static_cast<size_t>(kMaxSequenceTokens))
    out.push_back({errc::length_exceeded, kMaxSequenceTokens,
                   "sequence has " + std::to_string(ids.size()) + " tokens, limit is " +
                       std::to_string(kMaxSequenceTokens)});
  return out;
}

inline std::vector<int> ids_of(const std::vector<Token>& tokens) {
  std::vector<int> ids;
  ids.reserve(tokens.size());
  for (const Token& t : tokens) ids.push_back(t.id);
  return ids;
}

inline std::vector<Violation> validate(const std::vector<Token>& tokens) {
  return validate(ids_of(tokens));
}

inline ParsedLayout parse(const std::vector<Token>& tokens) {
  if (tokens.empty()) fail(errc::grammar_violation, "0", "empty sequence");
  auto violations = validate(tokens);
  if (!violations.empty()) {
    const Violation& first = violations.front();
    fail(first.code, std::to_string(first.position), first.message);
  }

  const Vocabulary& v = vocab();
  ParsedLayout layout;
  ElementDecl current;
  bool in_element = false;
  for (size_t i = 1; i + 1 < tokens.size(); ++i) {  // skip <SOS>/<EOS>
    const Token& t = tokens[i];
    if (t.id == v.sep()) {
      if (in_element) layout.elements.push_back(std::move(current));
      current = ElementDecl{};
      in_element = false;
      continue;
    }
    switch (t.kind) {
      case TokenKind::SlideType:
        layout.slide_type = t;
        break;
      case TokenKind::ElemType:
        current.elem_type = t;
        in_element = true;
        break;
      case TokenKind::Attr:
        (in_element ? current.attrs : layout.slide_attrs).push_back(t);
        break;
      case TokenKind::Pos:
        current.positions.push_back(t);
        break;
      default:
        break;
    }
  }
  if (in_element) layout.elements.push_back(std::move(current));
  return layout;
}

// Canonical form: single spaces, one element declaration per line, attrs
// before positions, no trailing <SEP>, no comments, LF line endings.
inline std::string serialize(const ParsedLayout& layout) {
  std::string out = "<SOS> ";
  out += layout.slide_type.name;
  for (const Token& a : layout.slide_attrs) {
    out += ' ';
    out += a.name;
  }
  for (size_t e = 0; e < layout.elements.size(); ++e) {
    out += " <SEP>\n";
    const ElementDecl& d = layout.elements[e];
    out += d.elem_type.name;
    for (const Token& a : d.attrs) {
      out += ' ';
      out += a.name;
    }
    for (const Token& p : d.positions) {
      out += ' ';
      out += p.name;
    }
  }
  out += " <EOS>";
  return out;
}

}  // namespace slidesmith::ldl
