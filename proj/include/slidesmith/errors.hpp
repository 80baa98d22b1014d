#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace slidesmith {

enum class errc {
  unknown_token,
  unterminated_comment,
  grammar_violation,
  length_exceeded,
  element_not_found,
  immutable_target,
  unknown_alignment_type,
  degenerate_size,
  unknown_anchor,
  not_text_element,
  index_out_of_range,
  unknown_attribute,
  invalid_value,
  unknown_property,
  malformed_color,
  same_element,
  negative_space,
  schema_violation,
  empty_draft,
  empty_deck,
  dimension_mismatch,
  weight_sum_error,
  tie_pair,
  length_mismatch,
  non_finite_loss,
  decode_failure,
  content_mismatch,
  io_failure,
  bad_argument,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::unknown_token: return "UnknownToken";
    case errc::unterminated_comment: return "UnterminatedComment";
    case errc::grammar_violation: return "GrammarViolation";
    case errc::length_exceeded: return "LengthExceeded";
    case errc::element_not_found: return "ElementNotFound";
    case errc::immutable_target: return "ImmutableTarget";
    case errc::unknown_alignment_type: return "UnknownAlignmentType";
    case errc::degenerate_size: return "DegenerateSize";
    case errc::unknown_anchor: return "UnknownAnchor";
    case errc::not_text_element: return "NotTextElement";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::unknown_attribute: return "UnknownAttribute";
    case errc::invalid_value: return "InvalidValue";
    case errc::unknown_property: return "UnknownProperty";
    case errc::malformed_color: return "MalformedColor";
    case errc::same_element: return "SameElement";
    case errc::negative_space: return "NegativeSpace";
    case errc::schema_violation: return "SchemaViolation";
    case errc::empty_draft: return "EmptyDraft";
    case errc::empty_deck: return "EmptyDeck";
    case errc::dimension_mismatch: return "DimensionMismatch";
    case errc::weight_sum_error: return "WeightSumError";
    case errc::tie_pair: return "TiePair";
    case errc::length_mismatch: return "LengthMismatch";
    case errc::non_finite_loss: return "NonFiniteLoss";
    case errc::decode_failure: return "DecodeFailure";
    case errc::content_mismatch: return "ContentMismatch";
    case errc::io_failure: return "IoFailure";
    case errc::bad_argument: return "BadArgument";
  }
  return "Error";
}

// One exception type for the whole library. `code` keeps errors
// machine-checkable; `where` carries the offending id/path/offset.
class Error : public std::runtime_error {
 public:
  Error(errc code, std::string where, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail +
                           (where.empty() ? "" : " [" + where + "]")),
        code_(code),
        where_(std::move(where)) {}

  errc code() const noexcept { return code_; }
  const std::string& where() const noexcept { return where_; }

 private:
  errc code_;
  std::string where_;
};

[[noreturn]] inline void fail(errc code, std::string where, const std::string& detail) {
  throw Error(code, std::move(where), detail);
}

}  // namespace slidesmith
