#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "shiftkit/quiver.hpp"

namespace shiftkit {

/// Malformed algebra file; what() reads "origin:line: field: message".
class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& origin, std::size_t line, const std::string& field, const std::string& message);
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

struct RelationTermText {
  std::string coeff;  // "n" or "n/d"
  std::vector<std::string> path;
  bool operator==(const RelationTermText&) const = default;
};

/// Parsed algebra file. Vertices are 1-based in the file and 0-based here.
struct AlgebraFile {
  int version = 1;
  std::string name;
  std::optional<FieldSpec> field;
  std::size_t vertices = 0;
  std::vector<Arrow> arrows;
  std::vector<std::vector<RelationTermText>> relations;
  std::size_t nilpotency_cap = 30;
  /// Self-test expectations: dim, loewy_length, gldim, injdim, domdim, n, simples and
  /// gldim_gamma.<k>; values are integers or "geq:N".
  std::map<std::string, std::string> expected;

  std::string origin;                          // not part of equality
  std::map<std::string, std::size_t> lines;    // JSON pointer -> line, not part of equality

  bool operator==(const AlgebraFile& o) const;
  Quiver quiver() const;
  /// Line of a JSON pointer, or of its closest recorded ancestor.
  std::size_t line_of(const std::string& pointer) const;
};

AlgebraFile parse_algebra_text(const std::string& text, const std::string& origin = "<input>");
AlgebraFile parse_algebra_file(const std::string& path);
/// Canonical JSON text (sorted keys, 2-space indent, trailing newline).
std::string emit_algebra_file(const AlgebraFile& f);

/// JSON pointer of every value in a JSON text mapped to its 1-based starting line.
std::map<std::string, std::size_t> index_lines(const std::string& text);

/// --field flag, then the file's field, then SHIFTKIT_FIELD, then p101.
FieldSpec resolve_field(const std::optional<std::string>& flag, const AlgebraFile* file);

template <class F>
std::vector<RelationCombo<F>> relations_over(const AlgebraFile& f, const F& field);

template <class F>
AlgebraPtr<F> build_algebra(const AlgebraFile& f, const F& field) {
  return build_based_algebra(f.quiver(), relations_over(f, field), field, f.nilpotency_cap);
}

/// Runs fn(PrimeField) or fn(Rationals) according to the field spec.
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldKind::rationals) return fn(Rationals());
  return fn(PrimeField(spec.p));
}

/// 64-bit FNV-1a as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace shiftkit
