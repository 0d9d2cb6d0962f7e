#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "excalc/form.hpp"

namespace excalc {

/// Ambient configuration of a CLI session / parse: coordinate mode,
/// dimension, base point and output flavor.
struct SessionConfig {
  Mode mode = Mode::Real;
  int dim = 2;
  std::vector<GaussRat> base;  ///< empty means all zeros
  enum class Output { Text, Json } output = Output::Text;

  /// Base with defaults applied; throws DomainError on arity or a complex
  /// entry in real mode.
  std::vector<GaussRat> resolved_base() const;
};

/// Parses a form expression against a session.
///
/// Grammar: sum := ['-'] term (('+'|'-') term)*;
///          term := factor (('*'|'/\') factor)*;
///          factor := rational | 'i' | var | diff | factor '^' natural
///                  | '(' sum ')'.
/// Rationals like 3/2 are single tokens; '^' applies to scalar factors
/// only; juxtaposition is not multiplication. Variables are written in
/// standard coordinates and land shifted to the session base point.
Form parse_form(std::string_view text, const SessionConfig& cfg);

/// Parses one scalar entry such as "3/2", "-1", "1+2i", "5i".
GaussRat parse_scalar(std::string_view text);

/// Parses a comma-separated point. Real mode takes dim real entries;
/// complex mode takes dim complex entries, or 2*dim all-real entries read
/// as (re, im) pairs. Arity violations are DomainErrors, malformed entries
/// ParseErrors.
std::vector<GaussRat> parse_point(std::string_view csv, Mode mode, int dim);

}  // namespace excalc
