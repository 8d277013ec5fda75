#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "liftkit/engine/expr.hpp"
#include "liftkit/fintop/map.hpp"
#include "liftkit/fintop/space.hpp"

/**
 * ASCII arrow notation for finite spaces, maps and orthogonal expressions.
 *
 *   space := '{' [chain (',' chain)*] '}'
 *   chain := label (link label)*        link  := '->' | '<-' | '<->' | '='
 *   map   := space '->' space
 *   expr  := '(' map (',' map)* ')' step+
 *   step  := '^' ('l' | 'r')+ ['_{<' INT '}']
 *   label := [A-Za-z0-9*']+
 *
 * `x->y` means y lies in the closure of x, `<-` is the reverse arrow, `<->`
 * both, and `=` identifies two labels. Whitespace is ignored. A bound
 * `_{<N}` attaches to the side letter right before it.
 *
 * In a map the codomain also receives every domain label and arrow, so
 * `{a}->{b}` is the map from a point to the two-point discrete space. Strict
 * parsing turns this off: domain labels must then occur in the codomain.
 * A codomain written `{*}` is the one-point space and receives nothing, so
 * `X->{*}` is always the map to a point.
 */
namespace liftkit::notation {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t offset, std::string expected, const std::string& what);

  /// Byte offset into the parsed text.
  std::size_t offset() const { return offset_; }
  /// Short description of what would have been accepted.
  const std::string& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

struct ParseOptions {
  bool strict = false;
};

using Expr = engine::OrthExpr<fintop::SpaceMap>;

/// Points are the `=`-classes in order of first appearance, each labelled by
/// its member labels joined with '='.
fintop::FiniteSpace parse_space(std::string_view text);
fintop::SpaceMap parse_map(std::string_view text, ParseOptions options = {});
Expr parse_class_expr(std::string_view text, ParseOptions options = {});

std::string render_space(const fintop::FiniteSpace& space);
/// Codomain points are named after their preimages, so the text parses back
/// to the same map in either mode.
std::string render_map(const fintop::SpaceMap& map);
std::string render_steps(const std::vector<engine::Step>& steps);
std::string render_expr(const Expr& expr);

bool is_label_char(char c);

}  // namespace liftkit::notation
