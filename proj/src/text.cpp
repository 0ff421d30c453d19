#include "skewchar/text.hpp"

#include <cctype>
#include <charconv>
#include <vector>

namespace skewchar {

namespace {

constexpr std::string_view kEmptySet = "\xE2\x88\x85";  // U+2205

class Scanner {
 public:
  Scanner(std::string_view text, std::size_t offset)
      : text_(text), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  int number() {
    skip_space();
    int value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [end, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || end == first) fail("expected a non-negative integer");
    pos_ += static_cast<std::size_t>(end - first);
    return value;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, offset_ + pos_);
  }

 private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string_view trim(std::string_view text, std::size_t& offset) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) {
    text.remove_prefix(1);
    ++offset;
  }
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) {
    text.remove_suffix(1);
  }
  return text;
}

Partition parse_partition_at(std::string_view text, std::size_t offset) {
  text = trim(text, offset);
  if (text.empty() || text == kEmptySet) return {};
  Scanner scan(text, offset);
  std::vector<int> parts;
  do {
    const int part = scan.number();
    int repeat = 1;
    if (scan.accept('^')) repeat = scan.number();
    parts.insert(parts.end(), static_cast<std::size_t>(repeat), part);
  } while (scan.accept(','));
  if (!scan.done()) scan.fail("unexpected character");
  return Partition(std::move(parts));
}

}  // namespace

Partition parse_partition(std::string_view text) {
  return parse_partition_at(text, 0);
}

SkewDiagram parse_skew(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return {parse_partition(text)};
  Partition outer = parse_partition_at(text.substr(0, slash), 0);
  Partition inner = parse_partition_at(text.substr(slash + 1), slash + 1);
  if (!contains(outer, inner)) {
    throw ParseError("inner partition not contained in outer", slash);
  }
  return {std::move(outer), std::move(inner)};
}

GrassmannianContext parse_context(std::string_view text) {
  Scanner scan(text, 0);
  GrassmannianContext ctx;
  ctx.k = scan.number();
  if (!scan.accept(',')) scan.fail("expected ',' between k and l");
  ctx.l = scan.number();
  if (!scan.done()) scan.fail("unexpected character");
  if (ctx.k < 1 || ctx.l < 1) throw ParseError("k and l must be positive", 0);
  return ctx;
}

std::string bracketed(const Partition& p) {
  return "(" + to_string(p) + ")";
}

}  // namespace skewchar
