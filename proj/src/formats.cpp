#include "pgq/formats.hpp"

#include <algorithm>
#include <charconv>

#include "pgq/error.hpp"
#include "pgq/field.hpp"
#include "pgq/projspace.hpp"

namespace pgq {

namespace {

constexpr long long kMaxMapLines = 1 << 22;

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  std::string_view next() {
    if (text_.empty()) throw ParseError(line_ + 1, "unexpected end of input");
    const auto nl = text_.find('\n');
    if (nl == std::string_view::npos) throw ParseError(line_ + 1, "missing line feed");
    auto line = text_.substr(0, nl);
    text_.remove_prefix(nl + 1);
    ++line_;
    return line;
  }

  void expect(std::string_view literal) {
    if (next() != literal) throw ParseError(line_, "expected '" + std::string(literal) + "'");
  }

  long long integer(std::string_view& rest) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec != std::errc() || ptr == rest.data() || v < 0)
      throw ParseError(line_, "expected a non-negative integer");
    rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    return v;
  }

  void space(std::string_view& rest) {
    if (rest.empty() || rest[0] != ' ') throw ParseError(line_, "expected a single space");
    rest.remove_prefix(1);
  }

  int line() const { return line_; }
  bool done() const { return text_.empty(); }

 private:
  std::string_view text_;
  int line_ = 0;
};

long long line_total(LineReader& r, long long n, long long q) {
  const auto orders = supported_orders();
  if (std::find(orders.begin(), orders.end(), q) == orders.end())
    throw ParseError(r.line(), "unsupported field order " + std::to_string(q));
  if (n < 2 || n > 64) throw ParseError(r.line(), "unsupported dimension " + std::to_string(n));
  const BigInt count = gaussian_binomial(static_cast<int>(n) + 1, 2, static_cast<int>(q));
  if (count > kMaxMapLines) throw ParseError(r.line(), "space too large");
  return count.convert_to<long long>();
}

}  // namespace

std::string serialize_map(const MapFile& f) {
  std::string s = "GRASSMAP 1\nSOURCE PG " + std::to_string(f.n) + ' ' + std::to_string(f.q) +
                  "\nTARGET PG " + std::to_string(f.tn) + ' ' + std::to_string(f.tq) +
                  (f.dual ? " DUAL" : "") + "\nMAP\n";
  for (std::size_t i = 0; i < f.image.size(); ++i)
    s += std::to_string(i) + ' ' + std::to_string(f.image[i]) + '\n';
  s += "END\n";
  return s;
}

MapFile parse_map(std::string_view text) {
  LineReader r(text);
  MapFile f;
  r.expect("GRASSMAP 1");

  auto src = r.next();
  if (!src.starts_with("SOURCE PG ")) throw ParseError(r.line(), "expected 'SOURCE PG'");
  src.remove_prefix(10);
  const long long n = r.integer(src);
  r.space(src);
  const long long q = r.integer(src);
  if (!src.empty()) throw ParseError(r.line(), "trailing characters");
  const long long lines = line_total(r, n, q);

  auto tgt = r.next();
  if (!tgt.starts_with("TARGET PG ")) throw ParseError(r.line(), "expected 'TARGET PG'");
  tgt.remove_prefix(10);
  const long long tn = r.integer(tgt);
  r.space(tgt);
  const long long tq = r.integer(tgt);
  if (tgt == " DUAL") {
    f.dual = true;
    if (tn != 3) throw ParseError(r.line(), "DUAL requires target dimension 3");
  } else if (!tgt.empty()) {
    throw ParseError(r.line(), "trailing characters");
  }
  const long long target_lines = line_total(r, tn, tq);

  f.n = static_cast<int>(n);
  f.q = static_cast<int>(q);
  f.tn = static_cast<int>(tn);
  f.tq = static_cast<int>(tq);

  r.expect("MAP");
  f.image.resize(static_cast<std::size_t>(lines));
  for (long long i = 0; i < lines; ++i) {
    auto row = r.next();
    if (row == "END") throw ParseError(r.line(), "expected " + std::to_string(lines) + " map rows");
    const long long s = r.integer(row);
    r.space(row);
    const long long t = r.integer(row);
    if (!row.empty()) throw ParseError(r.line(), "trailing characters");
    if (s != i) throw ParseError(r.line(), "expected source id " + std::to_string(i));
    if (t >= target_lines) throw ParseError(r.line(), "target id out of range");
    f.image[static_cast<std::size_t>(i)] = static_cast<int>(t);
  }
  r.expect("END");
  if (!r.done()) throw ParseError(r.line() + 1, "content after END");
  return f;
}

}  // namespace pgq
