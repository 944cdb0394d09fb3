#include "cycloknot/knot_spec.hpp"

#include <charconv>
#include <utility>

namespace cycloknot {

namespace {

constexpr const char* kGrammar =
    "expected [!]dt:<l>,<m> with nonzero integers l, m, or [!]t2:<t> with integer t >= 1";

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw KnotParseError("invalid knot spec '" + std::string(text) + "': " + why + "; " + kGrammar);
}

std::int64_t parse_int(std::string_view whole, std::string_view token) {
  std::int64_t v = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (token.empty()) parse_fail(whole, "missing integer");
  if (*first == '+') parse_fail(whole, "unexpected '+'");
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    parse_fail(whole, "bad integer '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

KnotSpec KnotSpec::double_twist(std::int64_t l, std::int64_t m) {
  if (l == 0 || m == 0) throw std::invalid_argument("double_twist: l and m must be nonzero");
  if (l > m) std::swap(l, m);
  if (m < 0) return KnotSpec(Family::DoubleTwist, -m, -l, true);
  return KnotSpec(Family::DoubleTwist, l, m, false);
}

KnotSpec KnotSpec::torus(std::int64_t t) {
  if (t < 1) throw std::invalid_argument("torus: t must be >= 1");
  return KnotSpec(Family::TorusTwoStrand, t, 0, false);
}

KnotSpec KnotSpec::mirror(const KnotSpec& k) {
  KnotSpec r = k;
  r.mirror_ = !k.mirror_;
  return r;
}

KnotSpec KnotSpec::unmirrored() const {
  KnotSpec r = *this;
  r.mirror_ = false;
  return r;
}

KnotSpec KnotSpec::parse(std::string_view text) {
  std::string_view body = text;
  bool mirrored = false;
  if (!body.empty() && body.front() == '!') {
    mirrored = true;
    body.remove_prefix(1);
  }
  KnotSpec k = torus(1);
  if (body.substr(0, 3) == "dt:") {
    body.remove_prefix(3);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) parse_fail(text, "missing ','");
    const auto l = parse_int(text, body.substr(0, comma));
    const auto m = parse_int(text, body.substr(comma + 1));
    if (l == 0 || m == 0) parse_fail(text, "twist parameters must be nonzero");
    k = double_twist(l, m);
  } else if (body.substr(0, 3) == "t2:") {
    const auto t = parse_int(text, body.substr(3));
    if (t < 1) parse_fail(text, "t must be >= 1");
    k = torus(t);
  } else {
    parse_fail(text, "unknown family");
  }
  return mirrored ? mirror(k) : k;
}

std::string KnotSpec::to_string() const {
  std::string s = mirror_ ? "!" : "";
  if (family_ == Family::DoubleTwist) {
    s += "dt:" + std::to_string(a_) + "," + std::to_string(b_);
  } else {
    s += "t2:" + std::to_string(a_);
  }
  return s;
}

}  // namespace cycloknot
