#include "loopex/braid.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "loopex/error.hpp"

namespace loopex {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

int parse_int_token(std::string_view tok) {
  int v = 0;
  std::string_view digits = tok;
  if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty()) {
    throw Error(ErrorCode::parse_error, "malformed braid token '" + std::string(tok) + "'");
  }
  return v;
}

}  // namespace

BraidWord make_braid(int strands, const std::vector<int>& letters) {
  if (strands < 1) throw Error(ErrorCode::invalid_argument, "strand count must be at least 1");
  BraidWord b;
  b.strands = strands;
  for (int k : letters) {
    if (k == 0) throw Error(ErrorCode::parse_error, "zero braid letter");
    const int idx = k < 0 ? -k : k;
    if (idx >= strands) {
      throw Error(ErrorCode::parse_error,
                  "generator " + std::to_string(idx) + " out of range for " + std::to_string(strands) + " strands");
    }
    b.letters.push_back({idx, k < 0 ? -1 : 1});
  }
  return b;
}

BraidWord parse_braid(std::string_view text) {
  std::string_view body = trim(text);
  int declared = 0;
  if (body.starts_with("s=")) {
    const auto semi = body.find(';');
    if (semi == std::string_view::npos) throw Error(ErrorCode::parse_error, "strand prefix needs ';'");
    declared = parse_int_token(trim(body.substr(2, semi - 2)));
    if (declared < 1) throw Error(ErrorCode::parse_error, "strand count must be at least 1");
    body = trim(body.substr(semi + 1));
  }
  std::vector<int> letters;
  std::string spaced(body);
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in{spaced};
  std::string tok;
  while (in >> tok) {
    const int v = parse_int_token(tok);
    if (v == 0) throw Error(ErrorCode::parse_error, "zero braid letter");
    letters.push_back(v);
  }
  int strands = declared;
  if (strands == 0) {
    strands = 1;
    for (int v : letters) strands = std::max(strands, (v < 0 ? -v : v) + 1);
  }
  return make_braid(strands, letters);
}

std::string render_braid(const BraidWord& b) {
  std::ostringstream os;
  os << "s=" << b.strands << ";";
  for (const auto& l : b.letters) os << ' ' << l.index * l.sign;
  return os.str();
}

std::vector<int> signed_letters(const BraidWord& b) {
  std::vector<int> out;
  out.reserve(b.letters.size());
  for (const auto& l : b.letters) out.push_back(l.index * l.sign);
  return out;
}

std::int64_t writhe(const BraidWord& b) {
  std::int64_t w = 0;
  for (const auto& l : b.letters) w += l.sign;
  return w;
}

std::vector<int> braid_permutation(const BraidWord& b) {
  // pos[s] = current position of the strand that started at s.
  std::vector<int> pos(static_cast<std::size_t>(b.strands));
  std::iota(pos.begin(), pos.end(), 0);
  for (const auto& l : b.letters) {
    const int i = l.index - 1;
    for (auto& p : pos) {
      if (p == i) p = i + 1;
      else if (p == i + 1) p = i;
    }
  }
  return pos;
}

int closure_component_count(const BraidWord& b) {
  const auto perm = braid_permutation(b);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < perm.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t p = s; !seen[p]; p = static_cast<std::size_t>(perm[p])) seen[p] = true;
  }
  return cycles;
}

BraidWord mirror(const BraidWord& b) {
  BraidWord m = b;
  for (auto& l : m.letters) l.sign = -l.sign;
  return m;
}

BraidWord inverse(const BraidWord& b) {
  BraidWord m;
  m.strands = b.strands;
  m.letters.assign(b.letters.rbegin(), b.letters.rend());
  for (auto& l : m.letters) l.sign = -l.sign;
  return m;
}

BraidWord stabilize(const BraidWord& b) {
  BraidWord m = b;
  m.strands = b.strands + 1;
  m.letters.push_back({b.strands, 1});
  return m;
}

}  // namespace loopex
