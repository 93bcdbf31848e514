#include "torslat/string_module.hpp"

#include <algorithm>
#include <cctype>

#include "json.hpp"

#include "torslat/error.hpp"

namespace torslat {

namespace {

void require_same_rank(const StringModule& a, const StringModule& b) {
  if (a.n != b.n)
    throw Error(ErrorCode::RankMismatch,
                "modules over RA_" + std::to_string(a.n) + " and RA_" + std::to_string(b.n));
}

// Orientation of edges s..t-1 as a substring of m's word.
std::string_view slice(const StringModule& m, int s, int t) {
  return std::string_view(m.word).substr(static_cast<std::size_t>(s - m.p),
                                         static_cast<std::size_t>(t - s));
}

}  // namespace

StringModule StringModule::make(int n, int p, int q, std::string word) {
  if (n < 1) throw Error(ErrorCode::InvalidRank, "rank must be at least 1");
  if (p < 1 || p > q || q > n)
    throw Error(ErrorCode::InvalidArgument, "support [" + std::to_string(p) + "," +
                                                std::to_string(q) + "] is not inside [1," +
                                                std::to_string(n) + "]");
  if (static_cast<int>(word.size()) != q - p)
    throw Error(ErrorCode::InvalidArgument, "word length must equal q - p");
  for (char c : word)
    if (c != 'L' && c != 'R') throw Error(ErrorCode::InvalidArgument, "word letters must be L or R");
  return {n, p, q, std::move(word)};
}

std::size_t indecomposable_count(int n) {
  std::size_t total = 0;
  for (int l = 1; l <= n; ++l) total += static_cast<std::size_t>(n - l + 1) << (l - 1);
  return total;
}

std::vector<StringModule> enumerate_indecomposables(int n) {
  if (n < 1) throw Error(ErrorCode::InvalidRank, "rank must be at least 1");
  std::vector<StringModule> out;
  out.reserve(indecomposable_count(n));
  for (int p = 1; p <= n; ++p) {
    for (int q = p; q <= n; ++q) {
      const int len = q - p;
      for (unsigned bits = 0; bits < (1U << len); ++bits) {
        std::string word(static_cast<std::size_t>(len), 'L');
        for (int k = 0; k < len; ++k)
          if ((bits >> (len - 1 - k)) & 1U) word[static_cast<std::size_t>(k)] = 'R';
        out.push_back({n, p, q, std::move(word)});
      }
    }
  }
  return out;
}

StringModule substring(const StringModule& m, int s, int t) {
  if (s < m.p || t > m.q || s > t)
    throw Error(ErrorCode::OutOfSupport, "[" + std::to_string(s) + "," + std::to_string(t) +
                                             "] is not inside the support of " + to_text(m));
  return {m.n, s, t, std::string(slice(m, s, t))};
}

bool is_factor_interval(const StringModule& m, int s, int t) {
  return (s == m.p || m.edge(s - 1) == 'L') && (t == m.q || m.edge(t) == 'R');
}

bool is_submodule_interval(const StringModule& m, int s, int t) {
  return (s == m.p || m.edge(s - 1) == 'R') && (t == m.q || m.edge(t) == 'L');
}

std::vector<StringModule> indecomposable_factors(const StringModule& m) {
  std::vector<StringModule> out;
  for (int s = m.p; s <= m.q; ++s)
    for (int t = s; t <= m.q; ++t)
      if (is_factor_interval(m, s, t)) out.push_back(substring(m, s, t));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<StringModule> indecomposable_submodules(const StringModule& m) {
  std::vector<StringModule> out;
  for (int s = m.p; s <= m.q; ++s)
    for (int t = s; t <= m.q; ++t)
      if (is_submodule_interval(m, s, t)) out.push_back(substring(m, s, t));
  std::sort(out.begin(), out.end());
  return out;
}

int hom_dim(const StringModule& m, const StringModule& m2) {
  require_same_rank(m, m2);
  const int lo = std::max(m.p, m2.p);
  const int hi = std::min(m.q, m2.q);
  int count = 0;
  for (int s = lo; s <= hi; ++s) {
    for (int t = s; t <= hi; ++t) {
      if (slice(m, s, t) != slice(m2, s, t)) continue;
      if (is_factor_interval(m, s, t) && is_submodule_interval(m2, s, t)) ++count;
    }
  }
  return count;
}

QuiverRep to_representation(const StringModule& m) {
  QuiverRep rep;
  rep.n = m.n;
  rep.dim.assign(static_cast<std::size_t>(m.n), 0);
  for (int i = m.p; i <= m.q; ++i) rep.dim[static_cast<std::size_t>(i - 1)] = 1;
  for (int i = 1; i < m.n; ++i) {
    const int di = rep.dim[static_cast<std::size_t>(i - 1)];
    const int dj = rep.dim[static_cast<std::size_t>(i)];
    Matrix up(dj, di), down(di, dj);
    if (di == 1 && dj == 1) {
      if (m.edge(i) == 'R')
        up.at(0, 0) = 1;
      else
        down.at(0, 0) = 1;
    }
    rep.raising.push_back(std::move(up));
    rep.lowering.push_back(std::move(down));
  }
  return rep;
}

int hom_dim_oracle(const StringModule& m, const StringModule& m2) {
  require_same_rank(m, m2);
  return hom_dimension(to_representation(m), to_representation(m2));
}

bool is_brick(const StringModule& m) { return hom_dim(m, m) == 1; }

std::optional<StringModule> glue(const StringModule& sub, const StringModule& quot) {
  require_same_rank(sub, quot);
  if (std::max(sub.p, quot.p) <= std::min(sub.q, quot.q))
    throw Error(ErrorCode::OverlappingSupports, to_text(sub) + " and " + to_text(quot) + " overlap");
  // The connecting arrow points into sub, so sub is successor closed.
  if (sub.q + 1 == quot.p) return StringModule{sub.n, sub.p, quot.q, sub.word + "L" + quot.word};
  if (quot.q + 1 == sub.p) return StringModule{sub.n, quot.p, sub.q, quot.word + "R" + sub.word};
  return std::nullopt;
}

StringModule dualize(const StringModule& m) {
  StringModule d = m;
  for (char& c : d.word) c = (c == 'L') ? 'R' : 'L';
  return d;
}

InversionPair inv_pair(const StringModule& m) { return {m.p - 1, m.q}; }

std::string to_text(const StringModule& m) {
  if (m.is_simple()) return std::to_string(m.p);
  return std::to_string(m.p) + "-" + std::to_string(m.q) + ":" + m.word;
}

std::string to_json(const StringModule& m) {
  nlohmann::ordered_json j;
  j["p"] = m.p;
  j["q"] = m.q;
  j["word"] = m.word;
  return j.dump();
}

StringModule parse_module(int n, const std::string& text) {
  auto bad = [&]() { return Error(ErrorCode::InvalidArgument, "cannot parse module '" + text + "'"); };
  if (!text.empty() && text.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
      return StringModule::make(n, j.at("p").get<int>(), j.at("q").get<int>(),
                                j.at("word").get<std::string>());
    } catch (const nlohmann::json::exception&) {
      throw bad();
    }
  }
  try {
    std::size_t used = 0;
    const int p = std::stoi(text, &used);
    if (used == text.size()) return StringModule::make(n, p, p, "");
    if (text[used] != '-') throw bad();
    const std::string rest = text.substr(used + 1);
    std::size_t used_q = 0;
    const int q = std::stoi(rest, &used_q);
    std::string word;
    if (used_q < rest.size()) {
      if (rest[used_q] != ':') throw bad();
      word = rest.substr(used_q + 1);
    }
    for (char& c : word) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    return StringModule::make(n, p, q, word);
  } catch (const std::logic_error&) {
    throw bad();
  }
}

}  // namespace torslat
