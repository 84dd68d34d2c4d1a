#include "scx/profile_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "scx/error.hpp"

namespace scx {

namespace {

constexpr std::string_view kAlternativesDirective = "alternatives:";

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<std::string> split(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(const std::string& token, int line, const char* what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, std::string("expected an integer ") + what + ", got '" + token + "'");
  return v;
}

}  // namespace

ProfileDocument parse_profile_document(std::string_view text) {
  std::vector<Line> lines;
  std::optional<Line> declared;
  {
    int number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const std::size_t end = std::min(text.find('\n', pos), text.size());
      ++number;
      std::vector<std::string> tokens = split(text.substr(pos, end - pos));
      if (!tokens.empty() && tokens.front().starts_with("#")) {
        // "# alternatives: a b c" fixes the declared order.
        if (tokens.front() == "#") tokens.erase(tokens.begin());
        else tokens.front().erase(0, 1);
        if (!tokens.empty() && tokens.front() == kAlternativesDirective) {
          tokens.erase(tokens.begin());
          declared = Line{number, std::move(tokens)};
        }
      } else if (!tokens.empty()) {
        lines.push_back({number, std::move(tokens)});
      }
      pos = end + 1;
    }
  }
  if (lines.empty()) throw ParseError(1, "empty profile document");

  std::size_t cursor = 0;
  const Line& header = lines[cursor++];
  const bool multi = header.tokens.front() == "multi";
  if (header.tokens.size() != (multi ? 3u : 2u))
    throw ParseError(header.number, multi ? "header must be 'multi m K'" : "header must be 'm n'");
  const int m = to_int(header.tokens[multi ? 1 : 0], header.number, "m");
  const int cols = to_int(header.tokens[multi ? 2 : 1], header.number, multi ? "K" : "n");
  if (m < 2 || m > kMaxAlternatives)
    throw ParseError(header.number, "m must be in [2, " + std::to_string(kMaxAlternatives) + "]");
  if (multi && cols < 1) throw ParseError(header.number, "K must be >= 1");
  if (!multi && cols < 2) throw ParseError(header.number, "a profile needs at least two states");

  std::vector<int> multiplicities;
  if (multi) {
    if (cursor >= lines.size()) throw ParseError(header.number, "missing multiplicity line");
    const Line& ml = lines[cursor++];
    if (ml.tokens.size() != static_cast<std::size_t>(cols))
      throw ParseError(ml.number, "expected " + std::to_string(cols) + " multiplicities");
    for (const auto& t : ml.tokens) {
      const int k = to_int(t, ml.number, "multiplicity");
      if (k < 1) throw ParseError(ml.number, "multiplicities must be >= 1");
      multiplicities.push_back(k);
    }
  }

  if (lines.size() - cursor < static_cast<std::size_t>(m))
    throw ParseError(lines.back().number, "expected " + std::to_string(m) + " ranking rows");
  if (lines.size() - cursor > static_cast<std::size_t>(m))
    throw ParseError(lines[cursor + static_cast<std::size_t>(m)].number, "unexpected content after the ranking rows");

  std::vector<std::string> names;
  if (declared) {
    if (declared->tokens.size() != static_cast<std::size_t>(m))
      throw ParseError(declared->number, "alternatives declaration must list exactly m labels");
    names = declared->tokens;
  }
  std::unordered_set<std::string> known(names.begin(), names.end());
  if (known.size() != names.size()) throw ParseError(declared->number, "duplicate label in alternatives declaration");
  for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) {
    const Line& row = lines[cursor + r];
    if (row.tokens.size() != static_cast<std::size_t>(cols))
      throw ParseError(row.number, "expected " + std::to_string(cols) + " tokens, found " + std::to_string(row.tokens.size()));
    for (const auto& t : row.tokens) {
      if (known.insert(t).second) {
        if (declared) throw ParseError(row.number, "'" + t + "' is not a declared alternative");
        names.push_back(t);
      }
      if (names.size() > static_cast<std::size_t>(m))
        throw ParseError(row.number, "more than " + std::to_string(m) + " distinct alternatives");
    }
  }
  if (names.size() != static_cast<std::size_t>(m))
    throw ParseError(header.number, "expected " + std::to_string(m) + " distinct alternatives");

  AltSetPtr alts;
  try {
    alts = AlternativeSet::make(names);
  } catch (const InputError& e) {
    throw ParseError(header.number, e.what());
  }

  std::vector<Ranking> rankings;
  for (int c = 0; c < cols; ++c) {
    std::vector<Alt> order;
    std::uint32_t seen = 0;
    for (std::size_t r = 0; r < static_cast<std::size_t>(m); ++r) {
      const Line& row = lines[cursor + r];
      const Alt a = alts->index_of(row.tokens[static_cast<std::size_t>(c)]);
      if ((seen >> a) & 1u)
        throw ParseError(row.number, "column " + std::to_string(c + 1) + " is not a permutation ('" +
                                         row.tokens[static_cast<std::size_t>(c)] + "' repeated)");
      seen |= 1u << a;
      order.push_back(a);
    }
    rankings.push_back(Ranking::from_order(order));
  }

  if (!multi) return Profile(alts, std::move(rankings));
  std::vector<Column> columns;
  for (std::size_t c = 0; c < rankings.size(); ++c) columns.push_back({rankings[c], multiplicities[c]});
  try {
    return MultiProfile(alts, std::move(columns));
  } catch (const InputError& e) {
    throw ParseError(header.number, e.what());
  }
}

Profile parse_profile(std::string_view text) {
  ProfileDocument doc = parse_profile_document(text);
  if (auto* p = std::get_if<Profile>(&doc)) return std::move(*p);
  return expand(std::get<MultiProfile>(doc));
}

namespace {

std::string declaration(const AlternativeSet& alts) {
  std::string out = "# alternatives:";
  for (const auto& n : alts.names()) out += " " + n;
  return out + "\n";
}

std::string rows(const AlternativeSet& alts, const std::vector<Ranking>& columns) {
  std::string out;
  const int m = alts.size();
  for (int rank = 1; rank <= m; ++rank) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
      if (c > 0) out += ' ';
      out += alts.name(columns[c].at_rank(rank));
    }
    out += '\n';
  }
  return out;
}

}  // namespace

std::string format_profile(const Profile& p) {
  return std::to_string(p.m()) + " " + std::to_string(p.n()) + "\n" + declaration(p.alternatives()) +
         rows(p.alternatives(), p.states());
}

std::string format_multi_profile(const MultiProfile& mp) {
  std::string out = "multi " + std::to_string(mp.m()) + " " + std::to_string(mp.k()) + "\n";
  out += declaration(mp.alternatives());
  std::vector<Ranking> columns;
  for (std::size_t c = 0; c < mp.columns().size(); ++c) {
    if (c > 0) out += ' ';
    out += std::to_string(mp.columns()[c].multiplicity);
    columns.push_back(mp.columns()[c].ranking);
  }
  out += '\n';
  return out + rows(mp.alternatives(), columns);
}

ProfileDocument load_profile_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_profile_document(buf.str());
}

}  // namespace scx
