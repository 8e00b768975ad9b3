#include "cli/instances.hpp"

#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <vector>

#include "ecg/errors.hpp"

namespace ecg::cli {

namespace {

struct Record {
  int line;
  std::vector<long> values;
};

// Splits the file into records by tag. The header must come first, carry
// `header_tag` and exactly `header_arity` integers; other records carry the
// arity listed in `arity`.
struct Parsed {
  Record header;
  std::map<std::string, std::vector<Record>> records;
};

Parsed read_records(std::string_view text, const std::string& header_tag, int header_arity,
                    const std::map<std::string, int>& arity) {
  Parsed parsed;
  bool have_header = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (const auto hash = raw.find('#'); hash != std::string::npos) {
      raw.resize(hash);
    }
    std::istringstream fields(raw);
    std::string tag;
    if (!(fields >> tag)) {
      continue;
    }
    int expected = 0;
    if (tag == "p") {
      std::string kind;
      if (have_header) {
        throw ParseError(line, "duplicate problem line");
      }
      if (!(fields >> kind) || kind != header_tag) {
        throw ParseError(line, "expected 'p " + header_tag + " ...'");
      }
      expected = header_arity;
    } else if (const auto it = arity.find(tag); it != arity.end()) {
      if (!have_header) {
        throw ParseError(line, "'" + tag + "' line before problem line");
      }
      expected = it->second;
    } else {
      throw ParseError(line, "unknown line tag '" + tag + "'");
    }
    Record record{line, {}};
    long value = 0;
    for (int i = 0; i < expected; ++i) {
      if (!(fields >> value)) {
        throw ParseError(line, "expected " + std::to_string(expected) + " integers");
      }
      record.values.push_back(value);
    }
    if (std::string extra; fields >> extra) {
      throw ParseError(line, "trailing fields");
    }
    if (tag == "p" && !have_header) {
      parsed.header = record;
      have_header = true;
    } else {
      parsed.records[tag].push_back(std::move(record));
    }
  }
  if (!have_header) {
    throw ParseError(line, "missing problem line 'p " + header_tag + " ...'");
  }
  return parsed;
}

void check_count(const Parsed& p, const std::string& tag, long expected) {
  const auto it = p.records.find(tag);
  const long got = it == p.records.end() ? 0 : static_cast<long>(it->second.size());
  if (got != expected) {
    throw ParseError(p.header.line, "problem line announces " + std::to_string(expected) +
                                        " '" + tag + "' lines, found " + std::to_string(got));
  }
}

const std::vector<Record>& all(const Parsed& p, const std::string& tag) {
  static const std::vector<Record> none;
  const auto it = p.records.find(tag);
  return it == p.records.end() ? none : it->second;
}

int index_in(const Record& r, std::size_t field, long limit, const char* what) {
  const long v = r.values[field];
  if (v < 1 || v > limit) {
    throw ParseError(r.line, std::string(what) + " " + std::to_string(v) + " out of range 1.." +
                                 std::to_string(limit));
  }
  return static_cast<int>(v - 1);
}

long non_negative(const Record& r, std::size_t field) {
  if (r.values[field] < 0) {
    throw ParseError(r.line, "counts must be non-negative");
  }
  return r.values[field];
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  const Parsed p = read_records(text, "digraph", 2, {{"a", 2}});
  Digraph d{static_cast<int>(non_negative(p.header, 0)), {}};
  check_count(p, "a", non_negative(p.header, 1));
  for (const Record& r : all(p, "a")) {
    const int u = index_in(r, 0, d.n, "vertex");
    const int v = index_in(r, 1, d.n, "vertex");
    if (u == v) {
      throw ParseError(r.line, "loops are not allowed");
    }
    d.arcs.emplace_back(u, v);
  }
  return d;
}

PlainGraph parse_plain_graph(std::string_view text) {
  const Parsed p = read_records(text, "graph", 2, {{"e", 2}});
  PlainGraph h{static_cast<int>(non_negative(p.header, 0)), {}};
  check_count(p, "e", non_negative(p.header, 1));
  for (const Record& r : all(p, "e")) {
    const int u = index_in(r, 0, h.n, "vertex");
    const int v = index_in(r, 1, h.n, "vertex");
    if (u == v) {
      throw ParseError(r.line, "loops are not allowed");
    }
    h.edges.emplace_back(u, v);
  }
  return h;
}

BetweennessInstance parse_betweenness(std::string_view text) {
  const Parsed p = read_records(text, "betweenness", 2, {{"t", 3}});
  BetweennessInstance inst{static_cast<int>(non_negative(p.header, 0)), {}};
  check_count(p, "t", non_negative(p.header, 1));
  for (const Record& r : all(p, "t")) {
    const std::array<int, 3> t{index_in(r, 0, inst.universe, "element"),
                               index_in(r, 1, inst.universe, "element"),
                               index_in(r, 2, inst.universe, "element")};
    if (t[0] == t[1] || t[1] == t[2] || t[0] == t[2]) {
      throw ParseError(r.line, "triple entries must be distinct");
    }
    inst.triples.push_back(t);
  }
  return inst;
}

RbpmInstance parse_rbpm(std::string_view text) {
  const Parsed p = read_records(text, "rbpm", 2, {{"e", 2}, {"s", 2}});
  RbpmInstance inst{static_cast<int>(non_negative(p.header, 0)), {}, {}};
  check_count(p, "e", non_negative(p.header, 1));
  for (const Record& r : all(p, "e")) {
    inst.edges.emplace_back(index_in(r, 0, inst.side, "left vertex"),
                            index_in(r, 1, inst.side, "right vertex"));
  }
  std::vector<bool> paired(inst.edges.size(), false);
  const auto m = static_cast<long>(inst.edges.size());
  for (const Record& r : all(p, "s")) {
    const int a = index_in(r, 0, m, "edge");
    const int b = index_in(r, 1, m, "edge");
    if (a == b || paired[a] || paired[b]) {
      throw ParseError(r.line, "pairs must join two distinct, otherwise unpaired edges");
    }
    paired[a] = paired[b] = true;
    inst.pairs.emplace_back(a, b);
  }
  return inst;
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(hash));
  return out;
}

}  // namespace ecg::cli
