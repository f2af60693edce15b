#pragma once

// Planar diagram (PD) codes for knot diagrams.
//
// A crossing is written X a b c d: the labels of the four edge-ends in
// counterclockwise order starting from the incoming under-strand.  Slots 0
// and 2 therefore carry the under-strand, slots 1 and 3 the over-strand.
// Edge labels are opaque positive integers; each must occur exactly twice.
// The zero-crossing unknot is the token "unknot".
//
// Parsing validates the combinatorial map: the face traversal must close
// with exactly c(D)+2 faces and the diagram must be a single closed strand.

#include "knotmat/error.hpp"

#include <array>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace knotmat {

// A dart is an edge-end: crossing index plus slot 0..3.
struct Dart {
  int crossing = 0;
  int slot = 0;
  friend bool operator==(const Dart&, const Dart&) = default;
};

class Diagram {
 public:
  static Diagram parse(std::string_view text, std::string name = {});
  static Diagram unknot(std::string name = "unknot") {
    Diagram d;
    d.name_ = std::move(name);
    return d;
  }

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return edge_count_; }
  bool is_unknot() const { return crossings_.empty(); }
  const std::vector<std::array<int, 4>>& crossings() const { return crossings_; }
  int label(int crossing, int slot) const { return crossings_[crossing][slot]; }
  const std::string& name() const { return name_; }

  // Other end of the edge at this dart.
  Dart twin(Dart d) const { return twin_[4 * d.crossing + d.slot]; }

  // label -> its two darts, in crossing-major order.
  const std::map<int, std::pair<Dart, Dart>>& edges() const { return edges_; }

 private:
  void build_and_validate();
  int face_count() const;
  int strand_count() const;

  std::vector<std::array<int, 4>> crossings_;
  std::vector<Dart> twin_;
  std::map<int, std::pair<Dart, Dart>> edges_;
  int edge_count_ = 0;
  std::string name_;
};

inline Diagram Diagram::parse(std::string_view text, std::string name) {
  // Tokenize: '#' comments to end of line; brackets and commas act as
  // whitespace so "X[1,4,2,5]" and "X 1 4 2 5" read the same; '/' separates
  // records and is otherwise ignored.
  std::vector<std::string> tokens;
  std::string cur;
  bool in_comment = false;
  auto flush = [&] {
    if (!cur.empty()) {
      tokens.push_back(cur);
      cur.clear();
    }
  };
  for (char ch : text) {
    if (in_comment) {
      if (ch == '\n') in_comment = false;
      continue;
    }
    if (ch == '#') {
      in_comment = true;
      flush();
    } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == '[' ||
               ch == ']' || ch == ',' || ch == '/') {
      flush();
    } else {
      cur.push_back(ch);
    }
  }
  flush();

  if (tokens.empty())
    throw Error(Errc::malformed_record, "empty PD input");
  if (tokens.size() == 1 && (tokens[0] == "unknot" || tokens[0] == "Unknot"))
    return Diagram::unknot(name.empty() ? "unknot" : name);

  Diagram d;
  d.name_ = std::move(name);
  size_t i = 0;
  while (i < tokens.size()) {
    if (tokens[i] != "X" && tokens[i] != "x")
      throw Error(Errc::malformed_record,
                  "expected crossing record 'X a b c d', got '" + tokens[i] + "'");
    ++i;
    std::array<int, 4> tup{};
    for (int s = 0; s < 4; ++s, ++i) {
      if (i >= tokens.size())
        throw Error(Errc::malformed_record, "crossing record has fewer than 4 labels");
      const std::string& t = tokens[i];
      size_t pos = 0;
      long v = 0;
      try {
        v = std::stol(t, &pos);
      } catch (const std::exception&) {
        throw Error(Errc::malformed_record, "edge label '" + t + "' is not an integer");
      }
      if (pos != t.size())
        throw Error(Errc::malformed_record, "edge label '" + t + "' is not an integer");
      if (v <= 0)
        throw Error(Errc::malformed_record, "edge label " + t + " is not positive");
      tup[s] = static_cast<int>(v);
    }
    d.crossings_.push_back(tup);
  }

  d.build_and_validate();
  return d;
}

inline void Diagram::build_and_validate() {
  std::map<int, std::vector<Dart>> occ;
  for (int c = 0; c < crossing_count(); ++c)
    for (int s = 0; s < 4; ++s)
      occ[crossings_[c][s]].push_back({c, s});
  for (const auto& [label, darts] : occ)
    if (darts.size() != 2)
      throw Error(Errc::bad_incidence,
                  "edge label " + std::to_string(label) + " appears " +
                      std::to_string(darts.size()) + " times (expected 2)");
  edge_count_ = static_cast<int>(occ.size());

  twin_.assign(4 * crossings_.size(), Dart{});
  for (const auto& [label, darts] : occ) {
    twin_[4 * darts[0].crossing + darts[0].slot] = darts[1];
    twin_[4 * darts[1].crossing + darts[1].slot] = darts[0];
    edges_.emplace(label, std::make_pair(darts[0], darts[1]));
  }

  const int c = crossing_count();
  if (face_count() != c + 2)
    throw Error(Errc::not_planar_knot,
                "face traversal yields " + std::to_string(face_count()) +
                    " faces, expected " + std::to_string(c + 2));
  if (strand_count() != 1)
    throw Error(Errc::not_planar_knot,
                "diagram has " + std::to_string(strand_count()) +
                    " closed strands; knots have exactly 1");
}

inline int Diagram::face_count() const {
  // Faces are the orbits of psi(d) = sigma(twin(d)) with sigma the
  // counterclockwise slot rotation.
  std::vector<bool> seen(4 * crossings_.size(), false);
  int faces = 0;
  for (int c = 0; c < crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      if (seen[4 * c + s]) continue;
      ++faces;
      Dart d{c, s};
      while (!seen[4 * d.crossing + d.slot]) {
        seen[4 * d.crossing + d.slot] = true;
        Dart t = twin(d);
        d = {t.crossing, (t.slot + 1) % 4};
      }
    }
  }
  return faces;
}

inline int Diagram::strand_count() const {
  // Follow the strand through crossings: slot s exits at slot s+2.
  std::vector<bool> seen(4 * crossings_.size(), false);
  int strands = 0;
  for (int c = 0; c < crossing_count(); ++c) {
    for (int s = 0; s < 4; ++s) {
      if (seen[4 * c + s]) continue;
      ++strands;
      Dart d{c, s};
      while (!seen[4 * d.crossing + d.slot]) {
        seen[4 * d.crossing + d.slot] = true;
        Dart out{d.crossing, (d.slot + 2) % 4};
        seen[4 * out.crossing + out.slot] = true;
        d = twin(out);
      }
    }
  }
  return strands;
}

}  // namespace knotmat
