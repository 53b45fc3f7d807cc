// Copyright 2026 The ctxlab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Symbolic description of the correlation expressions. Both the quantum
// evaluator and the hidden-variable enumerators read these tables.

#ifndef CTXLAB_TERMS_HPP
#define CTXLAB_TERMS_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace ctxlab {

/// The nine entries of the Peres-Mermin square.
enum class Mermin : std::uint8_t { A, B, C, a, b, c, alpha, beta, gamma };
inline constexpr std::size_t kMerminCount = 9;

/// Settings of the distant parties: P, Q for Bob; U, V for Charlie.
enum class Remote : std::uint8_t { P, Q, U, V };
inline constexpr std::size_t kRemoteCount = 4;

enum class Parties : std::uint8_t { Bipartite, Tripartite };

inline constexpr std::array<Mermin, kMerminCount> kAllMermin = {
    Mermin::A, Mermin::B, Mermin::C, Mermin::a, Mermin::b,
    Mermin::c, Mermin::alpha, Mermin::beta, Mermin::gamma};

inline constexpr std::size_t index(Mermin m) { return static_cast<std::size_t>(m); }
inline constexpr std::size_t index(Remote r) { return static_cast<std::size_t>(r); }

/// Display symbol (UTF-8 Greek letters).
inline std::string_view symbol(Mermin m) {
  constexpr std::array<std::string_view, kMerminCount> names = {
      "A", "B", "C", "a", "b", "c", "α", "β", "γ"};
  return names[index(m)];
}

/// ASCII name, used in CSV/JSON output and on the command line.
inline std::string_view ascii_name(Mermin m) {
  constexpr std::array<std::string_view, kMerminCount> names = {
      "A", "B", "C", "a", "b", "c", "alpha", "beta", "gamma"};
  return names[index(m)];
}

inline std::string_view symbol(Remote r) {
  constexpr std::array<std::string_view, kRemoteCount> names = {"P", "Q", "U", "V"};
  return names[index(r)];
}

/// An ordered triple of compatible observables measured in sequence.
using Sequence = std::array<Mermin, 3>;

/// The twelve measurement sequences, in the order they appear in <T>.
inline constexpr std::array<Sequence, 12> kSequences = {{
    {Mermin::C, Mermin::A, Mermin::B},
    {Mermin::B, Mermin::A, Mermin::C},
    {Mermin::alpha, Mermin::beta, Mermin::gamma},
    {Mermin::beta, Mermin::alpha, Mermin::gamma},
    {Mermin::a, Mermin::A, Mermin::alpha},
    {Mermin::alpha, Mermin::A, Mermin::a},
    {Mermin::B, Mermin::b, Mermin::beta},
    {Mermin::beta, Mermin::B, Mermin::b},
    {Mermin::c, Mermin::a, Mermin::b},
    {Mermin::a, Mermin::b, Mermin::c},
    {Mermin::C, Mermin::c, Mermin::gamma},
    {Mermin::c, Mermin::C, Mermin::gamma},
}};

/// A term of <T>: all three outcomes multiplied.
struct TTerm {
  std::size_t sequence;
  int sign;
};

inline constexpr std::array<TTerm, 12> kTTerms = {{
    {0, +1}, {1, +1}, {2, +1}, {3, +1}, {4, +1}, {5, +1},
    {6, +1}, {7, +1}, {8, +1}, {9, +1}, {10, -1}, {11, -1},
}};

/// A term of <S> / <S'>: the first observable of the sequence is the
/// conditioning one; the last two outcomes are multiplied with the distant
/// outcome(s).
struct STerm {
  std::size_t sequence;
  int sign;
  Remote bob;                      // distant setting in <S>
  std::array<Remote, 2> bob_charlie;  // distant settings in <S'>
};

/// <S> and <S'> share sequences and signs; listed in their own order.
inline constexpr std::array<STerm, 12> kSTerms = {{
    {0, +1, Remote::P, {Remote::P, Remote::V}},
    {1, +1, Remote::P, {Remote::P, Remote::V}},
    {2, +1, Remote::P, {Remote::P, Remote::U}},
    {3, +1, Remote::P, {Remote::P, Remote::V}},
    {4, +1, Remote::P, {Remote::P, Remote::U}},
    {5, -1, Remote::Q, {Remote::Q, Remote::V}},
    {6, +1, Remote::Q, {Remote::Q, Remote::U}},
    {7, +1, Remote::Q, {Remote::Q, Remote::U}},
    {10, -1, Remote::Q, {Remote::Q, Remote::U}},
    {11, +1, Remote::Q, {Remote::Q, Remote::V}},
    {8, +1, Remote::P, {Remote::P, Remote::U}},
    {9, -1, Remote::Q, {Remote::Q, Remote::V}},
}};

inline constexpr std::size_t distant_count(Parties p) {
  return p == Parties::Bipartite ? 2 : 4;
}

inline std::string sequence_text(const Sequence& s, std::size_t from = 0) {
  std::string out;
  for (std::size_t i = from; i < s.size(); ++i) out += symbol(s[i]);
  return out;
}

inline std::string t_label(const TTerm& t) {
  return "⟨" + sequence_text(kSequences[t.sequence]) + "⟩";
}

inline std::string s_label(const STerm& t, Parties p) {
  const auto& seq = kSequences[t.sequence];
  std::string out = "⟨" + sequence_text(seq, 1);
  if (p == Parties::Bipartite) {
    out += symbol(t.bob);
  } else {
    out += symbol(t.bob_charlie[0]);
    out += symbol(t.bob_charlie[1]);
  }
  out += "⟩_";
  out += symbol(seq[0]);
  return out;
}

}  // namespace ctxlab

#endif  // CTXLAB_TERMS_HPP
