#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace hyperq::algebra {

// Canonical phase-space variables followed by the two positive parameters.
// The enumerator order is the print/storage order of monomials.
enum class Var : std::size_t {
  lambda = 0,
  x,
  y,
  z,
  p_lambda,
  p_x,
  p_y,
  p_z,
  a,
  m,
};

inline constexpr std::size_t kNumVars = 10;
inline constexpr std::size_t kNumCanonical = 8;

constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

constexpr bool is_parameter(Var v) { return v == Var::a || v == Var::m; }

inline constexpr std::array<std::string_view, kNumVars> kVarNames = {
    "lambda", "x", "y", "z", "p_lambda", "p_x", "p_y", "p_z", "a", "m"};

constexpr std::string_view name(Var v) { return kVarNames[index(v)]; }

std::optional<Var> var_from_name(std::string_view s);

// Coordinate/momentum pairs (q_k, p_k) entering the canonical bracket.
struct CanonicalPair {
  Var q;
  Var p;
};

inline constexpr std::array<CanonicalPair, 4> kCanonicalPairs = {{
    {Var::lambda, Var::p_lambda},
    {Var::x, Var::p_x},
    {Var::y, Var::p_y},
    {Var::z, Var::p_z},
}};

// Elimination priority used when orienting constraints into rewrite rules.
// Earlier entries dominate in the lexicographic comparison.
inline constexpr std::array<Var, kNumCanonical> kEliminationOrder = {
    Var::p_lambda, Var::lambda, Var::p_x, Var::z,
    Var::x,        Var::y,      Var::p_y, Var::p_z};

}  // namespace hyperq::algebra
