#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "qdc/form.hpp"
#include "qdc/linalg.hpp"

namespace qdc {

/// Generators of sp(1), with [I,J] = 2K, [J,K] = 2I, [K,I] = 2J.
enum class Generator { I, J, K };

inline constexpr std::array<Generator, 3> kGenerators{Generator::I, Generator::J, Generator::K};

std::string_view name(Generator g);
/// Parses "I", "J" or "K"; throws InputError otherwise.
Generator parse_generator(std::string_view text);

/// Set of H-blocks a derivation acts on (bit a = block a).
using BlockSet = std::uint64_t;
inline constexpr BlockSet kAllBlocks = ~BlockSet{0};
/// Blocks 1..n-1, i.e. every block but the distinguished H_0.
inline constexpr BlockSet kOffBlockZero = ~BlockSet{1};
inline constexpr BlockSet kBlockZero = BlockSet{1};

struct SignedIndex {
  int sign;
  int index;
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// g(e^i) on R^{4n}. Per block (local indices 0..3):
///   I: 0→1, 1→-0, 2→3, 3→-2
///   J: 0→2, 2→-0, 1→-3, 3→1
///   K: 0→3, 3→-0, 1→2, 2→-1
SignedIndex act_on_one_form(Generator g, int i, int n);

/// Derivation extension of g to forms; coefficients are untouched.
Form act(Generator g, const Form& a, BlockSet blocks = kAllBlocks);
/// I^2 + J^2 + K^2.
Form casimir(const Form& a, BlockSet blocks = kAllBlocks);

/// Cached matrices on Λ^k(R^{4n}) in ExteriorBasis coordinates.
const SparseMatrix& action_matrix(int n, int k, Generator g, BlockSet blocks = kAllBlocks);
const SparseMatrix& casimir_matrix(int n, int k, BlockSet blocks = kAllBlocks);

/// a*I + b*J + c*K acting as a derivation on Λ^k.
SparseMatrix combined_action_matrix(int n, int k, const Rational& a, const Rational& b, const Rational& c);

}  // namespace qdc
