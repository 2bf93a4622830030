#include "qdc/sp1.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "qdc/errors.hpp"
#include "qdc/exterior_basis.hpp"

namespace qdc {

namespace {

// kTable[g][b] = (sign, image) of local index b.
constexpr SignedIndex kTable[3][4] = {
    {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
    {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
    {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}},
};

bool acts_on(BlockSet blocks, int i) { return (blocks >> (i / 4)) & 1u; }

}  // namespace

std::string_view name(Generator g) {
  switch (g) {
    case Generator::I: return "I";
    case Generator::J: return "J";
    case Generator::K: return "K";
  }
  return "?";
}

Generator parse_generator(std::string_view text) {
  if (text == "I") return Generator::I;
  if (text == "J") return Generator::J;
  if (text == "K") return Generator::K;
  throw InputError("unknown generator '" + std::string(text) + "' (expected I, J or K)");
}

SignedIndex act_on_one_form(Generator g, int i, int n) {
  if (i < 0 || i >= 4 * n) throw DomainError("one-form index out of range");
  const SignedIndex local = kTable[static_cast<int>(g)][i % 4];
  return {local.sign, 4 * (i / 4) + local.index};
}

Form act(Generator g, const Form& a, BlockSet blocks) {
  Form out(a.n(), a.k());
  for (const auto& [idx, c] : a.terms()) {
    for (int i : idx.indices()) {
      if (!acts_on(blocks, i)) continue;
      const SignedIndex img = act_on_one_form(g, i, a.n());
      if (idx.contains(img.index)) continue;
      const MultiIndex target = idx.without(i).with(img.index);
      const int sign = (count_between(idx, i, img.index) % 2 ? -1 : 1) * img.sign;
      out.add_term(target, sign > 0 ? c : -c);
    }
  }
  return out;
}

Form casimir(const Form& a, BlockSet blocks) {
  Form out(a.n(), a.k());
  for (Generator g : kGenerators) out += act(g, act(g, a, blocks), blocks);
  return out;
}

const SparseMatrix& action_matrix(int n, int k, Generator g, BlockSet blocks) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int, BlockSet>, std::unique_ptr<SparseMatrix>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, k, static_cast<int>(g), blocks}];
  if (!slot) {
    slot = std::make_unique<SparseMatrix>(
        operator_matrix(n, k, k, [&](const Form& f) { return act(g, f, blocks); }));
  }
  return *slot;
}

const SparseMatrix& casimir_matrix(int n, int k, BlockSet blocks) {
  static std::mutex mutex;
  static std::map<std::tuple<int, int, BlockSet>, std::unique_ptr<SparseMatrix>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find({n, k, blocks});
    if (it != cache.end()) return *it->second;
  }
  SparseMatrix c(ExteriorBasis::get(n, k).size(), ExteriorBasis::get(n, k).size());
  for (Generator g : kGenerators) {
    const SparseMatrix& m = action_matrix(n, k, g, blocks);
    c += m * m;
  }
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, k, blocks}];
  if (!slot) slot = std::make_unique<SparseMatrix>(std::move(c));
  return *slot;
}

SparseMatrix combined_action_matrix(int n, int k, const Rational& a, const Rational& b, const Rational& c) {
  SparseMatrix m = action_matrix(n, k, Generator::I) * a;
  m += action_matrix(n, k, Generator::J) * b;
  m += action_matrix(n, k, Generator::K) * c;
  return m;
}

}  // namespace qdc
