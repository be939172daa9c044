#include "insdel/channel.hpp"

#include <algorithm>
#include <stdexcept>

namespace insdel {

Word apply_edits(const Word& word, const EditScript& script) {
  Word out = word;
  for (const EditOp& op : script) {
    if (op.kind == EditOp::Kind::Delete) {
      if (op.pos < 1 || op.pos > out.size()) {
        throw std::out_of_range("deletion position outside the current word");
      }
      out.erase(out.begin() + (op.pos - 1));
    } else {
      if (op.pos < 1 || op.pos > out.size() + 1) {
        throw std::out_of_range("insertion position outside the current word");
      }
      out.insert(out.begin() + (op.pos - 1), op.symbol);
    }
  }
  return out;
}

std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("bound must be positive");
  std::uint64_t overhang = (UINT64_MAX % bound) + 1;  // 2^64 mod bound
  if (overhang == bound) overhang = 0;
  std::uint64_t x = rng();
  while (overhang != 0 && x > UINT64_MAX - overhang) x = rng();
  return x % bound;
}

TowerElem random_tower_elem(std::mt19937_64& rng, const TowerField& tower) {
  const std::uint64_t q = tower.base().size();
  BaseElem c0{bounded_draw(rng, q)};
  BaseElem c1{bounded_draw(rng, q)};
  BaseElem c2{bounded_draw(rng, q)};
  return tower.elem(c0, c1, c2);
}

EditScript random_edit_script(std::uint32_t n, std::uint32_t t_del, std::uint32_t t_ins,
                              std::mt19937_64& rng, const TowerField& tower) {
  if (t_del > n) throw std::invalid_argument("cannot delete more symbols than the word holds");
  std::vector<std::uint32_t> positions(n);
  for (std::uint32_t i = 0; i < n; ++i) positions[i] = i + 1;
  for (std::uint32_t i = 0; i < t_del; ++i) {
    std::uint32_t j = i + static_cast<std::uint32_t>(bounded_draw(rng, n - i));
    std::swap(positions[i], positions[j]);
  }
  positions.resize(t_del);
  std::sort(positions.rbegin(), positions.rend());

  EditScript script;
  script.reserve(t_del + t_ins);
  for (std::uint32_t pos : positions) {
    script.push_back(EditOp{EditOp::Kind::Delete, pos, {}});
  }
  std::uint32_t len = n - t_del;
  for (std::uint32_t i = 0; i < t_ins; ++i) {
    std::uint32_t pos = 1 + static_cast<std::uint32_t>(bounded_draw(rng, len + 1));
    script.push_back(EditOp{EditOp::Kind::Insert, pos, random_tower_elem(rng, tower)});
    ++len;
  }
  return script;
}

EditScript random_edit_script(std::uint32_t n, std::uint32_t t_del, std::uint32_t t_ins,
                              std::uint64_t seed, const TowerField& tower) {
  std::mt19937_64 rng(seed);
  return random_edit_script(n, t_del, t_ins, rng, tower);
}

}  // namespace insdel
