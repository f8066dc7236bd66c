#pragma once

#include <deque>
#include <string>
#include <unordered_map>
#include <vector>

#include "hm13/matrix.hpp"

namespace hm13 {

struct GroupClosure {
  // Projective normal forms of the enumerated elements, in BFS order.
  std::vector<CycMatrix> elements;
  // Generator words (one letter per generator, in input order) realizing
  // each element; elements[i] corresponds to words[i].
  std::vector<std::string> words;

  size_t order() const { return elements.size(); }
};

// Breadth-first closure of the projective group generated by the given
// matrices.  Elements are identified by the serialized projective normal
// form.  Throws CapExceeded if the closure grows past `cap`, so a typo in a
// generator cannot silently enumerate forever.
inline GroupClosure enumerate_group(const std::vector<CycMatrix>& generators,
                                    const std::vector<std::string>& names,
                                    size_t cap = 3000) {
  if (generators.empty()) throw SizeMismatch("no generators");
  if (names.size() != generators.size())
    throw SizeMismatch("generator/name count mismatch");

  GroupClosure out;
  std::unordered_map<std::string, size_t> seen;

  CycMatrix id = CycMatrix::identity(generators[0].size()).canonical();
  seen.emplace(id.key(), 0);
  out.elements.push_back(id);
  out.words.push_back("e");

  std::deque<size_t> frontier{0};
  while (!frontier.empty()) {
    size_t cur = frontier.front();
    frontier.pop_front();
    for (size_t g = 0; g < generators.size(); ++g) {
      CycMatrix next = (out.elements[cur] * generators[g]).canonical();
      std::string key = next.key();
      if (seen.contains(key)) continue;
      if (out.elements.size() >= cap)
        throw CapExceeded("group closure exceeded cap of " +
                          std::to_string(cap));
      seen.emplace(std::move(key), out.elements.size());
      out.elements.push_back(std::move(next));
      std::string w = out.words[cur] == "e" ? names[g]
                                            : out.words[cur] + names[g];
      out.words.push_back(std::move(w));
      frontier.push_back(out.elements.size() - 1);
    }
  }
  return out;
}

}  // namespace hm13
