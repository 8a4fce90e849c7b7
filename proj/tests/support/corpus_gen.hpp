#pragma once

#include <json.hpp>

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "builders.hpp"

namespace gen {

// Fixture text for a random submission: a few classes with concrete methods
// that mix plain tokens and calls. Methods sit in four layers and only call
// lower layers, so call chains stay shallow as in hand-written programs.
inline std::string random_fixture(std::mt19937& rng, std::size_t methods, std::size_t max_tokens = 40) {
  static const std::vector<std::string> plain = {"LOAD", "STORE", "CONST", "ARITH", "CMP", "BRANCH",
                                                 "ARRAY_LOAD", "STACK", "CONV", "FIELD_GET:P.f",
                                                 "FIELD_PUT:P.g", "NEW:java/util/ArrayList"};
  using nlohmann::json;
  const std::size_t classes = 1 + methods / 10;
  std::vector<json> class_nodes(classes);
  std::vector<std::vector<std::string>> layers(4);
  for (std::size_t c = 0; c < classes; ++c) {
    class_nodes[c] = {{"name", "C" + std::to_string(c)},
                      {"kind", "class"},
                      {"extends", nullptr},
                      {"implements", json::array()},
                      {"methods", json::array()}};
  }
  for (std::size_t m = 0; m < methods; ++m) {
    const std::size_t c = m % classes;
    const std::string name = "m" + std::to_string(m);
    const std::string desc = "(" + std::string(rng() % 3, 'I') + ")I";
    json toks = json::array();
    const std::size_t layer = rng() % layers.size();
    std::vector<std::string> callable;
    for (std::size_t l = 0; l < layer; ++l) callable.insert(callable.end(), layers[l].begin(), layers[l].end());
    const std::size_t n = 2 + rng() % (max_tokens - 1);
    for (std::size_t k = 0; k < n; ++k) {
      if (!callable.empty() && rng() % 10 == 0) {
        toks.push_back("INVOKE:" + callable[rng() % callable.size()]);
      } else {
        toks.push_back(plain[rng() % plain.size()]);
      }
    }
    toks.push_back("RETURN");
    class_nodes[c]["methods"].push_back(
        {{"name", name}, {"descriptor", desc}, {"abstract", false}, {"tokens", std::move(toks)}});
    layers[layer].push_back("C" + std::to_string(c) + "." + name + ":" + desc);
  }
  return json{{"classes", class_nodes}}.dump(2) + "\n";
}

// Writes `count` submission directories sub00, sub01, ... under `dir`.
inline void write_corpus(const build::TempDir& dir, std::size_t count, std::size_t methods,
                         unsigned seed) {
  std::mt19937 rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    const std::string label = (k < 10 ? "sub0" : "sub") + std::to_string(k);
    dir.write(label + "/prog.json", random_fixture(rng, 1 + rng() % methods));
  }
}

}  // namespace gen
