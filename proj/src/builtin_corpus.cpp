#include <map>

#include "sftcd/error.hpp"
#include "sftcd/io.hpp"

namespace sftcd {

namespace {

// X = full 2-shift, phi(x)|_i = x|_i + x|_{i+1} mod 2 onto the full 2-shift,
// psi the trivial code onto the one-point shift.
constexpr const char* kXor2 = R"({
  "systems": {
    "X": {"alphabet": ["0", "1"], "allowed": [["0","0"], ["0","1"], ["1","0"], ["1","1"]]},
    "Y": {"alphabet": ["0", "1"], "allowed": [["0","0"], ["0","1"], ["1","0"], ["1","1"]]},
    "Z": {"alphabet": ["z"], "allowed": [["z","z"]]}
  },
  "codes": {
    "phi": {"domain": "X", "codomain_alphabet": ["0", "1"], "memory": 0, "anticipation": 1,
            "rule": {"00": "0", "01": "1", "10": "1", "11": "0"}},
    "psi": {"domain": "Y", "codomain_alphabet": ["z"], "map": {"0": "z", "1": "z"}}
  },
  "triple": {"X": "X", "Y": "Y", "Z": "Z", "Z_alphabet": ["z"], "phi": "phi", "psi": "psi"}
})";

// Same phi with psi the identity.
constexpr const char* kXor2Identity = R"({
  "systems": {
    "X": {"alphabet": ["0", "1"], "allowed": [["0","0"], ["0","1"], ["1","0"], ["1","1"]]},
    "Y": {"alphabet": ["0", "1"], "allowed": [["0","0"], ["0","1"], ["1","0"], ["1","1"]]}
  },
  "codes": {
    "phi": {"domain": "X", "codomain_alphabet": ["0", "1"], "memory": 0, "anticipation": 1,
            "rule": {"00": "0", "01": "1", "10": "1", "11": "0"}},
    "psi": {"domain": "Y", "codomain_alphabet": ["0", "1"], "map": {"0": "0", "1": "1"}}
  },
  "triple": {"X": "X", "Y": "Y", "Z": "Y", "Z_alphabet": ["0", "1"], "phi": "phi", "psi": "psi"}
})";

// phi(x)|_i = x|_i + x|_{i+1} mod 3 on the full 3-shift, psi the identity.
constexpr const char* kMod3 = R"({
  "systems": {
    "X": {"alphabet": ["0", "1", "2"],
          "allowed": [["0","0"], ["0","1"], ["0","2"], ["1","0"], ["1","1"], ["1","2"],
                      ["2","0"], ["2","1"], ["2","2"]]}
  },
  "codes": {
    "phi": {"domain": "X", "codomain_alphabet": ["0", "1", "2"], "memory": 0, "anticipation": 1,
            "rule": {"00": "0", "01": "1", "02": "2", "10": "1", "11": "2", "12": "0",
                     "20": "2", "21": "0", "22": "1"}},
    "psi": {"domain": "X", "codomain_alphabet": ["0", "1", "2"], "map": {"0": "0", "1": "1", "2": "2"}}
  },
  "triple": {"X": "X", "Y": "X", "Z": "X", "Z_alphabet": ["0", "1", "2"], "phi": "phi", "psi": "psi"}
})";

// Identity codes on the golden mean shift (11 forbidden).
constexpr const char* kIdentityChain = R"({
  "systems": {
    "G": {"alphabet": ["0", "1"], "allowed": [["0","0"], ["0","1"], ["1","0"]]}
  },
  "codes": {
    "id": {"domain": "G", "codomain_alphabet": ["0", "1"], "map": {"0": "0", "1": "1"}}
  },
  "triple": {"X": "G", "Y": "G", "Z": "G", "Z_alphabet": ["0", "1"], "phi": "id", "psi": "id"}
})";

// Golden mean shift, identity phi, trivial psi.
constexpr const char* kGoldenTrivial = R"({
  "systems": {
    "G": {"alphabet": ["0", "1"], "allowed": [["0","0"], ["0","1"], ["1","0"]]},
    "Z": {"alphabet": ["z"], "allowed": [["z","z"]]}
  },
  "codes": {
    "id": {"domain": "G", "codomain_alphabet": ["0", "1"], "map": {"0": "0", "1": "1"}},
    "collapse": {"domain": "G", "codomain_alphabet": ["z"], "map": {"0": "z", "1": "z"}}
  },
  "triple": {"X": "G", "Y": "G", "Z": "Z", "Z_alphabet": ["z"], "phi": "id", "psi": "collapse"}
})";

// A relabeling of the full 2-shift followed by the trivial code.
constexpr const char* kRelabelTrivial = R"({
  "systems": {
    "X": {"alphabet": ["0", "1"], "allowed": [["0","0"], ["0","1"], ["1","0"], ["1","1"]]},
    "Y": {"alphabet": ["a", "b"], "allowed": [["a","a"], ["a","b"], ["b","a"], ["b","b"]]},
    "Z": {"alphabet": ["z"], "allowed": [["z","z"]]}
  },
  "codes": {
    "relabel": {"domain": "X", "codomain_alphabet": ["a", "b"], "map": {"0": "b", "1": "a"}},
    "collapse": {"domain": "Y", "codomain_alphabet": ["z"], "map": {"a": "z", "b": "z"}}
  },
  "triple": {"X": "X", "Y": "Y", "Z": "Z", "Z_alphabet": ["z"], "phi": "relabel", "psi": "collapse"}
})";

// Over z the fiber graph is two loops a, b joined one way (a -> b).
constexpr const char* kTwoLoops = R"({
  "systems": {
    "X": {"alphabet": ["a", "b", "c"],
          "allowed": [["a","a"], ["a","b"], ["a","c"], ["b","b"], ["b","c"], ["c","a"], ["c","b"], ["c","c"]]},
    "Y": {"alphabet": ["z", "w"], "allowed": [["z","z"], ["z","w"], ["w","z"], ["w","w"]]}
  },
  "codes": {
    "phi": {"domain": "X", "codomain_alphabet": ["z", "w"], "map": {"a": "z", "b": "z", "c": "w"}},
    "psi": {"domain": "Y", "codomain_alphabet": ["z", "w"], "map": {"z": "z", "w": "w"}}
  },
  "triple": {"X": "X", "Y": "Y", "Z": "Y", "Z_alphabet": ["z", "w"], "phi": "phi", "psi": "psi"}
})";

const std::map<std::string, json>& corpus() {
  static const std::map<std::string, json> docs = [] {
    std::map<std::string, json> out;
    out.emplace("xor2", json::parse(kXor2));
    out.emplace("xor2-identity", json::parse(kXor2Identity));
    out.emplace("mod3", json::parse(kMod3));
    out.emplace("identity-chain", json::parse(kIdentityChain));
    out.emplace("golden-trivial", json::parse(kGoldenTrivial));
    out.emplace("relabel-trivial", json::parse(kRelabelTrivial));
    out.emplace("two-loops", json::parse(kTwoLoops));
    return out;
  }();
  return docs;
}

}  // namespace

std::vector<std::string> builtin_names() {
  std::vector<std::string> out;
  for (const auto& [name, doc] : corpus()) out.push_back(name);
  return out;
}

const json& builtin_document(const std::string& name) {
  auto it = corpus().find(name);
  if (it == corpus().end()) throw Error(ErrorKind::ParseError, "unknown builtin '" + name + "'");
  return it->second;
}

}  // namespace sftcd
