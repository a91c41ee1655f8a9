#pragma once

// Synthesis requests shared by the unit tests, the acceptance binary and the
// benchmarks.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "coc/context.hpp"
#include "coc/synthesizer.hpp"
#include "coc/vernacular.hpp"

namespace coctest {

enum class Expect { Found, NotFound };

struct CorpusCase {
  std::string label;
  std::string covers;   // "q=0", "i<n", "projection", "eager", "premises", ...
  std::string context;  // "A : Prop; a : A; d := [x:A]x"
  std::string goal;
  std::optional<std::vector<std::string>> premises;
  Expect expect;
};

// Declarations separated by ';': "name : type" or "name := body".
// Definitions get their inferred type.
coc::Context parse_context(const std::string& text);

coc::SynthesisRequest to_request(const CorpusCase& c);

// Hand-built cases; the expectations were derived by hand from the method.
const std::vector<CorpusCase>& soundness_corpus();

// Well-formed requests with at most 8 context entries and goals of depth at
// most 4, reproducible from the seed.
std::vector<coc::SynthesisRequest> random_requests(std::uint64_t seed, std::size_t count);

// Depth of a type: atoms 1, products 1 + max(domain, codomain).
int type_depth(const coc::Term& t);

// A script that must be rejected at a given instruction.
struct NegativeFixture {
  std::string file;
  int line;
  int column;
  std::string needle;  // substring of the diagnostic
};

const std::vector<NegativeFixture>& negative_fixtures();
const std::vector<std::string>& positive_fixtures();

// Checks every proved constant of a successful run: its type must start
// with one product per Variable/Hypothesis declared before the Statement,
// with the declared domains in order, followed by the Statement itself.
// Returns one message per violation; `checked` counts remarks with k > 0.
std::vector<std::string> discharge_violations(const std::string& source, const coc::ScriptReport& report,
                                              std::size_t* checked = nullptr);

std::string read_file(const std::string& path);
std::string fixture_path(const std::string& name);

}  // namespace coctest
