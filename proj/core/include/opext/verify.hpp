#pragma once

#include "opext/corpus.hpp"
#include "opext/triples.hpp"

namespace opext {

struct CheckRecord {
    std::string anchor;  // stable statement id from the statement map
    std::string status;  // "pass" | "fail" | "reported"
    std::string detail;  // counterexample payload or reported outcome
};

struct VerifyReport {
    std::string suite;
    std::vector<std::pair<std::string, std::string>> algebras;  // name, fingerprint
    std::uint64_t seed = 1;
    int count = 100;
    std::vector<CheckRecord> checks;
    int passed = 0;
    int failed = 0;
    int reported = 0;

    void check(const std::string& anchor, bool ok, const std::string& detail = "");
    void report(const std::string& anchor, const std::string& outcome);
    void merge(std::vector<CheckRecord> records);
    bool ok() const { return failed == 0; }

    std::string to_json() const;  // stable field order, byte-identical per seed
    std::string summary() const;  // one human line
};

// Suite ids:
//   structural        injectivity/pd/radical facts of the extension vertex
//   lemma2.2          canonical sequences with their simple multiplicities
//   lemma2.5          unit map mono/epi criteria
//   prop2             Ext transport along restriction/extension
//   counts            enumeration counts with brute-force cross-check
//   defequiv          definition equivalences, exhaustive over subsets
//   transport-tilting tilting transport both directions
//   transport-stt     support tau-tilting transport both directions
//   silting-restriction  silting restriction + the two reported probes
//   quasi-tilting     quasi-tilting transport
//   cosilting         cosilting transport
//   triples           triple bijection, transport comparisons, identities
//   oracles           Ext1 and Pres membership against brute-force search
std::vector<std::string> suite_names();

// Named extension contexts to run over; when empty the shipped corpus
// extensions are used. Honors OPEXT_THREADS for per-context parallelism.
VerifyReport run_suite(const std::string& suite, std::uint64_t seed, int count,
                       const std::vector<std::pair<std::string, ExtensionContext>>& contexts = {});

}  // namespace opext
