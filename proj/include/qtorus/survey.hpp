#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtorus/lattice.hpp"

namespace qtorus {

/// A system in split coordinates: t is the last coordinate, B the rest.
struct CorpusEntry {
    std::string name;
    ExponentSystem sys;
};

struct CorpusSearch {
    int entry_bound = 1;             // E entries in [-bound, bound]
    std::uint64_t max_candidates = 20000;
};

/// n = 2 with E_12 = 1 and 2, n = 3 with r = 1, and the first n = 3, r = 2
/// system (in enumeration order) with exact dim 2, commutative B = <e1, e2>
/// and trivial center, if the bounded search finds one.
std::vector<CorpusEntry> default_corpus(const CorpusSearch& search = {});

/// First r = 2, n = 3 system found by the bounded search, if any.
std::optional<CorpusEntry> search_rank_two_system(const CorpusSearch& search, std::uint64_t* examined = nullptr);

struct SurveyOptions {
    int characters = 5;
    int unitaries = 4;
    int max_degree = 3;
    int samples = 20;
    int K = 4;
    std::uint64_t seed = 1;
};

struct SurveyModule {
    std::string kind;         // "induced" or "contraction"
    std::string description;  // character values or f
    std::uint64_t seed = 0;   // reproduces this module with the entry's system
    int gk = 0;
    bool simplicity_certified = false;
    std::string evidence;     // how simplicity was decided, or why it was not
    bool bound_check = false; // gk >= n - dim
};

struct SurveyEntryReport {
    std::string name;
    int n = 0;
    bool skipped = false;
    std::string warning;
    std::vector<SurveyModule> modules;
    std::vector<int> multiset;  // gk of simplicity-certified modules, sorted
    bool conforms = true;       // multiset within {1, n - 1}
    std::vector<std::string> violations;
};

struct SurveyReport {
    std::vector<SurveyEntryReport> entries;
    bool conforms = true;
    int bound_violations = 0;
};

SurveyReport survey_conjecture(const std::vector<CorpusEntry>& corpus, const SurveyOptions& opt = {});

}  // namespace qtorus
