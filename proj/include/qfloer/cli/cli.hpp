#pragma once

#include "qfloer/lattice.hpp"

#include <exception>
#include <iosfwd>
#include <string>
#include <vector>

namespace qfloer::cli {

enum ExitCode : int {
  kOk = 0,
  kIdentityFailure = 1,
  kSchemaError = 2,
  kLatticeInvariant = 3,
  kSplitting = 4,
  kInternal = 5,
};

// Maps a library exception onto the documented exit codes.
int exit_code_for(const std::exception& e);

// Entry point shared by the binary and the tests. argv[0] is the program
// name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct SnapshotRow {
  TwistWord word;
  std::size_t source = 0;
  std::size_t target = 0;
  QLaurent value;  // pair(apply_word(word, e_source), e_target)
};

// Freely reduced words over the sphere letters, by length and then
// lexicographically, up to max_len.
std::vector<TwistWord> reduced_words(const QLattice& lat, std::size_t max_len);

// Rows for every reduced word, source and target, in word order. Work is
// split over `threads` workers; the result does not depend on it.
std::vector<SnapshotRow> snapshot(const QLattice& lat, std::size_t max_len, unsigned threads);

std::string word_str(const TwistWord& w);
std::string snapshot_text(const QLattice& lat, std::size_t max_len, const std::vector<SnapshotRow>& rows);

// QFLOER_THREADS if set and positive, else the hardware concurrency.
unsigned worker_count();

}  // namespace qfloer::cli
