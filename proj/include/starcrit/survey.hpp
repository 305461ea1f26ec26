#ifndef STARCRIT_SURVEY_HPP
#define STARCRIT_SURVEY_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "starcrit/abelian.hpp"
#include "starcrit/structures.hpp"

namespace starcrit {

struct SurveyReport {
  std::size_t n = 0;
  GraphKind graph = GraphKind::star;
  std::uint64_t structure_count = 0;
  std::set<FiniteAbelianGroup> distinct_groups;
  BigInt max_order = 1;
  std::vector<BigInt> max_order_witness;
  // rank -> number of distinct groups of that rank
  std::map<std::size_t, std::uint64_t> rank_histogram;
};

struct SurveyOptions {
  unsigned workers = 1;
  // When set, per-partition partial results are persisted as sorted JSONL
  // and reloaded on a rerun, so an interrupted long survey resumes.
  std::optional<std::filesystem::path> checkpoint_dir;
};

// Folds the critical group of every structure on S_n (star) or K_n
// (complete, via the d0 = 1 slice) into one report. The result is identical
// for any worker count.
SurveyReport run_survey(std::size_t n, GraphKind graph, const SurveyOptions &opts = {});

struct FixtureTable {
  enum class Source { appendix_a, largest_order, group_counts, example_4_1 };
  Source source;
  std::size_t n = 0;                        // appendix fixtures only
  std::size_t tuples_transcribed = 0;       // raw line count before merging
  std::set<FiniteAbelianGroup> groups;      // canonicalized, duplicates merged
  std::map<std::size_t, BigInt> by_n;       // n -> value (order/count tables)
};

// One tuple of cyclic orders per line, e.g. "2,4,8"; canonicalized on load,
// duplicates across the file merged.
FixtureTable load_appendix_fixture(const std::filesystem::path &file, std::size_t n);

// CSV "n,value" per line (header allowed).
FixtureTable load_value_table(const std::filesystem::path &file, FixtureTable::Source source);

struct FixtureDiff {
  std::vector<FiniteAbelianGroup> missing_from_computed;
  std::vector<FiniteAbelianGroup> extra_in_computed;

  bool empty() const { return missing_from_computed.empty() && extra_in_computed.empty(); }
  std::string str() const;
};

FixtureDiff compare_fixture(const SurveyReport &report, const FixtureTable &fixture);

struct SetComparisonReport {
  bool equal = false;
  std::uint64_t star_count = 0;
  std::uint64_t complete_count = 0;
  std::string message;
};

// CG(S_n) = CG(K_n) as sets of groups.
SetComparisonReport verify_star_equals_complete(std::size_t n, const SurveyOptions &opts = {});

struct DoublingReport {
  bool ok = false;
  std::uint64_t count_n = 0;
  std::uint64_t count_prev = 0;
  std::string message;
};

// |CG(S_n)| >= 2 |CG(S_{n-1})| and >= 2^(n-2).
DoublingReport verify_count_doubling(std::size_t n, const SurveyOptions &opts = {});

// survey_{graph}_n{n}.json under dir.
std::filesystem::path write_survey_json(const SurveyReport &report,
                                        const std::filesystem::path &dir);

// tables/largest_order.csv and tables/group_counts.csv rows from reports.
void write_tables_csv(const std::vector<SurveyReport> &reports,
                      const std::filesystem::path &dir);

// appendix_diff_n{n}.txt; returns the path.
std::filesystem::path write_appendix_diff(const SurveyReport &report,
                                          const FixtureTable &fixture,
                                          const std::filesystem::path &dir);

}  // namespace starcrit

#endif
