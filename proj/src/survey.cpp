#include "starcrit/survey.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "starcrit/critical.hpp"
#include "starcrit/enumerate.hpp"
#include "starcrit/json_io.hpp"

namespace starcrit {

namespace {

struct Partial {
  std::uint64_t count = 0;
  std::set<FiniteAbelianGroup> groups;
  BigInt max_order = 0;
  std::vector<BigInt> witness;
};

void fold_structure(Partial &p, const DhatVector &dhat) {
  CriticalGroupResult res = critical_star(dhat);
  ++p.count;
  p.groups.insert(res.group);
  if (res.order > p.max_order) {
    p.max_order = res.order;
    p.witness = dhat.entries();
  }
}

// Merge in child order keeps the witness rule identical to a serial run:
// only a strictly larger order replaces the incumbent.
void merge(Partial &into, const Partial &part) {
  into.count += part.count;
  into.groups.insert(part.groups.begin(), part.groups.end());
  if (part.max_order > into.max_order) {
    into.max_order = part.max_order;
    into.witness = part.witness;
  }
}

std::string checkpoint_name(std::size_t n, GraphKind graph, std::size_t child,
                            const EnumSpec &spec) {
  std::string name =
      "part_" + to_string(graph) + "_n" + std::to_string(n) + "_c" + std::to_string(child);
  for (const BigInt &d : spec.prefix) name += "_" + d.get_str();
  return name + ".jsonl";
}

void save_partial(const std::filesystem::path &file, const Partial &p) {
  std::ofstream out(file);
  nlohmann::json meta;
  meta["count"] = p.count;
  meta["max_order"] = p.max_order.get_str();
  meta["witness"] = to_json(p.witness);
  out << meta.dump() << '\n';
  for (const FiniteAbelianGroup &g : p.groups) out << to_json(g).dump() << '\n';
}

std::optional<Partial> load_partial(const std::filesystem::path &file) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line)) return std::nullopt;
  Partial p;
  try {
    nlohmann::json meta = nlohmann::json::parse(line);
    p.count = meta.at("count").get<std::uint64_t>();
    p.max_order = parse_bigint(meta.at("max_order").get<std::string>());
    for (const auto &w : meta.at("witness")) p.witness.push_back(parse_bigint(w.get<std::string>()));
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json arr = nlohmann::json::parse(line);
      std::vector<BigInt> factors;
      for (const auto &f : arr) factors.push_back(parse_bigint(f.get<std::string>()));
      p.groups.insert(FiniteAbelianGroup::from_cyclic_orders(factors));
    }
  } catch (const std::exception &) {
    return std::nullopt;  // unreadable checkpoint, recompute
  }
  return p;
}

}  // namespace

SurveyReport run_survey(std::size_t n, GraphKind graph, const SurveyOptions &opts) {
  if (n < 2) throw std::invalid_argument("run_survey: n >= 2 required");
  EnumSpec spec;
  spec.n = n;
  if (graph == GraphKind::complete) spec.d0_filter = BigInt(1);

  const unsigned workers = std::max(1u, opts.workers);
  std::vector<EnumSpec> children;
  if (workers == 1 && !opts.checkpoint_dir) {
    children.push_back(spec);
  } else {
    children = partition_work(spec, n >= 5 ? 2 : 1);
  }

  std::vector<Partial> parts(children.size());
  std::vector<char> done(children.size(), 0);

  if (opts.checkpoint_dir) {
    std::filesystem::create_directories(*opts.checkpoint_dir);
    for (std::size_t i = 0; i < children.size(); ++i) {
      auto file = *opts.checkpoint_dir / checkpoint_name(n, graph, i, children[i]);
      if (auto p = load_partial(file)) {
        parts[i] = std::move(*p);
        done[i] = 1;
      }
    }
  }

  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= children.size()) break;
      if (done[i]) continue;
      Partial p;
      enumerate_structures(children[i], [&](const DhatVector &dhat) {
        fold_structure(p, dhat);
        return true;
      });
      if (opts.checkpoint_dir)
        save_partial(*opts.checkpoint_dir / checkpoint_name(n, graph, i, children[i]), p);
      parts[i] = std::move(p);
    }
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto &t : pool) t.join();
  }

  Partial total;
  for (const Partial &p : parts) merge(total, p);

  SurveyReport rep;
  rep.n = n;
  rep.graph = graph;
  rep.structure_count = total.count;
  rep.distinct_groups = std::move(total.groups);
  rep.max_order = total.max_order > 0 ? total.max_order : BigInt(1);
  rep.max_order_witness = std::move(total.witness);
  for (const FiniteAbelianGroup &g : rep.distinct_groups) ++rep.rank_histogram[g.rank()];
  return rep;
}

FixtureTable load_appendix_fixture(const std::filesystem::path &file, std::size_t n) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open fixture " + file.string());
  FixtureTable t;
  t.source = FixtureTable::Source::appendix_a;
  t.n = n;
  // "# erratum: A -> B" replaces the transcribed tuple A by B once; the
  // printed lines themselves stay verbatim.
  std::map<std::string, std::string> errata;
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::string comment = line.substr(hash + 1);
      auto mark = comment.find("erratum:");
      auto arrow = comment.find("->");
      if (mark != std::string::npos && arrow != std::string::npos) {
        auto strip = [](std::string s) {
          s.erase(0, s.find_first_not_of(" \t"));
          s.erase(s.find_last_not_of(" \t") + 1);
          return s;
        };
        errata[strip(comment.substr(mark + 8, arrow - mark - 8))] =
            strip(comment.substr(arrow + 2));
      }
      line = line.substr(0, hash);
    }
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
    if (line.empty()) continue;
    ++t.tuples_transcribed;
    auto fix = errata.find(line);
    if (fix != errata.end()) {
      t.groups.insert(FiniteAbelianGroup::from_cyclic_orders(parse_bigint_list(fix->second)));
      errata.erase(fix);
      continue;
    }
    t.groups.insert(FiniteAbelianGroup::from_cyclic_orders(parse_bigint_list(line)));
  }
  return t;
}

FixtureTable load_value_table(const std::filesystem::path &file, FixtureTable::Source source) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open fixture " + file.string());
  FixtureTable t;
  t.source = source;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r')) line.pop_back();
    if (line.empty() || !isdigit(static_cast<unsigned char>(line[0]))) continue;
    auto comma = line.find(',');
    if (comma == std::string::npos) throw std::runtime_error("bad fixture row: " + line);
    t.by_n[std::stoul(line.substr(0, comma))] = parse_bigint(line.substr(comma + 1));
  }
  return t;
}

std::string FixtureDiff::str() const {
  if (empty()) return "empty diff";
  std::string s;
  for (const auto &g : missing_from_computed) s += "fixture only: " + g.str() + "\n";
  for (const auto &g : extra_in_computed) s += "computed only: " + g.str() + "\n";
  return s;
}

FixtureDiff compare_fixture(const SurveyReport &report, const FixtureTable &fixture) {
  FixtureDiff diff;
  std::set_difference(fixture.groups.begin(), fixture.groups.end(),
                      report.distinct_groups.begin(), report.distinct_groups.end(),
                      std::back_inserter(diff.missing_from_computed));
  std::set_difference(report.distinct_groups.begin(), report.distinct_groups.end(),
                      fixture.groups.begin(), fixture.groups.end(),
                      std::back_inserter(diff.extra_in_computed));
  return diff;
}

SetComparisonReport verify_star_equals_complete(std::size_t n, const SurveyOptions &opts) {
  SurveyReport star = run_survey(n, GraphKind::star, opts);
  SurveyReport complete = run_survey(n, GraphKind::complete, opts);
  SetComparisonReport rep;
  rep.star_count = star.distinct_groups.size();
  rep.complete_count = complete.distinct_groups.size();
  rep.equal = star.distinct_groups == complete.distinct_groups;
  std::ostringstream msg;
  msg << "CG(S_" << n << ") " << (rep.equal ? "==" : "!=") << " CG(K_" << n << "): "
      << rep.star_count << " vs " << rep.complete_count << " groups";
  rep.message = msg.str();
  return rep;
}

DoublingReport verify_count_doubling(std::size_t n, const SurveyOptions &opts) {
  if (n < 3) throw std::invalid_argument("verify_count_doubling: n >= 3 required");
  SurveyReport cur = run_survey(n, GraphKind::star, opts);
  SurveyReport prev = run_survey(n - 1, GraphKind::star, opts);
  DoublingReport rep;
  rep.count_n = cur.distinct_groups.size();
  rep.count_prev = prev.distinct_groups.size();
  const std::uint64_t power = n >= 2 ? (1ull << (n - 2)) : 1;
  rep.ok = rep.count_n >= 2 * rep.count_prev && rep.count_n >= power;
  std::ostringstream msg;
  msg << "|CG(S_" << n << ")| = " << rep.count_n << ", |CG(S_" << n - 1
      << ")| = " << rep.count_prev << ", bound 2^(n-2) = " << power << ": "
      << (rep.ok ? "ok" : "VIOLATED");
  rep.message = msg.str();
  return rep;
}

std::filesystem::path write_survey_json(const SurveyReport &report,
                                        const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  nlohmann::json j;
  j["n"] = report.n;
  j["graph"] = to_string(report.graph);
  j["structure_count"] = report.structure_count;
  j["distinct_group_count"] = report.distinct_groups.size();
  nlohmann::json groups = nlohmann::json::array();
  for (const FiniteAbelianGroup &g : report.distinct_groups) groups.push_back(to_json(g));
  j["distinct_groups"] = std::move(groups);
  j["max_order"] = report.max_order.get_str();
  j["max_order_witness"] = to_json(report.max_order_witness);
  nlohmann::json hist = nlohmann::json::object();
  for (const auto &[rank, count] : report.rank_histogram) hist[std::to_string(rank)] = count;
  j["rank_histogram"] = std::move(hist);

  auto path = dir / ("survey_" + to_string(report.graph) + "_n" + std::to_string(report.n) + ".json");
  std::ofstream out(path);
  out << j.dump(2) << '\n';
  return path;
}

void write_tables_csv(const std::vector<SurveyReport> &reports, const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir / "tables");
  std::ofstream orders(dir / "tables" / "largest_order.csv");
  std::ofstream counts(dir / "tables" / "group_counts.csv");
  orders << "n,largest_order\n";
  counts << "n,distinct_groups\n";
  for (const SurveyReport &r : reports) {
    if (r.graph != GraphKind::star) continue;
    orders << r.n << "," << r.max_order.get_str() << "\n";
    counts << r.n << "," << r.distinct_groups.size() << "\n";
  }
}

std::filesystem::path write_appendix_diff(const SurveyReport &report, const FixtureTable &fixture,
                                          const std::filesystem::path &dir) {
  std::filesystem::create_directories(dir);
  FixtureDiff diff = compare_fixture(report, fixture);
  auto path = dir / ("appendix_diff_n" + std::to_string(report.n) + ".txt");
  std::ofstream out(path);
  out << "n = " << report.n << ": computed " << report.distinct_groups.size()
      << " groups, fixture " << fixture.groups.size() << " (from " << fixture.tuples_transcribed
      << " transcribed tuples)\n";
  out << diff.str();
  return path;
}

}  // namespace starcrit
