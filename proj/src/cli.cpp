#include "starcrit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <map>
#include <optional>

#include <CLI11.hpp>
#include <json.hpp>

#include "starcrit/construct.hpp"
#include "starcrit/critical.hpp"
#include "starcrit/enumerate.hpp"
#include "starcrit/json_io.hpp"
#include "starcrit/survey.hpp"

namespace starcrit::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::string default_out_dir() {
  if (const char *env = std::getenv("STARCRIT_OUT_DIR")) return env;
  return "out";
}

std::string default_fixture_dir() {
  if (const char *env = std::getenv("STARCRIT_FIXTURES")) return env;
  return "data/fixtures";
}

fs::path appendix_fixture_path(const std::string &dir, std::size_t n) {
  return fs::path(dir) / ("appendix_a_s" + std::to_string(n) + ".txt");
}

void print_structure_human(std::ostream &out, const DhatVector &dhat,
                           const FiniteAbelianGroup &group) {
  out << "dhat: " << join(dhat.entries(), ",") << "\n";
  out << "d0: " << dhat.d0().get_str() << "\n";
  out << "r0: " << dhat.r0().get_str() << "\n";
  out << "group: " << group.str() << "\n";
}

json structure_json(const DhatVector &dhat, const FiniteAbelianGroup &group) {
  json j = to_json(dhat);
  j["group"] = to_json(group);
  j["group_str"] = group.str();
  j["order"] = group.order().get_str();
  return j;
}

struct VerifyCounters {
  std::uint64_t checked = 0;
  std::uint64_t failed = 0;
};

VerifyCounters verify_oracle(std::size_t n, std::ostream &err) {
  VerifyCounters c;
  EnumSpec spec;
  spec.n = n;
  enumerate_structures(spec, [&](const DhatVector &dhat) {
    ++c.checked;
    CriticalGroupResult fast = critical_star(dhat);
    CriticalGroupResult oracle = critical_star_oracle(dhat);
    bool ok = fast.group == oracle.group;
    if (auto shortcut = critical_two_unit_r(dhat))
      ok = ok && shortcut->group == fast.group;
    if (dhat.d0() == 1 && dhat.entries().front() > 1) {
      // the complete-graph route must agree through the clique-star bijection
      ArithmeticalStructure complete = star_clique(dhat_to_structure(dhat));
      ok = ok && critical_complete(complete.d).group == fast.group;
      SnfResult s = snf(laplacian(complete));
      ok = ok && FiniteAbelianGroup::from_cyclic_orders(s.nontrivial()) == fast.group;
    }
    if (!ok) {
      ++c.failed;
      err << "oracle mismatch at d = " << join(dhat.entries(), ",") << "\n";
    }
    return true;
  });
  return c;
}

VerifyCounters verify_lemmas(std::size_t n, std::ostream &err) {
  VerifyCounters c;
  EnumSpec spec;
  spec.n = n;
  enumerate_structures(spec, [&](const DhatVector &dhat) {
    ++c.checked;
    CheckReport minors = verify_minor_lemmas(dhat);
    CheckReport primes = n >= 2 ? verify_lemma_primes(dhat) : CheckReport{};
    if (!minors.ok || !primes.ok) {
      ++c.failed;
      err << "lemma check failed at d = " << join(dhat.entries(), ",") << "\n"
          << minors.message() << primes.message();
    }
    return true;
  });
  return c;
}

VerifyCounters verify_order_formula(std::size_t n, std::ostream &err) {
  VerifyCounters c;
  EnumSpec spec;
  spec.n = n;
  enumerate_structures(spec, [&](const DhatVector &dhat) {
    ++c.checked;
    if (critical_order(dhat) != critical_star(dhat).order) {
      ++c.failed;
      err << "order formula mismatch at d = " << join(dhat.entries(), ",") << "\n";
    }
    return true;
  });
  return c;
}

int verify_appendix(std::size_t n, const std::string &fixture_dir, unsigned workers,
                    std::ostream &out, std::ostream &err) {
  fs::path file = appendix_fixture_path(fixture_dir, n);
  if (!fs::exists(file)) {
    err << "no appendix fixture for n = " << n << " at " << file.string() << "\n";
    return 1;
  }
  FixtureTable fixture = load_appendix_fixture(file, n);
  SurveyOptions opts;
  opts.workers = workers;
  SurveyReport report = run_survey(n, GraphKind::star, opts);
  FixtureDiff diff = compare_fixture(report, fixture);
  const std::size_t matched = fixture.groups.size() - diff.missing_from_computed.size();
  out << matched << "/" << fixture.groups.size() << " groups matched\n";
  if (!diff.empty()) {
    err << diff.str();
    return 1;
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
  CLI::App app{"critical groups of arithmetical structures on star and complete graphs"};
  app.require_subcommand(1);

  std::string format = "human";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"human", "json", "jsonl", "csv"}));

  // ---- compute ----
  auto *compute = app.add_subcommand("compute", "critical group of one structure");
  std::string star_list, complete_list;
  bool with_oracle = false;
  compute->add_option("--star", star_list, "comma-separated d-hat of a star structure");
  compute->add_option("--complete", complete_list, "comma-separated d-values on K_n");
  compute->add_flag("--oracle", with_oracle, "also run the Smith normal form oracle");

  // ---- enumerate ----
  auto *enumerate = app.add_subcommand("enumerate", "stream all structures on S_n");
  std::size_t enum_n = 0;
  std::string enum_d0;
  bool count_only = false;
  std::uint64_t max_results = 0;
  enumerate->add_option("--n", enum_n, "number of leaves")->required();
  enumerate->add_option("--d0", enum_d0, "restrict to one center d-value");
  enumerate->add_flag("--count-only", count_only, "print only the count");
  enumerate->add_option("--max", max_results, "stop after this many results");

  // ---- construct ----
  auto *construct = app.add_subcommand("construct", "explicit constructions");
  construct->require_subcommand(1);
  std::size_t cons_n = 0;
  std::string base_list, a_value, left_list, right_list, group_list;
  auto *sylv = construct->add_subcommand("sylvester", "trivial-group structure with d0 = 1");
  sylv->add_option("--n", cons_n, "number of leaves")->required();
  auto *da = construct->add_subcommand("da", "split the largest entry by a divisor a");
  da->add_option("--base", base_list, "base d-hat")->required();
  da->add_option("--a", a_value, "divisor of the largest entry")->required();
  auto *concat = construct->add_subcommand("concat", "concatenate two structures");
  concat->add_option("--left", left_list, "first d-hat")->required();
  concat->add_option("--right", right_list, "second d-hat")->required();
  auto *embed = construct->add_subcommand("embed", "embed a group into a star critical group");
  embed->add_option("--group", group_list, "cyclic orders of the group")->required();
  auto *dbl = construct->add_subcommand("double", "one more leaf, rank n-1");
  dbl->add_option("--base", base_list, "base d-hat")->required();
  auto *extremal = construct->add_subcommand("extremal", "conjectured extremal structures");
  extremal->add_option("--n", cons_n, "number of leaves")->required();

  // ---- survey ----
  auto *survey = app.add_subcommand("survey", "aggregate critical groups over an enumeration");
  std::size_t survey_n = 0, survey_upto = 0;
  std::string graph_name = "star";
  unsigned workers = 1;
  std::string out_dir = default_out_dir();
  std::string fixture_dir = default_fixture_dir();
  std::string checkpoint_dir;
  survey->add_option("--n", survey_n, "single n");
  survey->add_option("--upto", survey_upto, "run n = 2..N and write the tables");
  survey->add_option("--graph", graph_name, "star or complete")
      ->check(CLI::IsMember({"star", "complete"}));
  survey->add_option("--workers", workers, "worker threads");
  survey->add_option("--out", out_dir, "output directory");
  survey->add_option("--fixtures", fixture_dir, "fixture directory for appendix diffs");
  survey->add_option("--checkpoint", checkpoint_dir, "directory for resumable partials");

  // ---- verify ----
  auto *verify = app.add_subcommand("verify", "re-check the computational claims");
  verify->require_subcommand(1);
  std::size_t verify_n = 0;
  std::string vfixture_dir = default_fixture_dir();
  unsigned vworkers = 1;
  std::map<std::string, CLI::App *> vsub;
  for (const char *name : {"appendix", "oracle", "lemmas", "order", "starcomplete", "doubling", "all"}) {
    CLI::App *sc = verify->add_subcommand(name);
    sc->add_option("--n", verify_n, "number of leaves")->required();
    sc->add_option("--fixtures", vfixture_dir, "fixture directory");
    sc->add_option("--workers", vworkers, "worker threads");
    vsub[name] = sc;
  }

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::CallForHelp &e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError &e) {
    err << e.what() << "\n";
    return 2;
  }

  try {
    if (compute->parsed()) {
      if (star_list.empty() == complete_list.empty()) {
        err << "compute: exactly one of --star / --complete is required\n";
        return 2;
      }
      std::optional<DhatVector> dhat;
      CriticalGroupResult res = [&] {
        if (!star_list.empty()) {
          dhat = DhatVector(parse_bigint_list(star_list));
          return critical_star(*dhat);
        }
        return critical_complete(parse_bigint_list(complete_list));
      }();
      std::optional<CriticalGroupResult> oracle;
      if (with_oracle) {
        if (!dhat) {
          std::vector<BigInt> shifted;
          for (const BigInt &v : parse_bigint_list(complete_list)) shifted.push_back(v + 1);
          dhat = DhatVector(shifted);
        }
        oracle = critical_star_oracle(*dhat);
      }
      if (format == "json") {
        json j;
        j["result"] = to_json(res);
        if (!star_list.empty()) {
          j["input"] = to_json(*dhat);
          j["structure"] = to_json(dhat_to_structure(*dhat));
        } else {
          std::vector<BigInt> shifted;
          for (const BigInt &v : parse_bigint_list(complete_list)) shifted.push_back(v + 1);
          j["structure"] = to_json(star_clique(dhat_to_structure(DhatVector(shifted))));
        }
        if (oracle) j["oracle"] = to_json(*oracle);
        out << j.dump(2) << "\n";
      } else {
        if (oracle) {
          out << to_string(res.method) << ": " << res.group.str() << "\n";
          out << to_string(oracle->method) << ": " << oracle->group.str() << "\n";
        } else {
          out << res.group.str() << "\n";
        }
      }
      if (oracle && oracle->group != res.group) {
        err << "oracle disagrees with the formula\n";
        return 1;
      }
      return 0;
    }

    if (enumerate->parsed()) {
      EnumSpec spec;
      spec.n = enum_n;
      if (!enum_d0.empty()) spec.d0_filter = parse_bigint(enum_d0);
      if (max_results > 0) spec.max_results = max_results;
      if (count_only) {
        out << count_structures(spec) << "\n";
        return 0;
      }
      const bool csv = format == "csv";
      enumerate_structures(spec, [&](const DhatVector &dhat) {
        if (csv) {
          out << dhat.d0().get_str() << "," << dhat.r0().get_str() << ","
              << join(dhat.entries(), ",") << "\n";
        } else {
          out << to_json(dhat).dump() << "\n";
        }
        return true;
      });
      return 0;
    }

    if (construct->parsed()) {
      DhatVector result = [&]() -> DhatVector {
        if (sylv->parsed()) return sylvester_trivial(cons_n);
        if (da->parsed()) return d_a_expand(DhatVector(parse_bigint_list(base_list)),
                                            parse_bigint(a_value));
        if (concat->parsed())
          return concatenate(DhatVector(parse_bigint_list(left_list)),
                             DhatVector(parse_bigint_list(right_list)));
        if (embed->parsed()) return embed_group(parse_bigint_list(group_list)).dhat;
        if (dbl->parsed()) return double_structure(DhatVector(parse_bigint_list(base_list)));
        ExtremalCandidates ex = extremal_candidates(cons_n);
        return ex.order_maximizer ? *ex.order_maximizer : ex.cyclic_maximizer;
      }();
      FiniteAbelianGroup group = critical_star(result).group;
      json extra;
      if (da->parsed()) {
        auto law = d_a_group_law(DhatVector(parse_bigint_list(base_list)), parse_bigint(a_value));
        extra["law_holds"] = law.has_value();
      }
      if (extremal->parsed()) {
        ExtremalCandidates ex = extremal_candidates(cons_n);
        extra["cyclic_dhat"] = join(ex.cyclic_maximizer.entries(), ",");
        extra["cyclic_group"] = "Z/" + ex.cyclic_value.get_str();
        extra["order_value"] = ex.order_value.get_str();
      }
      if (embed->parsed()) {
        EmbedResult er = embed_group(parse_bigint_list(group_list));
        extra["ell"] = er.ell.get_str();
        extra["full_group"] = to_json(er.full_group);
      }
      if (format == "json") {
        json j = structure_json(result, group);
        for (auto &[k, v] : extra.items()) j[k] = v;
        out << j.dump(2) << "\n";
      } else {
        print_structure_human(out, result, group);
        for (auto &[k, v] : extra.items())
          out << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
      return 0;
    }

    if (survey->parsed()) {
      if ((survey_n == 0) == (survey_upto == 0)) {
        err << "survey: exactly one of --n / --upto is required\n";
        return 2;
      }
      GraphKind kind = graph_name == "star" ? GraphKind::star : GraphKind::complete;
      SurveyOptions opts;
      opts.workers = workers;
      if (!checkpoint_dir.empty()) opts.checkpoint_dir = checkpoint_dir;
      std::vector<SurveyReport> reports;
      const std::size_t lo = survey_upto ? 2 : survey_n;
      const std::size_t hi = survey_upto ? survey_upto : survey_n;
      for (std::size_t n = lo; n <= hi; ++n) {
        SurveyReport rep = run_survey(n, kind, opts);
        write_survey_json(rep, out_dir);
        fs::path fixture = appendix_fixture_path(fixture_dir, n);
        if (kind == GraphKind::star && fs::exists(fixture))
          write_appendix_diff(rep, load_appendix_fixture(fixture, n), out_dir);
        out << "n=" << n << " " << to_string(kind) << ": " << rep.structure_count
            << " structures, " << rep.distinct_groups.size() << " groups, max order "
            << rep.max_order.get_str() << " at d = " << join(rep.max_order_witness, ",") << "\n";
        reports.push_back(std::move(rep));
      }
      if (survey_upto) write_tables_csv(reports, out_dir);
      return 0;
    }

    if (verify->parsed()) {
      SurveyOptions opts;
      opts.workers = vworkers;
      int rc = 0;
      auto report = [&](const std::string &what, const VerifyCounters &c) {
        out << what << ": " << (c.checked - c.failed) << "/" << c.checked << " ok\n";
        if (c.failed) rc = 1;
      };
      const bool all = vsub["all"]->parsed();
      if (all || vsub["oracle"]->parsed()) report("formula vs oracle", verify_oracle(verify_n, err));
      if (all || vsub["lemmas"]->parsed()) {
        if (!all || verify_n <= 5)
          report("minor and prime lemmas", verify_lemmas(verify_n, err));
      }
      if (all || vsub["order"]->parsed())
        report("order formula", verify_order_formula(verify_n, err));
      if (vsub["appendix"]->parsed() ||
          (all && fs::exists(appendix_fixture_path(vfixture_dir, verify_n)))) {
        int arc = verify_appendix(verify_n, vfixture_dir, vworkers, out, err);
        rc = std::max(rc, arc);
      }
      if (all || vsub["starcomplete"]->parsed()) {
        SetComparisonReport rep = verify_star_equals_complete(verify_n, opts);
        out << rep.message << "\n";
        if (!rep.equal) rc = 1;
      }
      if ((all && verify_n >= 3) || vsub["doubling"]->parsed()) {
        DoublingReport rep = verify_count_doubling(verify_n, opts);
        out << rep.message << "\n";
        if (!rep.ok) rc = 1;
      }
      return rc;
    }
  } catch (const std::invalid_argument &e) {
    err << e.what() << "\n";
    return 1;
  } catch (const std::exception &e) {
    err << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace starcrit::cli
