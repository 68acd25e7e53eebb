// adlv: class catalogs, single queries, surveys, rank-2 figures and the result cache.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "adlv/survey.hpp"

using namespace adlv;
using nlohmann::json;

namespace {

struct DatumArgs {
  std::string type = "A";
  int rank = 2;
  std::string variant = "sc";
};

void add_datum(CLI::App* app, DatumArgs& d) {
  app->add_option("--type", d.type, "root system type (A, B, C, D, G, GL)")->capture_default_str();
  app->add_option("--rank", d.rank, "rank")->capture_default_str();
  app->add_option("--variant", d.variant, "sc, adjoint or GL")->capture_default_str();
}

DatumPtr make_datum(const DatumArgs& d) {
  Variant v = d.type == "GL" ? Variant::GL : parse_variant(d.variant);
  return RootDatum::build(d.type, d.rank, v);
}

std::string default_cache_dir() {
  if (const char* e = std::getenv("ADLV_CACHE_DIR")) return e;
  return "";
}

int default_jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

json class_json(const RootDatum& R, const SigmaClass& c) {
  json j;
  j["key"] = class_key(R, c);
  std::vector<std::string> nu;
  for (const auto& q : R.display(c.nu)) nu.push_back(q_str(q));
  j["nu"] = nu;
  j["kappa"] = kappa_text(c.kappa);
  j["basic"] = c.basic(R);
  j["two_rho_nu"] = q_str(R.pair_two_rho(c.nu));
  j["standard_representative"] = to_text(R, c.std_rep);
  FundamentalRep f = fundamental_representative(R, c);
  j["fundamental_representative"] = to_text(R, f.x);
  j["fundamental_parabolic"] = parabolic_label(R, f.P);
  j["defect"] = defect(R, c);
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine Deligne-Lusztig varieties in the affine flag variety"};
  app.require_subcommand(1);
  DatumArgs d;
  std::string cls = "nu=[0];kappa=0", format = "json", output, cache_dir = default_cache_dir(), x_text;
  int bound = 4, max_len = 6, cutoff = -1, jobs = default_jobs();
  bool check = false;

  auto* classes = app.add_subcommand("classes", "list sigma-conjugacy classes with <2rho,nu> <= bound");
  add_datum(classes, d);
  classes->add_option("--bound", bound)->capture_default_str();
  classes->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto* query = app.add_subcommand("query", "one element x against one class");
  add_datum(query, d);
  query->add_option("--x", x_text, "element, e.g. 't[1,0,-1]*s1' or 's0 s1 s2'")->required();
  query->add_option("--class", cls, "class key 'nu=[..];kappa=k' or 'elt:<element>'")->required();
  query->add_option("--cutoff", cutoff);
  query->add_option("--jobs", jobs);

  auto* survey = app.add_subcommand("survey", "all x up to a length in the component of the class");
  add_datum(survey, d);
  survey->add_option("--class", cls)->required();
  survey->add_option("--max-len", max_len)->capture_default_str();
  survey->add_option("--cutoff", cutoff);
  survey->add_option("--jobs", jobs);
  survey->add_option("--cache-dir", cache_dir, "defaults to $ADLV_CACHE_DIR");
  survey->add_flag("--check", check, "exit with status 2 on any disagreement with a prediction");

  auto* figure = app.add_subcommand("figure", "rank-2 picture of nonempty alcoves and dimensions");
  add_datum(figure, d);
  figure->add_option("--class", cls)->required();
  figure->add_option("--max-len", max_len)->capture_default_str();
  figure->add_option("--cutoff", cutoff);
  figure->add_option("--format", format, "svg or tsv")->check(CLI::IsMember({"svg", "tsv"}));
  figure->add_option("--output,-o", output, "file (default stdout)");

  auto* cache = app.add_subcommand("cache", "inspect or maintain the result cache");
  std::string action = "stats";
  cache->add_option("action", action, "stats, compact or clear")->check(CLI::IsMember({"stats", "compact", "clear"}));
  cache->add_option("--cache-dir", cache_dir, "defaults to $ADLV_CACHE_DIR");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    SolveOptions opt{cutoff, jobs, true};
    if (*classes) {
      auto R = make_datum(d);
      auto cs = enumerate_classes(*R, bound);
      if (format == "tsv") {
        std::cout << "key\tbasic\tdefect\tstandard\tfundamental\tparabolic\n";
        for (const auto& c : cs) {
          json j = class_json(*R, c);
          std::cout << j["key"].get<std::string>() << "\t" << (c.basic(*R) ? 1 : 0) << "\t" << j["defect"] << "\t"
                    << j["standard_representative"].get<std::string>() << "\t"
                    << j["fundamental_representative"].get<std::string>() << "\t"
                    << j["fundamental_parabolic"].get<std::string>() << "\n";
        }
      } else {
        json out = {{"schema_version", kSchemaVersion}, {"datum", R->label()}, {"bound", bound}, {"classes", json::array()}};
        for (const auto& c : cs) out["classes"].push_back(class_json(*R, c));
        std::cout << out.dump(2) << "\n";
      }
      return 0;
    }
    if (*query) {
      auto R = make_datum(d);
      Elt x = parse_elt(*R, x_text);
      SigmaClass c = parse_class(*R, cls);
      std::cout << record_json(*R, make_record(*R, x, c, opt)).dump(2) << "\n";
      return 0;
    }
    if (*survey) {
      auto R = make_datum(d);
      SigmaClass c = parse_class(*R, cls);
      std::unique_ptr<ResultCache> store;
      if (!cache_dir.empty()) store = std::make_unique<ResultCache>(cache_dir);
      SurveySummary s = run_survey(*R, c, max_len, opt, store.get(),
                                   [](const json& j) { std::cout << j.dump() << "\n"; });
      json sj = summary_json(s);
      sj["summary"]["datum"] = R->label();
      sj["summary"]["class_key"] = class_key(*R, c);
      sj["summary"]["max_len"] = max_len;
      std::cout << sj.dump() << "\n";
      std::cerr << "records " << s.records << ", cache hits " << s.cache_hits << "\n";
      if (check && (s.shrunken_disagree || s.palcove_disagree)) return 2;
      return 0;
    }
    if (*figure) {
      auto R = make_datum(d);
      SigmaClass c = parse_class(*R, cls);
      auto cells = figure_cells(*R, c, max_len, opt);
      std::string text = format == "tsv" ? figure_tsv(*R, cells) : figure_svg(*R, cells);
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(output);
        f << text;
      }
      return 0;
    }
    if (*cache) {
      if (cache_dir.empty()) {
        std::cerr << "no cache directory (use --cache-dir or ADLV_CACHE_DIR)\n";
        return 1;
      }
      ResultCache store(cache_dir);
      if (action == "compact") store.compact();
      if (action == "clear") store.clear();
      std::cout << json{{"file", store.file().string()}, {"entries", store.size()}, {"skipped", store.skipped()},
                        {"engine_version", kEngineVersion}}
                       .dump()
                << "\n";
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
