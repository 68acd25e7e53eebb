#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "adlv/adlv_engine.hpp"

namespace adlv {

constexpr int kSchemaVersion = 1;

struct SurveyRecord {
  Elt x;
  int length = 0;
  bool shrunken = false;
  int eta1 = 0;
  std::optional<int> eta2;
  SigmaClass cls;
  std::string class_key;
  AdlvResult computed;
  bool bruhat_geq_b = false;  // x >= standard representative
  bool no_p_alcove = false;   // x is a P-alcove for no proper semistandard P
  std::optional<Prediction> shrunken_rule;
  std::optional<Prediction> palcove;
};

// true / false, or nothing when the computed status is not definite or no
// prediction applies
std::optional<bool> agrees_shrunken(const SurveyRecord& r);
std::optional<bool> agrees_palcove(const SurveyRecord& r);

SurveyRecord make_record(const RootDatum& R, const Elt& x, const SigmaClass& c, const SolveOptions& opt = {});
nlohmann::json record_json(const RootDatum& R, const SurveyRecord& r);

// Append-only JSON-lines store.  Entries carry the engine version; entries of
// another version and unparsable lines are ignored.
class ResultCache {
 public:
  explicit ResultCache(std::filesystem::path dir);
  const std::filesystem::path& file() const { return file_; }
  std::optional<nlohmann::json> get(const std::string& key) const;
  void put(const std::string& key, const nlohmann::json& value);
  size_t size() const;
  size_t skipped() const { return skipped_; }
  // rewrite the file with one line per live key (temp file + rename)
  void compact();
  void clear();

 private:
  void load();
  std::filesystem::path file_;
  std::map<std::string, nlohmann::json> entries_;
  size_t skipped_ = 0;
  mutable std::mutex mu_;
};

std::string datum_key(const RootDatum& R);
// FNV-1a of the canonical argument string, hex
std::string cache_key(const RootDatum& R, const std::string& op, const std::string& args);

struct SurveySummary {
  long records = 0, nonempty = 0, certified_empty = 0, undetermined = 0;
  long shrunken_checked = 0, shrunken_disagree = 0;
  long palcove_checked = 0, palcove_disagree = 0;
  long cache_hits = 0;
};

// One record per x with l(x) <= max_len in the Omega-component of c, ordered
// by length and then by reduced word.  The callback receives records in order.
SurveySummary run_survey(const RootDatum& R, const SigmaClass& c, int max_len, const SolveOptions& opt,
                         ResultCache* cache, const std::function<void(const nlohmann::json&)>& emit);
nlohmann::json summary_json(const SurveySummary& s);

// the elements x = y tau, y in the affine Weyl group, eta_G(tau) = kappa
std::vector<Elt> component_ball(const RootDatum& R, const LamElt& kappa, int max_len);

struct FigureCell {
  Elt x;
  std::string word;
  Status status;
  int dim;
  bool shrunken;
};
std::vector<FigureCell> figure_cells(const RootDatum& R, const SigmaClass& c, int max_len, const SolveOptions& opt);
std::string figure_tsv(const RootDatum& R, const std::vector<FigureCell>& cells);
std::string figure_svg(const RootDatum& R, const std::vector<FigureCell>& cells);

}  // namespace adlv
