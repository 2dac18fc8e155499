// Acceptance runner: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails. SNLU_ACCEPTANCE_ONLY=1,3 limits the run.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>

#include "snlu/datagen.hpp"
#include "snlu/experiments.hpp"
#include "snlu/log.hpp"
#include "support.hpp"

using namespace snlu;
namespace fs = std::filesystem;
namespace t = snlu::testing;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

int shell(const std::string& cmd, std::string* out = nullptr) {
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return -1;
  char buf[4096];
  std::string text;
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) text.append(buf, n);
  const int status = pclose(pipe);
  if (out) *out = text;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string cli(const std::string& args) { return std::string(SNLU_CLI) + " " + args; }

const fs::path& workdir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "snlu_acceptance";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

PipelineConfig engine_config(const GeneratedCorpus& corpus) {
  PipelineConfig cfg;
  cfg.groups = corpus.groups.to_json(corpus.dataset.taxonomy);
  return cfg;
}

Resources resources_of(const GeneratedCorpus& corpus) {
  return {corpus.dataset.taxonomy, corpus.gazetteer, corpus.groups, corpus.rules};
}

bool same_output(const PipelineOutput& a, const PipelineOutput& b) {
  if (a.category != b.category || a.subcategory != b.subcategory || a.subcategory_source != b.subcategory_source ||
      a.category_probs != b.category_probs || a.slots.size() != b.slots.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.slots.size(); ++i) {
    const auto &x = a.slots[i], &y = b.slots[i];
    if (x.span != y.span || x.type != y.type || x.surface != y.surface || x.tier != y.tier || x.score != y.score) {
      return false;
    }
  }
  return true;
}

// ---- 1 ---------------------------------------------------------------------

Outcome gradient_correctness() {
  const auto start = Clock::now();
  std::vector<std::pair<std::string, GradCheckReport>> reports = {
      {"embedding", t::check_embedding(1)},
      {"lstm", t::check_lstm(1)},
      {"bilstm", t::check_bilstm(1)},
      {"attention", t::check_attention(1)},
      {"attention_masked", t::check_attention(1, {true, false, true, true})},
      {"dense_selu", t::check_dense(1, nn::Activation::Selu)},
      {"dense_softmax", t::check_dense(1, nn::Activation::Softmax)},
      {"softmax_cross_entropy", t::check_softmax_cross_entropy(1)},
      {"category_model", t::check_model(ModelConfig::category_model(), 1)},
      {"subcategory_model", t::check_model(ModelConfig::subcategory_model(), 1)},
  };
  const double elapsed = seconds_since(start);
  double worst = 0.0;
  std::string where;
  for (const auto& [name, r] : reports) {
    if (r.max_relative_error >= worst) {
      worst = r.max_relative_error;
      where = name + "/" + r.worst_parameter;
    }
  }
  return {worst <= 1e-4 && elapsed < 60.0,
          fmt("max relative error %.3g at %s (tolerance 1e-4), %.1f s (limit 60 s)", worst, where.c_str(), elapsed)};
}

// ---- 2 ---------------------------------------------------------------------

Outcome oracle_equivalence() {
  Rng rng(2);
  std::size_t intent_bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int classes = 1 + static_cast<int>(rng.below(6));
    std::vector<int> pred, gold;
    for (std::size_t i = 0, n = 1 + rng.below(50); i < n; ++i) {
      gold.push_back(static_cast<int>(rng.below(classes)));
      pred.push_back(static_cast<int>(rng.below(classes)));
    }
    const auto m = intent_metrics(pred, gold);
    const auto o = t::oracle_intent(pred, gold);
    bool ok = std::abs(m.precision - o.precision) <= 1e-12 && std::abs(m.recall - o.recall) <= 1e-12 &&
              std::abs(m.f1 - o.f1) <= 1e-12 && std::abs(m.accuracy - o.accuracy) <= 1e-12;
    for (const auto& c : m.per_class) {
      const auto& oc = o.per_class.at(c.id);
      ok = ok && std::abs(c.precision - oc[0]) <= 1e-12 && std::abs(c.recall - oc[1]) <= 1e-12;
    }
    intent_bad += !ok;
  }

  std::size_t sim_bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto a = t::random_u32(rng, U"abcdefg ïé", 0, 16);
    const auto b = t::random_u32(rng, U"abcdefg ïé", 0, 16);
    sim_bad += similarity(a, b) != t::oracle_similarity(a, b);
  }

  // Every pair of non-overlapping slot sets on sentences of one-character
  // tokens, up to six tokens.
  std::size_t slot_pairs = 0, slot_bad = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::size_t chars = 2 * n - 1;
    const int types = n <= 4 ? 2 : 1;
    std::vector<CharSpan> spans;
    for (std::size_t s = 0; s < chars; s += 2) {
      for (std::size_t e = s + 1; e <= chars; e += 2) spans.push_back({s, e});
    }
    std::vector<std::vector<SlotLabel>> sets;
    std::vector<SlotLabel> current;
    std::function<void(std::size_t)> rec = [&](std::size_t from) {
      sets.push_back(current);
      for (std::size_t i = from; i < spans.size(); ++i) {
        bool clash = false;
        for (const auto& c : current) clash = clash || c.span.overlaps(spans[i]);
        if (clash) continue;
        for (int ty = 0; ty < types; ++ty) {
          current.push_back({spans[i], ty});
          rec(i + 1);
          current.pop_back();
        }
      }
    };
    rec(0);
    for (const auto& p : sets) {
      for (const auto& g : sets) {
        const std::vector<std::vector<SlotLabel>> pv = {p}, gv = {g};
        const auto m = slot_chunk_f1(pv, gv);
        const auto o = t::oracle_slots(pv, gv, chars, types);
        slot_bad += m.true_positives != o.true_positives || m.false_positives != o.false_positives ||
                    m.false_negatives != o.false_negatives || std::abs(m.f1 - o.f1) > 1e-12;
        ++slot_pairs;
      }
    }
  }
  return {intent_bad == 0 && sim_bad == 0 && slot_bad == 0,
          fmt("intent mismatches %zu/200, similarity mismatches %zu/10000, slot mismatches %zu/%zu", intent_bad,
              sim_bad, slot_bad, slot_pairs)};
}

// ---- 3 ---------------------------------------------------------------------

Outcome tier_monotonicity() {
  Rng rng(3);
  const TierThresholds tiers;
  const std::vector<std::string> types = {"a", "b", "c"};
  const std::vector<int> all = {0, 1, 2};
  std::size_t violations = 0, candidates = 0;
  auto windows = [](const std::vector<EntityMatch>& ms) {
    std::set<std::pair<std::size_t, std::size_t>> out;
    for (const auto& m : ms) out.insert({m.start_tok, m.end_tok});
    return out;
  };
  for (int trial = 0; trial < 1000; ++trial) {
    Gazetteer g(types);
    for (std::size_t p = 0, n = 1 + rng.below(6); p < n; ++p) {
      std::string phrase = t::random_word(rng, "abcde", 2, 8);
      if (rng.bernoulli(0.4)) phrase += " " + t::random_word(rng, "abcde", 2, 6);
      g.add(phrase, static_cast<int>(rng.below(3)));
    }
    std::string text;
    for (std::size_t w = 0, n = 1 + rng.below(7); w < n; ++w) text += t::random_word(rng, "abcde", 1, 8) + " ";
    auto planted = g.phrases()[rng.below(g.size())].text;
    if (rng.bernoulli(0.7)) planted[rng.below(planted.size())] = "abcde"[rng.below(5)];
    text += planted;
    const auto q = tokenize(RawQuery(text));
    const auto c1 = windows(match_candidates(q, g, tiers.tier(1), all));
    const auto c2 = windows(match_candidates(q, g, tiers.tier(2), all));
    const auto c3 = windows(match_candidates(q, g, tiers.tier(3), all));
    for (const auto& w : c1) violations += !c2.contains(w);
    for (const auto& w : c2) violations += !c3.contains(w);
    candidates += c3.size();
  }
  return {violations == 0, fmt("%zu violations over 1000 pairs (%zu tier-3 candidate windows)", violations, candidates)};
}

// ---- 4 ---------------------------------------------------------------------

Outcome ablation_ordering() {
  GenSpec spec;
  spec.entity_typo_rate = 0.25;
  const auto corpus = generate(spec);
  auto cfg = engine_config(corpus);
  cfg.limit = 4000;
  const auto start = Clock::now();
  const auto ab = ablation_run(cfg, resources_of(corpus), corpus.dataset, {1, 2, 3});
  const double per_variant_min = seconds_since(start) / 60.0 / 3.0;
  auto slot_f1 = [](const EvalResult& r) { return r.slots.f1; };
  auto int_acc = [](const EvalResult& r) { return r.intent.accuracy; };
  const double final_slot = median(ab.metric(kFinalVariant, slot_f1));
  const double single_slot = median(ab.metric(kSingleTierVariant, slot_f1));
  const double final_acc = median(ab.metric(kFinalVariant, int_acc));
  const double nosub_acc = median(ab.metric(kNoSubstitutionVariant, int_acc));
  bool shared = true;
  for (const auto& r : ab.rows) {
    for (const auto& o : ab.rows) shared = shared && (r.seed != o.seed || r.test_ids == o.test_ids);
  }
  std::ostringstream csv;
  write_ablation_csv(ab, csv);
  std::cout << csv.str();
  const bool pass = final_slot - single_slot >= 0.03 && final_acc - nosub_acc >= 0.02 && shared &&
                    per_variant_min < 30.0;
  return {pass, fmt("median slot F1 final %.4f vs single-tier %.4f (gap %.4f, need >= 0.03); median intent acc final "
                    "%.4f vs no-substitution %.4f (gap %.4f, need >= 0.02); shared splits %s; %.1f min per variant "
                    "(limit 30)",
                    final_slot, single_slot, final_slot - single_slot, final_acc, nosub_acc, final_acc - nosub_acc,
                    shared ? "yes" : "no", per_variant_min)};
}

// ---- 5 ---------------------------------------------------------------------

Outcome bias_trend() {
  const auto corpus = generate(GenSpec{});
  const auto sweep = bias_sweep(engine_config(corpus), resources_of(corpus), corpus.dataset, {0.0, 0.10}, {1, 2, 3});
  const auto biased = sweep.accuracies(0.10), plain = sweep.accuracies(0.0);
  const double p = significance(biased, plain);
  std::ostringstream csv;
  write_bias_csv(sweep, csv);
  std::cout << csv.str();
  return {sweep.summary[1].mean >= sweep.summary[0].mean,
          fmt("mean accuracy bias 0.10 %.4f (sd %.4f) vs bias 0 %.4f (sd %.4f); one-sided Welch p = %.4f",
              sweep.summary[1].mean, sweep.summary[1].sd, sweep.summary[0].mean, sweep.summary[0].sd, p)};
}

// ---- 6, 7, 8 ---------------------------------------------------------------

struct SharedRun {
  fs::path data;
  fs::path bundle_a;
};

SharedRun& shared_run() {
  static SharedRun r;
  return r;
}

Outcome determinism() {
  const auto a = workdir() / "gen_a", b = workdir() / "gen_b";
  if (shell(cli("gen-data --seed 7 --out " + a.string())) != 0 || shell(cli("gen-data --seed 7 --out " + b.string())) != 0) {
    return {false, "gen-data failed"};
  }
  std::size_t differing = 0;
  for (const char* f : {"dataset.jsonl", "gazetteer.tsv", "taxonomy.json", "rules.json", "config.json"}) {
    differing += read_file(a / f) != read_file(b / f);
  }
  shared_run().data = a;
  const auto ba = workdir() / "a.snlu", bb = workdir() / "b.snlu";
  const std::string config = (a / "config.json").string();
  if (shell(cli("train --config " + config + " --out " + ba.string())) != 0 ||
      shell(cli("train --config " + config + " --out " + bb.string())) != 0) {
    return {false, "train failed"};
  }
  shared_run().bundle_a = ba;
  const auto bytes_a = read_file(ba), bytes_b = read_file(bb);
  auto trailer = [](const std::string& s) {
    std::uint32_t crc = 0;
    std::memcpy(&crc, s.data() + s.size() - 4, 4);
    return crc;
  };
  const bool same_crc = trailer(bytes_a) == trailer(bytes_b);
  return {differing == 0 && same_crc && bytes_a == bytes_b,
          fmt("gen-data files differing %zu/5; bundle checksums %08x and %08x; bundles byte-identical %s", differing,
              trailer(bytes_a), trailer(bytes_b), bytes_a == bytes_b ? "yes" : "no")};
}

std::optional<TrainedPipeline> g_trained;

Outcome persistence() {
  if (shared_run().data.empty()) return {false, "needs the data written by criterion 6"};
  const auto cfg = load_pipeline_config(shared_run().data / "config.json");
  const auto res = load_resources(cfg);
  const auto dataset = load_dataset(cfg.dataset, res.taxonomy);
  g_trained.emplace(train_pipeline(cfg, res, dataset));
  const Pipeline& before = g_trained->pipeline;
  const auto path = workdir() / "c.snlu";
  save_bundle(before, path);
  const Pipeline after = load_bundle(path);

  // Half held-out queries, half random word soup with misspellings.
  Rng rng(7);
  std::vector<std::string> queries;
  const auto& test = g_trained->split.test.examples;
  for (int i = 0; i < 50; ++i) queries.push_back(test[rng.below(test.size())].raw.text());
  std::vector<std::string> words;
  for (const auto& ex : test) {
    for (const auto& tok : tokenize(ex.raw).tokens) words.push_back(tok);
  }
  while (queries.size() < 100) {
    std::string q;
    for (std::size_t k = 0, n = 1 + rng.below(10); k < n; ++k) {
      auto w = rng.pick(words);
      if (rng.bernoulli(0.2)) w = apply_typo(w, rng);
      q += w + " ";
    }
    queries.push_back(q);
  }
  std::size_t equal = 0;
  for (const auto& q : queries) equal += same_output(before.run(RawQuery(q)), after.run(RawQuery(q)));
  const bool matches_cli = !shared_run().bundle_a.empty() && read_file(path) == read_file(shared_run().bundle_a);
  return {equal == queries.size(),
          fmt("%zu/%zu queries identical after save and load; in-process bundle equals CLI bundle: %s", equal,
              queries.size(), matches_cli ? "yes" : "no")};
}

Outcome smoke() {
  if (!g_trained) return {false, "needs the pipeline trained for criterion 7"};
  const std::string query = "Show me some colleges near Mumbai for B. Tech.";
  const Pipeline& p = g_trained->pipeline;
  const auto& tax = p.resources().taxonomy;
  const auto out = p.run(RawQuery(query));
  bool city = false, degree = false;
  for (const auto& s : out.slots) {
    city = city || (tax.entity_type_name(s.type) == "city" && s.surface == "Mumbai");
    degree = degree || (tax.entity_type_name(s.type) == "degree" && s.surface == "B. Tech");
  }
  bool stable = true;
  for (int i = 0; i < 5; ++i) stable = stable && p.run(RawQuery(query)).category == out.category;
  std::string cli_category = "n/a";
  if (!shared_run().bundle_a.empty()) {
    std::string text;
    if (shell(cli("predict --bundle " + shared_run().bundle_a.string() + " --text \"" + query + "\"") + " 2>/dev/null",
              &text) == 0) {
      cli_category = nlohmann::json::parse(text)["category"].get<std::string>();
    }
    stable = stable && cli_category == tax.category_name(out.category);
  }
  return {city && degree && stable,
          fmt("city slot %s, degree slot %s, category %s (repeat runs and CLI bundle agree: %s)", city ? "yes" : "no",
              degree ? "yes" : "no", tax.category_name(out.category).c_str(), stable ? "yes" : "no")};
}

}  // namespace

int main() {
  log::init_from_env();
  std::set<int> only;
  if (const char* env = std::getenv("SNLU_ACCEPTANCE_ONLY")) {
    std::stringstream s(env);
    for (std::string item; std::getline(s, item, ',');) only.insert(std::stoi(item));
  }
  const std::vector<std::tuple<int, std::string, Outcome (*)()>> criteria = {
      {1, "gradient correctness", gradient_correctness},
      {2, "oracle equivalence", oracle_equivalence},
      {3, "tier monotonicity", tier_monotonicity},
      {6, "determinism", determinism},
      {7, "persistence round trip", persistence},
      {8, "end-to-end smoke", smoke},
      {4, "ablation ordering", ablation_ordering},
      {5, "bias sweep trend", bias_trend},
  };
  std::vector<std::string> lines;
  int failures = 0;
  for (const auto& [id, name, fn] : criteria) {
    if (!only.empty() && !only.contains(id)) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const std::string line = fmt("%s criterion %d (%s): %s [%.0f s]", o.pass ? "PASS" : "FAIL", id, name.c_str(),
                                 o.detail.c_str(), seconds_since(start));
    std::cout << line << std::endl;
    lines.push_back(line);
    failures += !o.pass;
  }
  std::cout << "\nsummary\n";
  for (const auto& l : lines) std::cout << l << '\n';
  fs::remove_all(workdir());
  return failures == 0 ? 0 : 1;
}
