#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "snlu/datagen.hpp"
#include "snlu/errors.hpp"
#include "snlu/experiments.hpp"
#include "snlu/log.hpp"
#include "snlu/pipeline.hpp"

namespace fs = std::filesystem;
using namespace snlu;

namespace {

template <typename T>
std::vector<T> parse_list(const std::string& csv) {
  std::vector<T> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::istringstream in(item);
    T v;
    if (!(in >> v) || !in.eof()) throw ConfigError("bad list element: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw ConfigError("empty list: " + csv);
  return out;
}

void write_history(const fs::path& path, const std::vector<EpochStats>& history) {
  std::ofstream out(path);
  out << "epoch,train_loss,train_acc,val_loss,val_acc\n";
  for (const auto& s : history) out << s.csv() << '\n';
}

std::string metrics_row(const EvalResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f", r.intent.precision, r.intent.recall,
                r.intent.f1, r.intent.accuracy, r.slots.precision, r.slots.recall, r.slots.f1);
  return buf;
}

nlohmann::json default_engine_config(const GeneratedCorpus& corpus, std::uint64_t seed) {
  PipelineConfig cfg;
  cfg.dataset = "dataset.jsonl";
  cfg.gazetteer = "gazetteer.tsv";
  cfg.taxonomy = "taxonomy.json";
  cfg.rules = "rules.json";
  cfg.groups = corpus.groups.to_json(corpus.dataset.taxonomy);
  cfg.seed = seed;
  return cfg.to_json();
}

int predict_line(const Pipeline& p, const std::string& text) {
  const PipelineOutput out = p.run(RawQuery(text));
  std::cout << output_to_json(out, p.resources().taxonomy).dump() << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  log::init_from_env();
  CLI::App app{"Staged intent classification and slot tagging engine"};
  app.require_subcommand(1);

  std::uint64_t seed = 7;
  std::string out_path, config_path, bundle_path, text, bias_values = "0,0.05,0.1,0.15,0.2,0.25", seeds = "1,2,3";
  double entity_typos = 0.0;
  std::size_t limit = 0;
  bool seed_given = false;

  auto* gen = app.add_subcommand("gen-data", "write a synthetic dataset, gazetteer, taxonomy, rules and config");
  gen->add_option("--seed", seed, "generator seed");
  gen->add_option("--out", out_path, "output directory")->required();
  gen->add_option("--entity-typos", entity_typos, "probability of one typo per entity surface form");

  auto* train_cmd = app.add_subcommand("train", "train both models and write a bundle");
  train_cmd->add_option("--config", config_path, "engine config JSON")->required();
  train_cmd->add_option("--out", out_path, "bundle file (or directory for model.snlu)")->required();
  train_cmd->add_option("--seed", seed, "overrides the config seed")->each([&](const std::string&) { seed_given = true; });
  train_cmd->add_option("--limit", limit, "cap on training examples");

  auto* eval_cmd = app.add_subcommand("eval", "print test-split metrics as CSV");
  eval_cmd->add_option("--config", config_path, "engine config JSON")->required();
  eval_cmd->add_option("--bundle", bundle_path, "trained bundle")->required();

  auto* predict_cmd = app.add_subcommand("predict", "run one query");
  predict_cmd->add_option("--bundle", bundle_path, "trained bundle")->required();
  predict_cmd->add_option("--text", text, "query text")->required();
  predict_cmd->add_option("--config", config_path, "accepted for symmetry; the bundle carries its config");

  auto* repl_cmd = app.add_subcommand("repl", "one JSON output per stdin line");
  repl_cmd->add_option("--bundle", bundle_path, "trained bundle")->required();
  repl_cmd->add_option("--config", config_path, "accepted for symmetry; the bundle carries its config");

  auto* sweep_cmd = app.add_subcommand("bias-sweep", "subcategory accuracy per bias value and seed");
  sweep_cmd->add_option("--config", config_path, "engine config JSON")->required();
  sweep_cmd->add_option("--bias-values", bias_values, "comma-separated bias fractions");
  sweep_cmd->add_option("--seeds", seeds, "comma-separated seeds");
  sweep_cmd->add_option("--out", out_path, "output directory")->required();
  sweep_cmd->add_option("--limit", limit, "cap on training examples");

  auto* ablate_cmd = app.add_subcommand("ablate", "final engine against its NER and substitution ablations");
  ablate_cmd->add_option("--config", config_path, "engine config JSON")->required();
  ablate_cmd->add_option("--seeds", seeds, "comma-separated seeds");
  ablate_cmd->add_option("--out", out_path, "output directory")->required();
  ablate_cmd->add_option("--limit", limit, "cap on training examples");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (gen->parsed()) {
      GenSpec spec;
      spec.seed = seed;
      spec.entity_typo_rate = entity_typos;
      const GeneratedCorpus corpus = generate(spec);
      write_corpus(corpus, out_path);
      std::ofstream(fs::path(out_path) / "config.json") << default_engine_config(corpus, seed).dump(2) << '\n';
      log::info("wrote " + std::to_string(corpus.dataset.size()) + " examples to " + out_path);
      return 0;
    }
    if (predict_cmd->parsed()) return predict_line(load_bundle(bundle_path), text);
    if (repl_cmd->parsed()) {
      const Pipeline p = load_bundle(bundle_path);
      std::string line;
      while (std::getline(std::cin, line)) {
        try {
          predict_line(p, line);
        } catch (const Error& e) {
          std::cout << nlohmann::json{{"error", e.what()}}.dump() << std::endl;
        }
      }
      return 0;
    }

    PipelineConfig cfg = load_pipeline_config(config_path);
    if (seed_given) cfg.seed = seed;
    if (limit > 0) cfg.limit = limit;
    const Resources res = load_resources(cfg);
    const Dataset dataset = load_dataset(cfg.dataset, res.taxonomy);

    if (train_cmd->parsed()) {
      fs::path bundle = out_path;
      if (fs::is_directory(bundle)) bundle /= "model.snlu";
      const TrainedPipeline t = train_pipeline(cfg, res, dataset);
      save_bundle(t.pipeline, bundle);
      write_history(fs::path(bundle.string() + ".category.csv"), t.category.history);
      write_history(fs::path(bundle.string() + ".subcategory.csv"), t.subcategory.history);
      log::info("wrote " + bundle.string());
      return 0;
    }
    if (eval_cmd->parsed()) {
      const Pipeline p = load_bundle(bundle_path);
      const DatasetSplit split = split_dataset(dataset, p.config().seed);
      std::cout << "int_p,int_r,int_f1,int_acc,slot_p,slot_r,slot_f1\n"
                << metrics_row(evaluate(p, split.test.examples)) << '\n';
      return 0;
    }
    fs::create_directories(out_path);
    if (sweep_cmd->parsed()) {
      const BiasSweep sweep = bias_sweep(cfg, res, dataset, parse_list<double>(bias_values),
                                         parse_list<std::uint64_t>(seeds));
      std::ofstream csv(fs::path(out_path) / "bias_sweep.csv");
      write_bias_csv(sweep, csv);
      for (const auto& s : sweep.summary) std::printf("bias %.2f: %.4f +- %.4f\n", s.bias, s.mean, s.sd);
      return 0;
    }
    if (ablate_cmd->parsed()) {
      const Ablation ab = ablation_run(cfg, res, dataset, parse_list<std::uint64_t>(seeds));
      std::ofstream csv(fs::path(out_path) / "ablation.csv");
      write_ablation_csv(ab, csv);
      write_ablation_csv(ab, std::cout);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
