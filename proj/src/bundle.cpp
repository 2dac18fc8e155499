#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>

#include <zlib.h>

#include "snlu/errors.hpp"
#include "snlu/pipeline.hpp"

namespace snlu {
namespace {

static_assert(std::endian::native == std::endian::little, "bundle I/O assumes a little-endian host");

constexpr char kMagic[4] = {'S', 'N', 'L', 'U'};

template <typename T>
void put(std::string& out, T v) {
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  out.append(buf, sizeof(T));
}

class Reader {
 public:
  explicit Reader(std::string_view bytes) : bytes_(bytes) {}

  template <typename T>
  T get() {
    T v;
    std::memcpy(&v, take(sizeof(T)).data(), sizeof(T));
    return v;
  }

  std::string_view take(std::size_t n) {
    if (n > bytes_.size() - pos_) throw CorruptFileError("bundle is truncated");
    auto s = bytes_.substr(pos_, n);
    pos_ += n;
    return s;
  }

  std::size_t remaining() const { return bytes_.size() - pos_; }

 private:
  std::string_view bytes_;
  std::size_t pos_ = 0;
};

std::uint32_t crc(std::string_view data) {
  return static_cast<std::uint32_t>(
      crc32(crc32(0L, Z_NULL, 0), reinterpret_cast<const Bytef*>(data.data()), static_cast<uInt>(data.size())));
}

nlohmann::ordered_json model_header(const SequenceClassifier& m) {
  nlohmann::ordered_json params = nlohmann::ordered_json::array();
  for (const auto& [name, p] : m.params().params()) params.push_back({{"name", name}, {"shape", p.value.shape()}});
  return {{"config", m.config().to_json()}, {"vocab", m.vocab().tokens()}, {"params", params}};
}

SequenceClassifier read_model(const nlohmann::ordered_json& h, const ModelConfig& defaults, Reader& r) {
  const ModelConfig config = ModelConfig::from_json(nlohmann::json::parse(h.at("config").dump()), defaults);
  const auto tokens = h.at("vocab").get<std::vector<std::string>>();
  if (tokens.size() < 2) throw CorruptFileError("bundle vocabulary lacks reserved entries");
  Vocab vocab = Vocab::from_tokens({tokens.begin() + 2, tokens.end()});
  if (vocab.tokens() != tokens) throw CorruptFileError("bundle vocabulary is malformed");
  ParamStore store;
  for (const auto& p : h.at("params")) {
    Param& param = store.add(p.at("name").get<std::string>(), p.at("shape").get<std::vector<std::size_t>>());
    const auto count = r.get<std::uint64_t>();
    if (count != param.value.size()) throw CorruptFileError("parameter block size disagrees with its shape");
    const auto raw = r.take(count * sizeof(double));
    std::memcpy(param.value.data(), raw.data(), raw.size());
  }
  return SequenceClassifier(config, std::move(vocab), std::move(store));
}

void write_params(std::string& out, const SequenceClassifier& m) {
  for (const auto& [name, p] : m.params().params()) {
    put<std::uint64_t>(out, p.value.size());
    out.append(reinterpret_cast<const char*>(p.value.data()), p.value.size() * sizeof(double));
  }
}

}  // namespace

std::string serialize_bundle(const Pipeline& p) {
  const auto& res = p.resources();
  nlohmann::ordered_json header;
  header["config"] = nlohmann::ordered_json::parse(p.config().to_json().dump());
  header["taxonomy"] = res.taxonomy.to_json();
  header["groups"] = nlohmann::ordered_json::parse(res.groups.to_json(res.taxonomy).dump());
  header["rules"] = nlohmann::ordered_json::parse(rules_to_json(res.rules, res.taxonomy).dump());
  header["gazetteer"] = {{"digest", res.gazetteer.digest()}, {"entries", res.gazetteer.to_tsv()}};
  header["category_model"] = model_header(p.category_model());
  header["subcategory_model"] = model_header(p.subcategory_model());
  const std::string text = header.dump();

  std::string out(kMagic, 4);
  put<std::uint32_t>(out, kBundleVersion);
  put<std::uint64_t>(out, text.size());
  out += text;
  write_params(out, p.category_model());
  write_params(out, p.subcategory_model());
  put<std::uint32_t>(out, crc(out));
  return out;
}

Pipeline deserialize_bundle(std::string_view bytes) {
  if (bytes.size() < 4 + 4 + 8 + 4 || bytes.substr(0, 4) != std::string_view(kMagic, 4)) {
    throw CorruptFileError("not a bundle file");
  }
  Reader r(bytes);
  r.take(4);
  const auto version = r.get<std::uint32_t>();
  if (version != kBundleVersion) throw VersionError("unsupported bundle version " + std::to_string(version));

  std::uint32_t stored;
  std::memcpy(&stored, bytes.data() + bytes.size() - 4, 4);
  if (crc(bytes.substr(0, bytes.size() - 4)) != stored) throw CorruptFileError("bundle checksum mismatch");

  try {
    const auto header_len = r.get<std::uint64_t>();
    const auto header = nlohmann::ordered_json::parse(r.take(header_len));
    PipelineConfig cfg = PipelineConfig::from_json(nlohmann::json::parse(header.at("config").dump()));

    Resources res{.taxonomy = Taxonomy::from_json(header.at("taxonomy")), .gazetteer = {}, .groups = {}, .rules = {}};
    res.gazetteer = parse_gazetteer(header.at("gazetteer").at("entries").get<std::string>(), res.taxonomy.entity_types());
    if (res.gazetteer.digest() != header.at("gazetteer").at("digest").get<std::string>()) {
      throw CorruptFileError("gazetteer digest mismatch");
    }
    res.groups = EntityGroups::from_json(nlohmann::json::parse(header.at("groups").dump()), res.taxonomy);
    res.rules = rules_from_json(nlohmann::json::parse(header.at("rules").dump()), res.taxonomy);

    SequenceClassifier cat = read_model(header.at("category_model"), ModelConfig::category_model(), r);
    SequenceClassifier sub = read_model(header.at("subcategory_model"), ModelConfig::subcategory_model(), r);
    if (r.remaining() != 4) throw CorruptFileError("trailing bytes after parameter blocks");
    return Pipeline(std::move(cfg), std::move(res), std::move(cat), std::move(sub));
  } catch (const nlohmann::json::exception& e) {
    throw CorruptFileError(std::string("bundle header is malformed: ") + e.what());
  }
}

void save_bundle(const Pipeline& p, const std::filesystem::path& path) {
  const std::string bytes = serialize_bundle(p);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error("failed writing " + path.string());
}

Pipeline load_bundle(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open bundle " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return deserialize_bundle(ss.str());
}

}  // namespace snlu
