#include "coxshuffle/analysis.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"

namespace coxshuffle {

LatticeSummary compute_lattice_summary(const AnyCoxeterGroup& group) {
  return std::visit(
      [](const auto& g) {
        const auto& rs = g.root_system;
        const auto lattice = build_lattice(rs);
        LatticeSummary s;
        s.flat_count = lattice.size();
        s.flats_by_dim.assign(static_cast<std::size_t>(rs.rank() + 1), 0);
        for (int i = 0; i < lattice.size(); ++i) ++s.flats_by_dim[static_cast<std::size_t>(lattice.dim(i))];
        const DescentSet count = DescentSet{1} << rs.rank();
        for (DescentSet K = 0; K < count; ++K) {
          const auto fixed = fixed_space(rs, K);
          s.restricted_chi.push_back(char_poly(lattice, fixed));
          s.fixed_dims.push_back(fixed.dim());
        }
        return s;
      },
      group);
}

namespace cache {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string serialize(const CoxeterType& type, const LatticeSummary& summary) {
  nlohmann::json payload;
  payload["type"] = type.name();
  payload["flat_count"] = summary.flat_count;
  payload["flats_by_dim"] = summary.flats_by_dim;
  payload["fixed_dims"] = summary.fixed_dims;
  nlohmann::json chis = nlohmann::json::array();
  for (const auto& p : summary.restricted_chi) chis.push_back(p.coefficients());
  payload["restricted_chi"] = chis;
  const std::string body = payload.dump();
  nlohmann::json doc;
  doc["version"] = kFormatVersion;
  doc["payload"] = payload;
  doc["checksum"] = std::to_string(fnv1a(body));
  return doc.dump(1);
}

std::optional<LatticeSummary> deserialize(const CoxeterType& type, const std::string& text) {
  try {
    const auto doc = nlohmann::json::parse(text);
    if (doc.at("version").get<int>() != kFormatVersion) return std::nullopt;
    const auto& payload = doc.at("payload");
    if (doc.at("checksum").get<std::string>() != std::to_string(fnv1a(payload.dump()))) return std::nullopt;
    if (payload.at("type").get<std::string>() != type.name()) return std::nullopt;
    LatticeSummary s;
    s.flat_count = payload.at("flat_count").get<int>();
    s.flats_by_dim = payload.at("flats_by_dim").get<std::vector<int>>();
    s.fixed_dims = payload.at("fixed_dims").get<std::vector<int>>();
    for (const auto& c : payload.at("restricted_chi")) s.restricted_chi.emplace_back(c.get<std::vector<std::int64_t>>());
    if (s.restricted_chi.size() != std::size_t{1} << type.rank || s.fixed_dims.size() != s.restricted_chi.size()) {
      return std::nullopt;
    }
    return s;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

}  // namespace cache

namespace {

std::optional<std::filesystem::path> cache_file(const CoxeterType& type) {
  const char* dir = std::getenv("COXETER_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return std::nullopt;
  std::string name = type.name();
  for (char& c : name) {
    if (c == '(' || c == ')') c = '_';
  }
  return std::filesystem::path(dir) / ("lattice-" + name + "-v" + std::to_string(cache::kFormatVersion) + ".json");
}

LatticeSummary lattice_summary(const CoxeterType& type, const AnyCoxeterGroup& group, bool& from_cache) {
  from_cache = false;
  const auto path = cache_file(type);
  if (path && std::filesystem::exists(*path)) {
    std::ifstream in(*path);
    std::stringstream buf;
    buf << in.rdbuf();
    if (auto s = cache::deserialize(type, buf.str())) {
      from_cache = true;
      return *s;
    }
  }
  LatticeSummary s = compute_lattice_summary(group);
  if (path) {
    std::error_code ec;
    std::filesystem::create_directories(path->parent_path(), ec);
    const auto tmp = path->string() + ".tmp";
    {
      std::ofstream out(tmp);
      out << cache::serialize(type, s);
    }
    std::filesystem::rename(tmp, *path, ec);
  }
  return s;
}

}  // namespace

std::shared_ptr<const GroupData> analyze(const CoxeterType& type) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const GroupData>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = registry.find(type.name()); it != registry.end()) return it->second;

  auto data = std::make_shared<GroupData>();
  data->type = type;
  data->group = build_group(type);
  const GroupTable& t = data->table();
  data->exponents = exponents(t);
  data->lattice = lattice_summary(type, data->group, data->lattice_from_cache);
  const auto infos = all_parabolics(t);
  for (std::size_t K = 0; K < infos.size(); ++K) {
    ParabolicSummary p;
    p.info = infos[K];
    p.fixed_dim = data->lattice.fixed_dims[K];
    p.chi = data->lattice.restricted_chi[K];
    p.coexponents = coexponents_of(p.chi, data->max_exponent());
    data->parabolics.push_back(std::move(p));
  }
  registry.emplace(type.name(), data);
  return data;
}

std::shared_ptr<const GroupData> analyze(const std::string& type_name) {
  const auto type = CoxeterType::parse(type_name);
  check_supported(type);
  return analyze(type);
}

}  // namespace coxshuffle
