#include "fatpoints/cli_util.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fatpoints {

using nlohmann::json;

Uple parse_uple(const std::string& text) {
  Uple out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) throw std::invalid_argument("parse_uple: empty token");
    long long value, count = 1;
    std::size_t x = tok.find('x');
    try {
      std::size_t used;
      if (x == std::string::npos) {
        value = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } else {
        value = std::stoll(tok.substr(0, x), &used);
        if (used != x) throw std::invalid_argument(tok);
        std::string rest = tok.substr(x + 1);
        count = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument(tok);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument("parse_uple: bad token '" + tok + "'");
    }
    if (count < 1)
      throw std::invalid_argument("parse_uple: nonpositive count in '" + tok +
                                  "'");
    for (long long i = 0; i < count; ++i) out.entries.push_back(value);
  }
  if (out.entries.empty())
    throw std::invalid_argument("parse_uple: empty multiplicity list");
  return out;
}

json to_json(const Big& v) { return v.get_str(); }

json to_json(const HilbertValue& v) {
  return json{{"value", v.value},
              {"method", method_name(v.method)},
              {"modulus", v.modulus},
              {"seed", v.seed},
              {"trials", v.trials}};
}

json to_json(const ConjecturalValue& v) {
  return json{{"value", to_json(v.value)},
              {"clamped", v.clamped},
              {"ambient_dim", to_json(v.ambient_dim)}};
}

json to_json(const ObstructionStep& s) {
  json j{{"active_index", s.active_index},
         {"level", s.level},
         {"induced_points", s.induced.points.size()},
         {"induced_h", s.induced_h.value},
         {"step_bound", s.step_bound}};
  if (s.realized_increment) j["realized_increment"] = *s.realized_increment;
  return j;
}

json to_json(const UbdaReport& r) {
  json steps = json::array();
  for (const auto& s : r.steps) steps.push_back(to_json(s));
  return json{{"n", r.config.n},
              {"mults", r.config.mults.entries},
              {"m", r.m},
              {"direct_h", to_json(r.direct_h)},
              {"bound", r.bound},
              {"only_linear", r.only_linear},
              {"aborts", r.aborts},
              {"steps", steps}};
}

static std::vector<std::string> predicate_names(const ScanRecord& r) {
  std::vector<std::string> out;
  if (r.rnc) out.push_back("rnc");
  if (r.plus1) out.push_back("plus1");
  if (r.nplus3) out.push_back("nplus3");
  if (r.ctr_candidate) out.push_back("ctr");
  return out;
}

json to_json(const ScanRecord& r) {
  return json{{"n", r.n},
              {"d", r.d},
              {"A", r.A.entries},
              {"m", r.m},
              {"hpts", to_json(r.hpts)},
              {"g", to_json(r.g_value)},
              {"g_clamped", r.g_clamped},
              {"relation", relation_name(r.relation)},
              {"exception_class", exception_class_name(r.exception_class)},
              {"predicates", predicate_names(r)}};
}

json to_json(const KOfReport& r) {
  json table = json::array();
  for (const auto& e : r.table)
    table.push_back(json{{"k", e.k}, {"holds", e.holds}});
  json j{{"n", r.n},
         {"k_max", r.k_max},
         {"odd_only", r.odd_only},
         {"lead_lhs", to_json(r.lead_lhs)},
         {"lead_rhs", to_json(r.lead_rhs)},
         {"asymptotic_ok", r.asymptotic_ok},
         {"table", table}};
  j["computed"] = r.computed ? json(*r.computed) : json(nullptr);
  if (r.paper_value) j["paper_value"] = *r.paper_value;
  if (r.paper_lo) j["paper_interval"] = json{*r.paper_lo, *r.paper_hi};
  if (r.agrees) j["agrees"] = *r.agrees;
  return j;
}

std::string csv_header() {
  return "n,d,A,m,hpts,g,relation,exception_class,predicates,seed,modulus";
}

std::string csv_row(const ScanRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << r.d << ',';
  for (std::size_t i = 0; i < r.A.entries.size(); ++i)
    os << (i ? "|" : "") << r.A.entries[i];
  os << ',' << r.m << ',' << r.hpts.value << ',' << r.g_value.get_str() << ','
     << relation_name(r.relation) << ','
     << exception_class_name(r.exception_class) << ',';
  auto preds = predicate_names(r);
  for (std::size_t i = 0; i < preds.size(); ++i)
    os << (i ? "+" : "") << preds[i];
  os << ',' << r.hpts.seed << ',' << r.hpts.modulus;
  return os.str();
}

static std::string cache_key(long long n, const Uple& A, long long m,
                             std::uint64_t modulus, std::uint64_t seed,
                             long long trials) {
  std::ostringstream os;
  os << n << ';';
  for (long long k : sorted_desc(A)) os << k << ',';
  os << ';' << m << ';' << modulus << ';' << seed << ';' << trials;
  return os.str();
}

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    json j = json::parse(line);
    HilbertValue hv;
    hv.value = j.at("value").get<long long>();
    hv.method = HilbertMethod::rank_oracle;
    hv.modulus = j.at("modulus").get<std::uint64_t>();
    hv.seed = j.at("seed").get<std::uint64_t>();
    hv.trials = j.at("trials").get<long long>();
    index_[j.at("key").get<std::string>()] = hv;
  }
}

bool ResultCache::lookup(long long n, const Uple& A, long long m,
                         std::uint64_t modulus, std::uint64_t seed,
                         long long trials, HilbertValue& out) const {
  auto it = index_.find(cache_key(n, A, m, modulus, seed, trials));
  if (it == index_.end()) return false;
  out = it->second;
  return true;
}

void ResultCache::insert(long long n, const Uple& A, long long m,
                         std::uint64_t modulus, std::uint64_t seed,
                         long long trials, const HilbertValue& value) {
  std::string key = cache_key(n, A, m, modulus, seed, trials);
  auto it = index_.find(key);
  if (it != index_.end()) {
    if (it->second.value != value.value)
      throw std::runtime_error("ResultCache: conflicting value for key " +
                               key);
    return;  // identical re-insert is a no-op
  }
  index_[key] = value;
  std::ofstream out(path_, std::ios::app);
  if (!out) throw std::runtime_error("ResultCache: cannot write " + path_);
  json j{{"key", key},
         {"value", value.value},
         {"modulus", value.modulus},
         {"seed", value.seed},
         {"trials", value.trials}};
  out << j.dump() << '\n';
}

}  // namespace fatpoints
