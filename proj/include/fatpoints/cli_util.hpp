#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "fatpoints/conjectural.hpp"
#include "fatpoints/obstruction.hpp"
#include "fatpoints/scanner.hpp"

namespace fatpoints {

/**
 * Multiplicity list syntax: comma-separated tokens, each either a plain
 * integer or "KxC" meaning C copies of K ("3x10,2" -> ten 3s and a 2).
 * Throws std::invalid_argument on malformed input.
 */
Uple parse_uple(const std::string& text);

// JSON views.  Arbitrary-precision values are serialized as decimal strings
// so round-trips are exact regardless of magnitude.
nlohmann::json to_json(const Big& v);
nlohmann::json to_json(const HilbertValue& v);
nlohmann::json to_json(const ConjecturalValue& v);
nlohmann::json to_json(const ObstructionStep& s);
nlohmann::json to_json(const UbdaReport& r);
nlohmann::json to_json(const ScanRecord& r);
nlohmann::json to_json(const KOfReport& r);

std::string csv_header();
std::string csv_row(const ScanRecord& r);

/**
 * Append-only JSONL cache of generic Hilbert values, keyed by
 * (n, sorted multiplicities, m, modulus, seed, trials).  Existing lines are
 * loaded on open; lookup hits skip recomputation; re-inserting a key with a
 * different value throws (a cache that silently disagrees with itself is a
 * corruption, not a feature).
 */
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  bool lookup(long long n, const Uple& A, long long m, std::uint64_t modulus,
              std::uint64_t seed, long long trials, HilbertValue& out) const;
  void insert(long long n, const Uple& A, long long m, std::uint64_t modulus,
              std::uint64_t seed, long long trials, const HilbertValue& value);

  std::size_t size() const { return index_.size(); }

 private:
  std::string path_;
  std::map<std::string, HilbertValue> index_;
};

}  // namespace fatpoints
