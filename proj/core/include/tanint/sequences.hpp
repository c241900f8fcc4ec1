#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tanint/const_atom.hpp"
#include "tanint/engine.hpp"
#include "tanint/integer.hpp"
#include "tanint/rational.hpp"

namespace tanint {

enum class Parity { Even, Odd, All };
enum class NormalizeMode { Raw, Abs, Numerators, Denominators, ScaledLcm };

std::string parity_name(Parity p);
std::optional<Parity> parity_from_name(const std::string& s);
std::string normalize_mode_name(NormalizeMode m);
std::optional<NormalizeMode> normalize_mode_from_name(const std::string& s);

/// Selects one coefficient stream across the family: the coefficient of
/// `atom` (or the rational part when absent) in I_n^(p) as n runs upward
/// through the chosen parity class.
struct CoeffQuery {
  std::optional<ConstAtom> atom;  // absent selects the rational part
  int p = 0;
  Parity parity = Parity::All;
  int n_max = 0;
  NormalizeMode normalize = NormalizeMode::Raw;
};

std::vector<Rational> coeff_sequence(const CoeffQuery& q, MemoTable& memo);

/// Projects rationals to integers: abs (absolute numerators), numerators,
/// denominators, or scaled_lcm (multiply through by the lcm of all
/// denominators). Raw is not a valid projection; empty input is an error.
std::vector<Integer> normalize(const std::vector<Rational>& seq, NormalizeMode mode);

struct OeisMatch {
  std::string id;
  std::string name;
  friend bool operator==(const OeisMatch&, const OeisMatch&) = default;
};

struct OeisResult {
  std::vector<Integer> query_terms;
  std::vector<OeisMatch> matches;
  bool from_cache = false;
};

class OeisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};
/// Online lookup could not reach the endpoint or got a non-200 answer.
class OeisNetworkError : public OeisError {
 public:
  using OeisError::OeisError;
};
/// Offline lookup found nothing cached for the query.
class OeisCacheMiss : public OeisError {
 public:
  using OeisError::OeisError;
};
/// Response body (live or cached) does not match the expected JSON shape.
class OeisParseError : public OeisError {
 public:
  using OeisError::OeisError;
};

/// FNV-1a 64-bit hash of a byte string, as 16 lowercase hex digits.
std::string fnv1a64_hex(const std::string& data);

/// Search client with a transparent response cache. Every successful online
/// lookup stores the raw response body under a hash of the query string;
/// offline lookups are served exclusively from that cache and never touch
/// the network.
class OeisClient {
 public:
  struct Options {
    std::string base_url = "https://oeis.org";
    std::filesystem::path cache_dir;
    bool offline = false;
  };

  /// base_url from TANINT_OEIS_URL, cache_dir from TANINT_CACHE (falling
  /// back to the user cache directory).
  static Options options_from_env();

  explicit OeisClient(Options opts);

  /// 1 to 50 terms. Throws OeisCacheMiss / OeisNetworkError /
  /// OeisParseError as appropriate.
  OeisResult lookup(const std::vector<Integer>& terms) const;

  const Options& options() const { return opts_; }
  std::filesystem::path cache_path_for(const std::string& query) const;

 private:
  OeisResult parse_body(const std::string& body, std::vector<Integer> terms,
                        bool from_cache) const;
  Options opts_;
};

/// One-shot lookup with options taken from the environment.
OeisResult oeis_lookup(const std::vector<Integer>& terms, bool offline);

}  // namespace tanint
