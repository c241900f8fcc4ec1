#include "tanint/sequences.hpp"

#include <httplib.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <utility>

namespace tanint {

namespace {

bool parity_accepts(Parity parity, int n) {
  switch (parity) {
    case Parity::Even:
      return n % 2 == 0;
    case Parity::Odd:
      return n % 2 == 1;
    case Parity::All:
      return true;
  }
  return false;
}

std::string url_encode(const std::string& s) {
  static constexpr char hex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(s.size());
  for (unsigned char c : s) {
    const bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                            (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.' || c == '~';
    if (unreserved) {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 0xF]);
    }
  }
  return out;
}

std::string join_terms(const std::vector<Integer>& terms) {
  std::string q;
  for (size_t i = 0; i < terms.size(); ++i) {
    if (i != 0) q.push_back(',');
    q += terms[i].str();
  }
  return q;
}

}  // namespace

std::string parity_name(Parity p) {
  switch (p) {
    case Parity::Even:
      return "even";
    case Parity::Odd:
      return "odd";
    case Parity::All:
      return "all";
  }
  return "all";
}

std::optional<Parity> parity_from_name(const std::string& s) {
  if (s == "even") return Parity::Even;
  if (s == "odd") return Parity::Odd;
  if (s == "all") return Parity::All;
  return std::nullopt;
}

std::string normalize_mode_name(NormalizeMode m) {
  switch (m) {
    case NormalizeMode::Raw:
      return "raw";
    case NormalizeMode::Abs:
      return "abs";
    case NormalizeMode::Numerators:
      return "numerators";
    case NormalizeMode::Denominators:
      return "denominators";
    case NormalizeMode::ScaledLcm:
      return "scaled_lcm";
  }
  return "raw";
}

std::optional<NormalizeMode> normalize_mode_from_name(const std::string& s) {
  if (s == "raw") return NormalizeMode::Raw;
  if (s == "abs") return NormalizeMode::Abs;
  if (s == "numerators") return NormalizeMode::Numerators;
  if (s == "denominators") return NormalizeMode::Denominators;
  if (s == "scaled_lcm") return NormalizeMode::ScaledLcm;
  return std::nullopt;
}

std::vector<Rational> coeff_sequence(const CoeffQuery& q, MemoTable& memo) {
  if (q.p < 0) throw std::invalid_argument("coeff_sequence: p must be >= 0");
  if (q.n_max < 0) throw std::invalid_argument("coeff_sequence: n_max must be >= 0");
  std::vector<Rational> out;
  for (int n = 0; n <= q.n_max; ++n) {
    if (!parity_accepts(q.parity, n)) continue;
    const SymValue v = compute(n, q.p, memo);
    out.push_back(q.atom ? extract_coefficient(v, *q.atom) : v.rational_part());
  }
  return out;
}

std::vector<Integer> normalize(const std::vector<Rational>& seq, NormalizeMode mode) {
  if (seq.empty()) throw std::invalid_argument("normalize: empty sequence");
  std::vector<Integer> out;
  out.reserve(seq.size());
  switch (mode) {
    case NormalizeMode::Raw:
      throw std::invalid_argument(
          "normalize: mode must be abs, numerators, denominators or scaled_lcm");
    case NormalizeMode::Abs:
      for (const auto& r : seq) out.push_back(r.numerator().abs());
      break;
    case NormalizeMode::Numerators:
      for (const auto& r : seq) out.push_back(r.numerator());
      break;
    case NormalizeMode::Denominators:
      for (const auto& r : seq) out.push_back(r.denominator());
      break;
    case NormalizeMode::ScaledLcm: {
      Integer l(1);
      for (const auto& r : seq) l = Integer::lcm(l, r.denominator());
      for (const auto& r : seq) {
        out.push_back(r.numerator() * Integer::div_exact(l, r.denominator()));
      }
      break;
    }
  }
  return out;
}

std::string fnv1a64_hex(const std::string& data) {
  uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

OeisClient::Options OeisClient::options_from_env() {
  Options opts;
  if (const char* url = std::getenv("TANINT_OEIS_URL"); url != nullptr && *url != '\0') {
    opts.base_url = url;
  }
  if (const char* cache = std::getenv("TANINT_CACHE"); cache != nullptr && *cache != '\0') {
    opts.cache_dir = cache;
  } else if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') {
    opts.cache_dir = std::filesystem::path(xdg) / "tanint";
  } else if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0') {
    opts.cache_dir = std::filesystem::path(home) / ".cache" / "tanint";
  } else {
    opts.cache_dir = ".tanint-cache";
  }
  return opts;
}

OeisClient::OeisClient(Options opts) : opts_(std::move(opts)) {
  if (opts_.cache_dir.empty()) opts_.cache_dir = options_from_env().cache_dir;
  std::error_code ec;
  std::filesystem::create_directories(opts_.cache_dir, ec);
}

std::filesystem::path OeisClient::cache_path_for(const std::string& query) const {
  return opts_.cache_dir / (fnv1a64_hex(query) + ".json");
}

OeisResult OeisClient::parse_body(const std::string& body, std::vector<Integer> terms,
                                  bool from_cache) const {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(body);
  } catch (const nlohmann::json::exception& e) {
    throw OeisParseError(std::string("oeis: response is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw OeisParseError("oeis: response is not a JSON object");

  OeisResult result;
  result.query_terms = std::move(terms);
  result.from_cache = from_cache;
  if (!doc.contains("results") || doc["results"].is_null()) return result;
  const auto& list = doc["results"];
  if (!list.is_array()) throw OeisParseError("oeis: \"results\" is not an array");
  for (const auto& entry : list) {
    if (!entry.is_object() || !entry.contains("number") ||
        !entry["number"].is_number_integer()) {
      throw OeisParseError("oeis: result entry lacks an integer \"number\"");
    }
    const long long number = entry["number"].get<long long>();
    char id[32];
    std::snprintf(id, sizeof(id), "A%06lld", number);
    std::string name;
    if (entry.contains("name") && entry["name"].is_string()) {
      name = entry["name"].get<std::string>();
    }
    result.matches.push_back(OeisMatch{id, name});
  }
  return result;
}

OeisResult OeisClient::lookup(const std::vector<Integer>& terms) const {
  if (terms.empty() || terms.size() > 50) {
    throw std::invalid_argument("oeis: need between 1 and 50 terms, got " +
                                std::to_string(terms.size()));
  }
  const std::string query = join_terms(terms);
  const std::filesystem::path cache_file = cache_path_for(query);

  if (std::filesystem::exists(cache_file)) {
    std::ifstream in(cache_file, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) {
      throw OeisParseError("oeis: cannot read cache file " + cache_file.string());
    }
    return parse_body(buf.str(), terms, true);
  }
  if (opts_.offline) {
    throw OeisCacheMiss("oeis: offline and no cached result for query \"" + query + "\"");
  }

  httplib::Client cli(opts_.base_url);
  cli.set_connection_timeout(10, 0);
  cli.set_read_timeout(30, 0);
  cli.set_follow_location(true);
  const std::string path = "/search?q=" + url_encode(query) + "&fmt=json";
  httplib::Result res = cli.Get(path);
  if (!res) {
    throw OeisNetworkError("oeis: request to " + opts_.base_url + path +
                           " failed: " + httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw OeisNetworkError("oeis: HTTP " + std::to_string(res->status) + " from " +
                           opts_.base_url + path);
  }

  OeisResult result = parse_body(res->body, terms, false);

  std::error_code ec;
  std::filesystem::create_directories(opts_.cache_dir, ec);
  const std::filesystem::path tmp = cache_file.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out.write(res->body.data(), static_cast<std::streamsize>(res->body.size()));
    if (!out.good()) throw std::runtime_error("oeis: cannot write cache file " + tmp.string());
  }
  std::filesystem::rename(tmp, cache_file, ec);
  if (ec) throw std::runtime_error("oeis: cannot finalize cache file " + cache_file.string());

  return result;
}

OeisResult oeis_lookup(const std::vector<Integer>& terms, bool offline) {
  OeisClient::Options opts = OeisClient::options_from_env();
  opts.offline = offline;
  return OeisClient(opts).lookup(terms);
}

}  // namespace tanint
