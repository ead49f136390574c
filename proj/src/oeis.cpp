#include "ecr/oeis.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

namespace ecr::oeis {

namespace {

struct Fixture {
  std::string_view id;
  std::string_view text;
};

// clang-format off
constexpr Fixture kFixtures[] = {
    {"A000108", R"bfile(# A000108: terms regenerated from the defining equation
0 1
1 1
2 2
3 5
4 14
5 42
6 132
7 429
8 1430
9 4862
10 16796
11 58786
12 208012
13 742900
14 2674440
15 9694845
16 35357670
17 129644790
18 477638700
19 1767263190
20 6564120420
21 24466267020
22 91482563640
23 343059613650
24 1289904147324
25 4861946401452
26 18367353072152
27 69533550916004
28 263747951750360
29 1002242216651368
30 3814986502092304
31 14544636039226909
32 55534064877048198
33 212336130412243110
34 812944042149730764
35 3116285494907301262
36 11959798385860453492
37 45950804324621742364
38 176733862787006701400
39 680425371729975800390
)bfile"},
    {"A010892", R"bfile(# A010892: terms regenerated from the defining equation
0 1
1 1
2 0
3 -1
4 -1
5 0
6 1
7 1
8 0
9 -1
10 -1
11 0
12 1
13 1
14 0
15 -1
16 -1
17 0
18 1
19 1
20 0
21 -1
22 -1
23 0
24 1
25 1
26 0
27 -1
28 -1
29 0
30 1
31 1
32 0
33 -1
34 -1
35 0
36 1
37 1
38 0
39 -1
)bfile"},
    {"A023431", R"bfile(# A023431: terms regenerated from the defining equation
0 1
1 1
2 1
3 2
4 4
5 7
6 13
7 26
8 52
9 104
10 212
11 438
12 910
13 1903
14 4009
15 8494
16 18080
17 38656
18 82988
19 178802
20 386490
21 837928
22 1821664
23 3970282
24 8673258
25 18987930
26 41652382
27 91539466
28 201525238
29 444379907
30 981384125
31 2170416738
32 4806513660
33 10657780276
34 23660408408
35 52585798278
36 116998303750
37 260574321160
38 580901521408
39 1296199292174
)bfile"},
    {"A025243", R"bfile(# A025243: terms regenerated from the defining equation
0 1
1 1
2 3
3 6
4 14
5 33
6 79
7 194
8 482
9 1214
10 3090
11 7936
12 20544
13 53545
14 140399
15 370098
16 980226
17 2607242
18 6961462
19 18652112
20 50133616
21 135140598
22 365254226
23 989614976
24 2687312752
25 7312725944
26 19938170096
27 54460115308
28 149007155356
29 408341969073
30 1120692898887
31 3080038489322
32 8476121915898
33 23354866287530
34 64426865469574
35 177925716127272
36 491889284291304
37 1361224189136338
38 3770544589883878
39 10453715209219488
)bfile"},
};
// clang-format on

std::string bfile_name(const std::string& id) { return "b" + id.substr(1) + ".txt"; }

std::vector<Integer> values_of(std::string_view text) {
  std::vector<Integer> out;
  for (auto& [n, v] : parse_bfile(text)) out.push_back(v);
  return out;
}

}  // namespace

bool valid_id(std::string_view id) {
  if (id.size() != 7 || id[0] != 'A') return false;
  for (std::size_t i = 1; i < id.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
  return true;
}

std::vector<std::pair<long, Integer>> parse_bfile(std::string_view text) {
  std::vector<std::pair<long, Integer>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    long n = 0;
    std::string value;
    if (!(fields >> n >> value)) continue;
    Integer v;
    if (v.set_str(value, 10) != 0) continue;
    out.emplace_back(n, std::move(v));
  }
  return out;
}

std::optional<std::string_view> fixture(std::string_view id) {
  for (const auto& f : kFixtures)
    if (f.id == id) return f.text;
  return std::nullopt;
}

Comparison compare(const std::vector<Rational>& seq, const std::vector<Integer>& ref) {
  constexpr std::size_t kMinOverlap = 3;
  Comparison best;
  bool found = false;
  for (long mag = 0; mag <= 2 && !found; ++mag) {
    for (long offset : {mag, -mag}) {
      std::size_t compared = 0;
      bool ok = true;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        const long j = static_cast<long>(i) + offset;
        if (j < 0) continue;
        if (j >= static_cast<long>(ref.size())) break;
        ++compared;
        if (seq[i] != Rational(ref[static_cast<std::size_t>(j)])) {
          ok = false;
          break;
        }
      }
      if (ok && compared >= std::min(kMinOverlap, seq.size())) {
        best = {true, offset, compared, std::nullopt};
        found = true;
        break;
      }
      if (mag == 0) break;
    }
  }
  if (found) return best;

  Comparison miss;
  for (std::size_t i = 0; i < seq.size() && i < ref.size(); ++i) {
    ++miss.compared;
    if (seq[i] != Rational(ref[i])) {
      miss.first_mismatch = i;
      break;
    }
  }
  if (!miss.first_mismatch) miss.first_mismatch = miss.compared;
  return miss;
}

std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("EC_RIORDAN_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "ec-riordan";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "ec-riordan";
  return std::filesystem::temp_directory_path() / "ec-riordan";
}

LookupResult lookup(const std::string& id, const LookupOptions& opts) {
  LookupResult r;
  if (!valid_id(id)) {
    r.message = "malformed OEIS id '" + id + "'";
    return r;
  }
  if (opts.offline) {
    if (auto text = fixture(id)) {
      r.status = LookupStatus::Found;
      r.values = values_of(*text);
      r.source = "fixture";
    } else {
      r.status = LookupStatus::UnknownOffline;
      r.message = id + " is not bundled; rerun without --offline to fetch it";
    }
    return r;
  }

  const std::filesystem::path cached = opts.cache_dir / bfile_name(id);
  if (std::ifstream in(cached); in) {
    std::stringstream buf;
    buf << in.rdbuf();
    r.values = values_of(buf.str());
    if (!r.values.empty()) {
      r.status = LookupStatus::Found;
      r.source = "cache";
      return r;
    }
  }

  httplib::Client client(opts.base_url);
  client.set_connection_timeout(10);
  client.set_read_timeout(30);
  client.set_follow_location(true);
  const std::string path = "/" + id + "/" + bfile_name(id);
  auto res = client.Get(path);
  if (!res || res->status != 200) {
    r.status = LookupStatus::NetworkFailure;
    r.message = "fetching " + opts.base_url + path + " failed: " +
                (res ? "HTTP " + std::to_string(res->status) : httplib::to_string(res.error()));
    return r;
  }
  r.values = values_of(res->body);
  if (r.values.empty()) {
    r.status = LookupStatus::NetworkFailure;
    r.message = "response for " + id + " contained no b-file terms";
    return r;
  }
  std::error_code ec;
  std::filesystem::create_directories(opts.cache_dir, ec);
  if (std::ofstream out(cached); out) out << res->body;
  r.status = LookupStatus::Found;
  r.source = "network";
  return r;
}

}  // namespace ecr::oeis
