#include "invariants.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "simplify.hpp"

namespace knotkit {

namespace {

int dsu_find(std::vector<int>& up, int x) {
  while (up[x] != x) {
    up[x] = up[up[x]];
    x = up[x];
  }
  return x;
}

}  // namespace

LaurentPoly kauffman_bracket(const PlanarDiagram& d, int budget) {
  d.require_valid();
  if (d.component_count() == 0) throw input_error("bracket of the empty diagram");
  const int n = d.crossing_count();
  if (n > budget)
    throw budget_error("bracket budget exceeded: " + std::to_string(n) + " crossings > " +
                       std::to_string(budget));

  // Dense arc ids.
  std::map<ArcId, int> dense;
  for (ArcId a : d.arcs()) dense.emplace(a, static_cast<int>(dense.size()));
  const int m = static_cast<int>(dense.size());
  std::vector<std::array<int, 4>> ends(n);
  for (int c = 0; c < n; ++c)
    for (int p = 0; p < 4; ++p) ends[c][p] = dense.at(d.crossing(c).end[p]);

  LaurentPoly delta;
  delta.add_term(2, -1);
  delta.add_term(-2, -1);
  std::vector<LaurentPoly> delta_pow{LaurentPoly::one()};
  auto delta_power = [&](int k) -> const LaurentPoly& {
    while (static_cast<int>(delta_pow.size()) <= k) delta_pow.push_back(delta_pow.back() * delta);
    return delta_pow[k];
  };

  LaurentPoly out;
  std::vector<int> up(std::max(m, 1));
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << n); ++state) {
    std::iota(up.begin(), up.end(), 0);
    int exponent = 0;
    for (int c = 0; c < n; ++c) {
      const auto& e = ends[c];
      bool a_smoothing = (state >> c) & 1;
      exponent += a_smoothing ? 1 : -1;
      // A joins ends 0-3 and 1-2; B joins 0-1 and 2-3.
      int x1 = a_smoothing ? e[3] : e[1];
      int x2 = a_smoothing ? e[1] : e[3];
      up[dsu_find(up, e[0])] = dsu_find(up, x1);
      up[dsu_find(up, e[2])] = dsu_find(up, x2);
    }
    int loops = d.free_loop_count();
    for (int a = 0; a < m; ++a)
      if (dsu_find(up, a) == a) ++loops;
    for (const auto& [e, c] : delta_power(loops - 1).terms()) out.add_term(e + exponent, c);
  }
  return out;
}

LaurentPoly jones(const PlanarDiagram& d, int budget) {
  LaurentPoly br = kauffman_bracket(d, budget);
  int w = d.writhe();
  LaurentPoly f = LaurentPoly::monomial((w % 2 == 0) ? 1 : -1, -3 * w) * br;
  LaurentPoly out;
  for (const auto& [e, c] : f.terms()) {
    if (e % 2 != 0)
      throw Error(ErrorKind::check_failed, "normalized bracket produced an odd A-exponent");
    out.add_term(e / 2, c);
  }
  return out;
}

namespace {

struct Token {
  int crossing;
  bool over;
};

// Walk of the single component from the given basepoint (an offset into the
// canonical arc walk).
std::vector<Token> based_tokens(const PlanarDiagram& d, int basepoint) {
  d.require_valid();
  if (d.component_count() != 1)
    throw input_error("finite-type invariants require a one-component diagram");
  std::vector<Token> toks;
  if (d.traced_component_count() == 0) return toks;
  std::vector<ArcId> walk = d.component_arcs(0);
  const int n = static_cast<int>(walk.size());
  basepoint = ((basepoint % n) + n) % n;
  for (int i = 0; i < n; ++i) {
    ArcId a = walk[(basepoint + i) % n];
    auto e = d.entry_of(a);
    toks.push_back({e.crossing, e.pos != 0});
  }
  return toks;
}

struct ChordData {
  int first = -1, second = -1;  // token positions
  bool first_over = false;
  int sign = 0;
};

std::vector<ChordData> chords_of(const PlanarDiagram& d, const std::vector<Token>& toks) {
  std::map<int, ChordData> by_crossing;
  for (int i = 0; i < static_cast<int>(toks.size()); ++i) {
    ChordData& cd = by_crossing[toks[i].crossing];
    if (cd.first < 0) {
      cd.first = i;
      cd.first_over = toks[i].over;
      cd.sign = d.sign(toks[i].crossing);
    } else {
      cd.second = i;
    }
  }
  std::vector<ChordData> out;
  out.reserve(by_crossing.size());
  for (auto& [c, cd] : by_crossing) {
    (void)c;
    out.push_back(cd);
  }
  return out;
}

int pair_pattern_index(const ChordData& a, const ChordData& b) {
  // Chord A is the one whose first token comes first.
  const ChordData& A = (a.first < b.first) ? a : b;
  const ChordData& B = (a.first < b.first) ? b : a;
  int shape;
  if (A.second < B.first)
    shape = 0;  // AABB
  else if (A.second < B.second)
    shape = 1;  // ABAB
  else
    shape = 2;  // ABBA
  return shape * 4 + (A.first_over ? 2 : 0) + (B.first_over ? 1 : 0);
}

// The label sequence of six endpoints (chords named by first appearance) has
// 15 shapes; the roles of the three first-tokens give 8 variants each.
const std::array<int, 729>& triple_sequence_rank() {
  static const std::array<int, 729> table = [] {
    std::array<int, 729> t;
    t.fill(-1);
    int rank = 0;
    for (int code = 0; code < 729; ++code) {
      int digits[6], tmp = code;
      for (int i = 5; i >= 0; --i) {
        digits[i] = tmp % 3;
        tmp /= 3;
      }
      int count[3] = {0, 0, 0};
      for (int i = 0; i < 6; ++i) count[digits[i]]++;
      if (count[0] != 2 || count[1] != 2 || count[2] != 2) continue;
      int seen = 0;  // labels must first appear in order 0,1,2
      bool ok = digits[0] == 0;
      for (int i = 0; ok && i < 6; ++i) {
        if (digits[i] > seen) ok = false;
        if (digits[i] == seen) ++seen;
      }
      if (!ok) continue;
      t[code] = rank++;
    }
    return t;
  }();
  return table;
}

int triple_pattern_index(const ChordData& x, const ChordData& y, const ChordData& z) {
  const ChordData* cs[3] = {&x, &y, &z};
  std::sort(cs, cs + 3, [](const ChordData* l, const ChordData* r) { return l->first < r->first; });
  std::pair<int, int> ev[6];
  int k = 0;
  for (int i = 0; i < 3; ++i) {
    ev[k++] = {cs[i]->first, i};
    ev[k++] = {cs[i]->second, i};
  }
  std::sort(ev, ev + 6);
  int code = 0;
  for (int i = 0; i < 6; ++i) code = code * 3 + ev[i].second;
  int rank = triple_sequence_rank()[code];
  int roles = (cs[0]->first_over ? 4 : 0) + (cs[1]->first_over ? 2 : 0) + (cs[2]->first_over ? 1 : 0);
  return rank * 8 + roles;
}

}  // namespace

std::array<long long, kPairPatterns> pair_pattern_counts(const PlanarDiagram& d, int basepoint) {
  auto chords = chords_of(d, based_tokens(d, basepoint));
  std::array<long long, kPairPatterns> out{};
  const int n = static_cast<int>(chords.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      out[pair_pattern_index(chords[i], chords[j])] += chords[i].sign * chords[j].sign;
  return out;
}

std::array<long long, kTriplePatterns> triple_pattern_counts(const PlanarDiagram& d, int basepoint) {
  auto chords = chords_of(d, based_tokens(d, basepoint));
  std::array<long long, kTriplePatterns> out{};
  const int n = static_cast<int>(chords.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k)
        out[triple_pattern_index(chords[i], chords[j], chords[k])] +=
            chords[i].sign * chords[j].sign * chords[k].sign;
  return out;
}

// Weight tables for the degree-2/3 invariants over the pattern counts above,
// fixed by exact linear solving against the skein-recursion Conway oracle
// (degree 2) and the mirror-odd Jones expansion oracle (degree 3) over a
// corpus of knots at every basepoint. The property suites re-verify them.
namespace {
// v2 counts one pattern: interleaved chord pairs met over-first then
// under-first (the classical two-arrow count).
constexpr long long kV2Den = 1;
constexpr std::array<long long, kPairPatterns> kV2PairNum = {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0};
// v3 counts five triple patterns, each with weight one.
constexpr long long kV3Den = 1;
constexpr std::array<long long, kPairPatterns> kV3PairNum = {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0};
constexpr std::array<long long, kTriplePatterns> kV3TripleNum = [] {
  std::array<long long, kTriplePatterns> w{};
  w[37] = 1;   // rank 4,  roles over/under/over
  w[74] = 1;   // rank 9,  roles under/over/under
  w[77] = 1;   // rank 9,  roles over/under/over
  w[85] = 1;   // rank 10, roles over/under/over
  w[90] = 1;   // rank 11, roles under/over/under
  return w;
}();
}  // namespace

long long v2(const PlanarDiagram& d, int basepoint) {
  auto pc = pair_pattern_counts(d, basepoint);
  long long num = 0;
  for (int i = 0; i < kPairPatterns; ++i) num += kV2PairNum[i] * pc[i];
  if (num % kV2Den != 0) throw Error(ErrorKind::check_failed, "v2 weight-table divisibility broke");
  return num / kV2Den;
}

long long v3(const PlanarDiagram& d, int basepoint) {
  auto pc = pair_pattern_counts(d, basepoint);
  auto tc = triple_pattern_counts(d, basepoint);
  long long num = 0;
  for (int i = 0; i < kPairPatterns; ++i) num += kV3PairNum[i] * pc[i];
  for (int i = 0; i < kTriplePatterns; ++i) num += kV3TripleNum[i] * tc[i];
  if (num % kV3Den != 0) throw Error(ErrorKind::check_failed, "v3 weight-table divisibility broke");
  return num / kV3Den;
}

bool Fingerprint::matches(const Fingerprint& o) const {
  if (components != o.components || v2 != o.v2 || v3 != o.v3) return false;
  if (jones && o.jones) return *jones == *o.jones;
  return true;
}

std::string Fingerprint::str() const {
  std::ostringstream out;
  out << "(v2=" << (v2 ? std::to_string(*v2) : "-") << ", v3=" << (v3 ? std::to_string(*v3) : "-")
      << ", jones=" << (jones ? jones->str() : "-") << ", components=" << components << ")";
  return out.str();
}

Fingerprint fingerprint(const PlanarDiagram& d, int simplify_steps, int bracket_budget) {
  PlanarDiagram s = reidemeister_simplify(d, simplify_steps);
  Fingerprint fp;
  fp.components = s.component_count();
  if (fp.components == 1) {
    fp.v2 = v2(s);
    fp.v3 = v3(s);
  }
  if (s.crossing_count() <= bracket_budget) fp.jones = jones(s, bracket_budget);
  return fp;
}

}  // namespace knotkit
