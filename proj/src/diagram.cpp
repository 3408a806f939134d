#include "diagram.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

namespace knotkit {

namespace {

std::array<ArcId, 4> rotated(const std::array<ArcId, 4>& t, int by) {
  std::array<ArcId, 4> r;
  for (int i = 0; i < 4; ++i) r[i] = t[(i + by) & 3];
  return r;
}

}  // namespace

PlanarDiagram::PlanarDiagram(std::vector<Crossing> crossings, int components)
    : crossings_(std::move(crossings)), components_(components) {
  resolve();
}

void PlanarDiagram::require_valid() const {
  if (violations_.empty()) return;
  std::ostringstream out;
  out << "invalid diagram:";
  for (const auto& v : violations_) out << " [" << v.kind << "] " << v.detail << ";";
  throw input_error(out.str());
}

void PlanarDiagram::resolve() {
  violations_.clear();
  over_entry_.assign(crossings_.size(), 0);
  entry_occ_.clear();
  exit_occ_.clear();
  next_arc_.clear();
  arc_component_.clear();
  component_start_.clear();
  face_of_dart_.clear();
  face_count_ = 0;
  genus_ = 0;

  if (components_ < 0) violations_.push_back({"component-count", "negative component count"});

  const int n = crossing_count();
  std::map<ArcId, std::vector<Occ>> occ;
  for (int c = 0; c < n; ++c) {
    for (int p = 0; p < 4; ++p) {
      ArcId a = crossings_[c].end[p];
      if (a < 1) {
        violations_.push_back({"arc-label", "crossing " + std::to_string(c) + " has non-positive arc label"});
        return;
      }
      occ[a].push_back({c, p});
    }
  }
  for (const auto& [a, os] : occ) {
    if (os.size() != 2)
      violations_.push_back({"arc-occurrence", "arc " + std::to_string(a) + " appears " +
                                                   std::to_string(os.size()) + " time(s), expected 2"});
  }
  if (!violations_.empty()) return;

  // Orientation: decide per crossing whether the over-strand enters at
  // position 1 or 3, so that every arc has exactly one entry and one exit.
  // Positions 0/2 are forced (under in/out); constraints propagate through
  // arcs. Leftover freedom (components that never pass under) is resolved by
  // the smallest undetermined crossing entering at position 1.
  auto entry_state = [&](const Occ& o) -> int {  // -1 unknown, 0 exit, 1 entry
    if (o.pos == 0) return 1;
    if (o.pos == 2) return 0;
    if (over_entry_[o.crossing] == 0) return -1;
    return over_entry_[o.crossing] == o.pos ? 1 : 0;
  };
  bool inconsistent = false;
  while (true) {
    bool progress = false;
    for (const auto& [a, os] : occ) {
      int k0 = entry_state(os[0]), k1 = entry_state(os[1]);
      if (k0 >= 0 && k1 >= 0) {
        if (k0 == k1 && !inconsistent) {
          inconsistent = true;
          violations_.push_back({"orientation", "arc " + std::to_string(a) +
                                                    " cannot be oriented consistently"});
        }
      } else if (k0 >= 0 && k1 < 0) {
        over_entry_[os[1].crossing] = (k0 == 1) ? (os[1].pos == 1 ? 3 : 1) : os[1].pos;
        progress = true;
      } else if (k1 >= 0 && k0 < 0) {
        over_entry_[os[0].crossing] = (k1 == 1) ? (os[0].pos == 1 ? 3 : 1) : os[0].pos;
        progress = true;
      }
    }
    if (progress) continue;
    int free_c = -1;
    for (int c = 0; c < n; ++c)
      if (over_entry_[c] == 0) {
        free_c = c;
        break;
      }
    if (free_c < 0) break;
    over_entry_[free_c] = 1;
  }
  if (inconsistent) return;

  for (const auto& [a, os] : occ) {
    for (const auto& o : os) {
      if (entry_state(o) == 1)
        entry_occ_[a] = o;
      else
        exit_occ_[a] = o;
    }
    if (entry_occ_.count(a) == 0 || exit_occ_.count(a) == 0) {
      violations_.push_back({"orientation", "arc " + std::to_string(a) + " lacks an entry/exit pairing"});
      return;
    }
  }

  // Successor structure and components.
  for (const auto& [a, o] : entry_occ_) {
    const auto& t = crossings_[o.crossing].end;
    int out_pos;
    if (o.pos == 0)
      out_pos = 2;
    else
      out_pos = (o.pos == 1) ? 3 : 1;
    next_arc_[a] = t[out_pos];
  }
  std::set<ArcId> unvisited;
  for (const auto& [a, _] : occ) unvisited.insert(a);
  while (!unvisited.empty()) {
    ArcId start = *unvisited.begin();
    int comp = static_cast<int>(component_start_.size());
    component_start_.push_back(start);
    ArcId a = start;
    do {
      arc_component_[a] = comp;
      unvisited.erase(a);
      a = next_arc_[a];
    } while (a != start);
  }
  if (components_ < traced_component_count()) {
    violations_.push_back({"component-count",
                           "declared " + std::to_string(components_) + " component(s) but the code traces " +
                               std::to_string(traced_component_count())});
    return;
  }

  // Faces: orbits of sigma∘alpha on darts; genus summed per connected piece.
  const int dn = dart_count();
  face_of_dart_.assign(dn, -1);
  auto alpha_of = [&](int d) {
    int c = d / 4, p = d & 3;
    ArcId a = crossings_[c].end[p];
    const auto& os = occ[a];
    Occ other = (os[0].crossing == c && os[0].pos == p) ? os[1] : os[0];
    return 4 * other.crossing + other.pos;
  };
  for (int d = 0; d < dn; ++d) {
    if (face_of_dart_[d] >= 0) continue;
    int f = face_count_++;
    int cur = d;
    do {
      face_of_dart_[cur] = f;
      cur = sigma(alpha_of(cur));
    } while (cur != d);
  }

  // Connected pieces over crossings.
  std::vector<int> piece(n, -1);
  int pieces = 0;
  for (int c0 = 0; c0 < n; ++c0) {
    if (piece[c0] >= 0) continue;
    int id = pieces++;
    std::vector<int> stack{c0};
    piece[c0] = id;
    while (!stack.empty()) {
      int c = stack.back();
      stack.pop_back();
      for (int p = 0; p < 4; ++p) {
        int d2 = alpha_of(4 * c + p);
        int c2 = d2 / 4;
        if (piece[c2] < 0) {
          piece[c2] = id;
          stack.push_back(c2);
        }
      }
    }
  }
  std::vector<int> pv(pieces, 0), pe(pieces, 0);
  std::vector<std::set<int>> pf(pieces);
  for (int c = 0; c < n; ++c) pv[piece[c]]++;
  for (const auto& [a, o] : exit_occ_) {
    (void)a;
    pe[piece[o.crossing]]++;
  }
  for (int d = 0; d < dn; ++d) pf[piece[d / 4]].insert(face_of_dart_[d]);
  for (int i = 0; i < pieces; ++i) {
    int chi = pv[i] - pe[i] + static_cast<int>(pf[i].size());
    genus_ += (2 - chi) / 2;
  }
  if (genus_ != 0)
    violations_.push_back({"non-planar", "total genus " + std::to_string(genus_) +
                                             ", the code admits no planar realization"});
}

int PlanarDiagram::sign(int c) const {
  require_valid();
  if (c < 0 || c >= crossing_count()) throw input_error("unknown crossing id " + std::to_string(c));
  return over_entry_[c] == 1 ? +1 : -1;
}

int PlanarDiagram::over_entry_pos(int c) const {
  require_valid();
  if (c < 0 || c >= crossing_count()) throw input_error("unknown crossing id " + std::to_string(c));
  return over_entry_[c];
}

int PlanarDiagram::writhe() const {
  require_valid();
  int w = 0;
  for (int c = 0; c < crossing_count(); ++c) w += sign(c);
  return w;
}

bool PlanarDiagram::is_entry(int c, int pos) const {
  require_valid();
  if (pos == 0) return true;
  if (pos == 2) return false;
  return over_entry_[c] == pos;
}

std::vector<ArcId> PlanarDiagram::arcs() const {
  require_valid();
  std::vector<ArcId> out;
  out.reserve(entry_occ_.size());
  for (const auto& [a, _] : entry_occ_) out.push_back(a);
  return out;
}

int PlanarDiagram::arc_count() const {
  require_valid();
  return static_cast<int>(entry_occ_.size());
}

ArcId PlanarDiagram::next_arc(ArcId a) const {
  require_valid();
  auto it = next_arc_.find(a);
  if (it == next_arc_.end()) throw input_error("unknown arc " + std::to_string(a));
  return it->second;
}

PlanarDiagram::Occ PlanarDiagram::entry_of(ArcId a) const {
  require_valid();
  auto it = entry_occ_.find(a);
  if (it == entry_occ_.end()) throw input_error("unknown arc " + std::to_string(a));
  return it->second;
}

PlanarDiagram::Occ PlanarDiagram::exit_of(ArcId a) const {
  require_valid();
  auto it = exit_occ_.find(a);
  if (it == exit_occ_.end()) throw input_error("unknown arc " + std::to_string(a));
  return it->second;
}

int PlanarDiagram::traced_component_count() const { return static_cast<int>(component_start_.size()); }

int PlanarDiagram::component_of_arc(ArcId a) const {
  require_valid();
  auto it = arc_component_.find(a);
  if (it == arc_component_.end()) throw input_error("unknown arc " + std::to_string(a));
  return it->second;
}

std::vector<ArcId> PlanarDiagram::component_arcs(int traced_component) const {
  require_valid();
  if (traced_component < 0 || traced_component >= traced_component_count())
    throw input_error("unknown traced component " + std::to_string(traced_component));
  std::vector<ArcId> out;
  ArcId start = component_start_[traced_component];
  ArcId a = start;
  do {
    out.push_back(a);
    a = next_arc_.at(a);
  } while (a != start);
  return out;
}

int PlanarDiagram::alpha(int dart) const {
  require_valid();
  int c = dart / 4, p = dart & 3;
  ArcId a = crossings_[c].end[p];
  Occ e = entry_occ_.at(a), x = exit_occ_.at(a);
  if (e.crossing == c && e.pos == p) return 4 * x.crossing + x.pos;
  return 4 * e.crossing + e.pos;
}

int PlanarDiagram::face_of_dart(int dart) const {
  require_valid();
  return face_of_dart_.at(dart);
}

int PlanarDiagram::face_count() const {
  require_valid();
  return face_count_;
}

int PlanarDiagram::left_face(ArcId a) const {
  Occ e = entry_of(a);
  return face_of_dart_.at(4 * e.crossing + e.pos);
}

int PlanarDiagram::right_face(ArcId a) const {
  Occ x = exit_of(a);
  return face_of_dart_.at(4 * x.crossing + x.pos);
}

std::vector<int> PlanarDiagram::face_darts(int face) const {
  require_valid();
  std::vector<int> out;
  for (int d = 0; d < dart_count(); ++d)
    if (face_of_dart_[d] == face) out.push_back(d);
  return out;
}

PlanarDiagram PlanarDiagram::with_crossing_changed(int c) const {
  return with_crossings_changed({c});
}

PlanarDiagram PlanarDiagram::with_crossings_changed(const std::vector<int>& cs) const {
  require_valid();
  if (crossing_count() == 0 && !cs.empty()) throw input_error("diagram has no crossings");
  auto next = crossings_;
  for (int c : cs) {
    if (c < 0 || c >= crossing_count()) throw input_error("unknown crossing id " + std::to_string(c));
    // Rotating to start at the over-strand's entry swaps the strands' roles
    // while preserving the counterclockwise geometric order.
    next[c].end = rotated(next[c].end, over_entry_[c]);
  }
  return PlanarDiagram(std::move(next), components_);
}

PlanarDiagram PlanarDiagram::mirrored() const {
  require_valid();
  std::vector<int> all(crossing_count());
  std::iota(all.begin(), all.end(), 0);
  return with_crossings_changed(all);
}

PlanarDiagram PlanarDiagram::reversed() const {
  require_valid();
  auto next = crossings_;
  for (auto& cr : next) cr.end = rotated(cr.end, 2);
  return PlanarDiagram(std::move(next), components_);
}

PlanarDiagram PlanarDiagram::connected_sum(const PlanarDiagram& d1, ArcId arc1, const PlanarDiagram& d2,
                                           ArcId arc2) {
  d1.require_valid();
  d2.require_valid();
  if (d2.crossing_count() == 0) {
    if (d2.component_count() != 1) throw input_error("connected sum with a crossing-free multi-link");
    return d1;
  }
  if (d1.crossing_count() == 0) {
    if (d1.component_count() != 1) throw input_error("connected sum with a crossing-free multi-link");
    return d2;
  }
  d1.entry_of(arc1);  // existence checks
  d2.entry_of(arc2);

  ArcId offset = 0;
  for (ArcId a : d1.arcs()) offset = std::max(offset, a);
  auto out = d1.crossings_;
  Occ e1 = d1.entry_of(arc1);
  // d2 is spliced into arc1: d1's flow enters d2 at arc2's entry, and d2's
  // flow re-enters d1 where arc1 used to end.
  for (const auto& cr : d2.crossings_) {
    Crossing c2;
    for (int p = 0; p < 4; ++p) c2.end[p] = cr.end[p] + offset;
    out.push_back(c2);
  }
  Occ e2 = d2.entry_of(arc2);
  out[d1.crossing_count() + e2.crossing].end[e2.pos] = arc1;
  out[e1.crossing].end[e1.pos] = arc2 + offset;
  return PlanarDiagram(std::move(out), d1.components_ + d2.components_ - 1);
}

std::string PlanarDiagram::relabeled_serialization(const std::vector<int>& component_order,
                                                   const std::vector<ArcId>& start_arcs) const {
  std::map<ArcId, int> newlabel;
  int next = 1;
  for (size_t i = 0; i < component_order.size(); ++i) {
    ArcId a = start_arcs[i];
    ArcId start = a;
    do {
      newlabel[a] = next++;
      a = next_arc_.at(a);
    } while (a != start);
  }
  std::vector<std::array<int, 4>> tuples;
  tuples.reserve(crossings_.size());
  for (const auto& cr : crossings_) {
    std::array<int, 4> t;
    for (int p = 0; p < 4; ++p) t[p] = newlabel.at(cr.end[p]);
    tuples.push_back(t);
  }
  std::sort(tuples.begin(), tuples.end());
  std::ostringstream out;
  out << "c" << components_ << ";";
  for (const auto& t : tuples) out << t[0] << "," << t[1] << "," << t[2] << "," << t[3] << ";";
  return out.str();
}

std::string PlanarDiagram::canonical_key() const {
  require_valid();
  const int tc = traced_component_count();
  if (tc == 0) return "c" + std::to_string(components_) + ";";
  if (tc > 6) throw budget_error("canonical_key limited to 6 traced components");

  std::vector<int> order(tc);
  std::iota(order.begin(), order.end(), 0);
  std::optional<std::string> best;
  std::vector<std::vector<ArcId>> comp_arcs(tc);
  for (int i = 0; i < tc; ++i) comp_arcs[i] = component_arcs(i);

  do {
    // All start-arc combinations for this component order.
    std::vector<size_t> idx(tc, 0);
    while (true) {
      std::vector<ArcId> starts(tc);
      for (int i = 0; i < tc; ++i) starts[i] = comp_arcs[order[i]][idx[i]];
      std::string s = relabeled_serialization(order, starts);
      if (!best || s < *best) best = std::move(s);
      int pos = tc - 1;
      while (pos >= 0) {
        if (++idx[pos] < comp_arcs[order[pos]].size()) break;
        idx[pos] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return *best;
}

PlanarDiagram PlanarDiagram::canonical_form() const {
  std::string key = canonical_key();
  return from_json([&] {
    // key format: c<components>;a,b,c,d;...
    std::string body = key.substr(1);
    size_t semi = body.find(';');
    std::string comps = body.substr(0, semi);
    std::string rest = body.substr(semi + 1);
    std::ostringstream out;
    out << "{\"components\":" << comps << ",\"crossings\":[";
    bool first = true;
    size_t pos = 0;
    while (pos < rest.size()) {
      size_t end = rest.find(';', pos);
      std::string tuple = rest.substr(pos, end - pos);
      if (!tuple.empty()) {
        if (!first) out << ",";
        first = false;
        out << "[" << tuple << "]";
      }
      pos = end + 1;
    }
    out << "]}";
    return out.str();
  }());
}

std::string PlanarDiagram::to_json() const {
  nlohmann::ordered_json j;
  j["components"] = components_;
  auto arr = nlohmann::ordered_json::array();
  for (const auto& cr : crossings_) arr.push_back({cr.end[0], cr.end[1], cr.end[2], cr.end[3]});
  j["crossings"] = arr;
  return j.dump();
}

PlanarDiagram PlanarDiagram::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw input_error(std::string("diagram JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("components") || !j.contains("crossings"))
    throw input_error("diagram JSON must be {\"components\": int, \"crossings\": [[a,b,c,d],...]}");
  if (!j["components"].is_number_integer()) throw input_error("\"components\" must be an integer");
  std::vector<Crossing> cs;
  for (const auto& t : j["crossings"]) {
    if (!t.is_array() || t.size() != 4) throw input_error("each crossing must be a 4-tuple of arc labels");
    Crossing c;
    for (int p = 0; p < 4; ++p) {
      if (!t[p].is_number_integer()) throw input_error("arc labels must be integers");
      c.end[p] = t[p].get<int>();
    }
    cs.push_back(c);
  }
  return PlanarDiagram(std::move(cs), j["components"].get<int>());
}

}  // namespace knotkit
