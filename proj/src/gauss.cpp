#include "gauss.hpp"

#include <map>
#include <sstream>

namespace knotkit {

std::string GaussCode::to_text() const {
  std::ostringstream out;
  bool first_comp = true;
  for (const auto& comp : components) {
    if (!first_comp) out << " ; ";
    first_comp = false;
    bool first = true;
    for (const auto& p : comp) {
      if (!first) out << " ";
      first = false;
      out << (p.over ? "O" : "U") << p.crossing << (p.sign > 0 ? "+" : "-");
    }
  }
  for (int i = 0; i < free_loops; ++i) {
    if (!first_comp) out << " ;";
    first_comp = false;
  }
  return out.str();
}

GaussCode GaussCode::from_text(const std::string& text) {
  GaussCode g;
  std::vector<std::string> segments;
  {
    std::string cur;
    for (char ch : text) {
      if (ch == ';') {
        segments.push_back(cur);
        cur.clear();
      } else {
        cur.push_back(ch);
      }
    }
    segments.push_back(cur);
  }
  bool any_token = false;
  for (const auto& seg : segments) {
    std::istringstream in(seg);
    std::string tok;
    std::vector<GaussPass> comp;
    while (in >> tok) {
      any_token = true;
      if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
        throw input_error("bad Gauss token '" + tok + "' (expected O<id><sign> or U<id><sign>)");
      char sign_ch = tok.back();
      if (sign_ch != '+' && sign_ch != '-') throw input_error("bad Gauss token '" + tok + "': missing sign");
      int id;
      try {
        size_t used = 0;
        id = std::stoi(tok.substr(1, tok.size() - 2), &used);
        if (used != tok.size() - 2) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw input_error("bad Gauss token '" + tok + "': crossing id not an integer");
      }
      comp.push_back({id, tok[0] == 'O', sign_ch == '+' ? +1 : -1});
    }
    if (comp.empty())
      g.free_loops++;
    else
      g.components.push_back(std::move(comp));
  }
  if (!any_token && segments.size() == 1) {
    // A fully empty text denotes the unknot.
    g.free_loops = 1;
  }
  return g;
}

GaussCode gauss_from_pd(const PlanarDiagram& d) {
  d.require_valid();
  GaussCode g;
  for (int comp = 0; comp < d.traced_component_count(); ++comp) {
    std::vector<GaussPass> passes;
    for (ArcId a : d.component_arcs(comp)) {
      auto e = d.entry_of(a);
      passes.push_back({e.crossing + 1, e.pos != 0, d.sign(e.crossing)});
    }
    g.components.push_back(std::move(passes));
  }
  g.free_loops = d.free_loop_count();
  return g;
}

PlanarDiagram pd_from_gauss(const GaussCode& g) {
  struct Side {
    ArcId in = 0, out = 0;
    int sign = 0;
    bool seen = false;
  };
  std::map<int, Side> over, under;
  int next_arc = 1;
  for (const auto& comp : g.components) {
    int k = static_cast<int>(comp.size());
    int base = next_arc;
    next_arc += k;
    for (int i = 0; i < k; ++i) {
      const GaussPass& p = comp[i];
      if (p.sign != 1 && p.sign != -1) throw input_error("Gauss pass sign must be +1 or -1");
      Side& s = (p.over ? over : under)[p.crossing];
      if (s.seen)
        throw input_error("crossing " + std::to_string(p.crossing) + " passed " +
                          (p.over ? "over" : "under") + " twice");
      s.seen = true;
      s.in = base + i;
      s.out = base + ((i + 1) % k);
      s.sign = p.sign;
    }
  }
  std::vector<Crossing> crossings;
  for (const auto& [id, u] : under) {
    auto it = over.find(id);
    if (it == over.end())
      throw input_error("crossing " + std::to_string(id) + " has no over-pass");
    const Side& o = it->second;
    if (o.sign != u.sign)
      throw input_error("crossing " + std::to_string(id) + " has mismatched signs on its two passes");
    Crossing c;
    if (u.sign > 0)
      c.end = {u.in, o.in, u.out, o.out};
    else
      c.end = {u.in, o.out, u.out, o.in};
    crossings.push_back(c);
  }
  for (const auto& [id, o] : over) {
    (void)o;
    if (under.find(id) == under.end())
      throw input_error("crossing " + std::to_string(id) + " has no under-pass");
  }
  PlanarDiagram d(std::move(crossings), g.component_count());
  if (!d.is_valid()) {
    std::ostringstream out;
    out << "Gauss code is not realizable:";
    for (const auto& v : d.validate()) out << " [" << v.kind << "] " << v.detail << ";";
    throw input_error(out.str());
  }
  return d;
}

}  // namespace knotkit
