#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "util.hpp"

namespace knotkit {

using ArcId = int;

/// One crossing of a planar diagram. `end[0]` is the incoming under-strand
/// arc; the remaining ends are listed counterclockwise from it. The
/// under-strand runs end[0] -> end[2]; the over-strand occupies ends 1 and 3,
/// its direction recovered from global orientation consistency.
///
/// Sign convention (fixed project-wide): a crossing is positive exactly when
/// the over-strand runs from end[1] to end[3].
struct Crossing {
  std::array<ArcId, 4> end{0, 0, 0, 0};

  bool operator==(const Crossing&) const = default;
};

struct Violation {
  std::string kind;    // arc-label | arc-occurrence | orientation | component-count | non-planar
  std::string detail;  // offending labels, human-readable
};

/// An oriented link diagram as a PD code plus a total component count
/// (components with no crossings are tracked only by count). Immutable after
/// construction; all rewriting operations return new diagrams.
///
/// Arc labels are arbitrary positive integers. Orientation, crossing signs,
/// the dart/face structure of the underlying 4-valent map, and planarity are
/// resolved eagerly; query methods require a valid diagram.
class PlanarDiagram {
public:
  PlanarDiagram() : components_(0) { resolve(); }
  PlanarDiagram(std::vector<Crossing> crossings, int components);

  static PlanarDiagram unknot(int circles = 1) { return PlanarDiagram({}, circles); }

  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int component_count() const { return components_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  const Crossing& crossing(int c) const { return crossings_.at(c); }

  const std::vector<Violation>& validate() const { return violations_; }
  bool is_valid() const { return violations_.empty(); }
  void require_valid() const;

  // --- resolved structure (valid diagrams only) ---

  /// +1 or -1 under the project sign convention.
  int sign(int c) const;
  /// 1 or 3: the position at which the over-strand enters crossing c.
  int over_entry_pos(int c) const;
  int writhe() const;
  bool is_entry(int c, int pos) const;

  std::vector<ArcId> arcs() const;
  int arc_count() const;
  /// Successor arc along the strand orientation.
  ArcId next_arc(ArcId a) const;

  struct Occ {
    int crossing = -1;
    int pos = -1;
  };
  /// Where arc a terminates (enters a crossing) / originates (exits one).
  Occ entry_of(ArcId a) const;
  Occ exit_of(ArcId a) const;

  int traced_component_count() const;
  int free_loop_count() const { return components_ - traced_component_count(); }
  /// Component index (0-based; traced components ordered by smallest arc).
  int component_of_arc(ArcId a) const;
  /// Arcs of a traced component in walk order, starting at its smallest arc.
  std::vector<ArcId> component_arcs(int traced_component) const;

  // --- dart / face structure ---
  // A dart is an arc-end: dart id = 4*crossing + position. alpha swaps the
  // two ends of an arc, sigma rotates counterclockwise at a crossing, and
  // faces are the orbits of sigma∘alpha. Dart d names the corner between
  // sigma^-1(d) and d.

  int dart_count() const { return 4 * crossing_count(); }
  int alpha(int dart) const;
  int sigma(int dart) const { return (dart & ~3) | ((dart + 1) & 3); }
  int face_of_dart(int dart) const;
  int face_count() const;
  /// Face seen to the left / right of arc a when walking along it.
  int left_face(ArcId a) const;
  int right_face(ArcId a) const;
  std::vector<int> face_darts(int face) const;
  /// Total genus over connected pieces of the 4-valent graph; 0 iff the
  /// diagram is realizable in the plane piece by piece.
  int genus() const { return genus_; }

  // --- elementary rewrites (pure) ---

  PlanarDiagram with_crossing_changed(int c) const;
  PlanarDiagram with_crossings_changed(const std::vector<int>& cs) const;
  PlanarDiagram mirrored() const;
  PlanarDiagram reversed() const;
  /// Join d1 and d2 along the named arcs (oriented connected sum). A
  /// 0-crossing unknot operand acts as the identity.
  static PlanarDiagram connected_sum(const PlanarDiagram& d1, ArcId arc1, const PlanarDiagram& d2,
                                     ArcId arc2);

  // --- canonical form ---

  /// Equality key: minimal serialization over all relabelings that renumber
  /// arcs consecutively along each component. Same projection <=> same key.
  std::string canonical_key() const;
  PlanarDiagram canonical_form() const;

  // --- serialization: {"components": n, "crossings": [[a,b,c,d], ...]} ---

  std::string to_json() const;
  static PlanarDiagram from_json(const std::string& text);

  bool operator==(const PlanarDiagram& o) const {
    return components_ == o.components_ && crossings_ == o.crossings_;
  }

private:
  void resolve();
  std::string relabeled_serialization(const std::vector<int>& component_order,
                                      const std::vector<ArcId>& start_arcs) const;

  std::vector<Crossing> crossings_;
  int components_;

  std::vector<Violation> violations_;
  std::vector<int> over_entry_;           // per crossing: 1 or 3 (0 while unresolved)
  std::map<ArcId, Occ> entry_occ_;        // arc -> occurrence where it enters
  std::map<ArcId, Occ> exit_occ_;         // arc -> occurrence where it exits
  std::map<ArcId, ArcId> next_arc_;
  std::map<ArcId, int> arc_component_;    // traced component index
  std::vector<ArcId> component_start_;    // smallest arc per traced component
  std::vector<int> face_of_dart_;         // per dart
  int face_count_ = 0;
  int genus_ = 0;
};

}  // namespace knotkit
