#pragma once

#include <string>
#include <vector>

#include "legfront/front.hpp"
#include "legfront/rulings.hpp"

namespace legfront {

/// Where a crossing of a copied front comes from. For `Host`, i and j are
/// the slots (1 = bottom of its block) of the ascending and descending
/// strand at host crossing `host_column`. For `Cusp`, the crossing sits next
/// to host cusp `host_column` between the upper strand of copy i and the
/// lower strand of copy j. `Twist` crossings belong to the twist box.
struct CopyTag {
  enum class Kind { Host, Cusp, Twist };
  Kind kind = Kind::Host;
  int column = -1;
  int host_column = -1;
  int i = 0;
  int j = 0;
  friend bool operator==(const CopyTag&, const CopyTag&) = default;
};

struct CopiedFront {
  FrontDiagram front;
  std::vector<CopyTag> copymap;  // one entry per crossing, by column
};

/// p copies of a knot front, each shifted slightly upward in z. Host blocks
/// become p x p crossing grids; since the copies are Legendrian push-offs,
/// every cusp also picks up p(p-1)/2 crossings where the copies pass
/// through one another. Throws on links and p < 2.
CopiedFront p_copy(const FrontDiagram& front, int p);

/// Copy i (1-based) of a host switch set inside a copied front.
SwitchSet copy_of(const CopiedFront& copied, const SwitchSet& host_switches, int i);

/// r cyclic shifts of p strands at levels 1..p, each moving the top strand to
/// the bottom with p-1 crossings.
std::vector<Event> twist_box(int p, int r);

struct CableParams {
  int p = 2;
  int q = 1;
  int t = 0;  // tb of the host front
  int r = 0;  // q - t p - p
};

struct CableOptions {
  bool allow_link = false;
};

struct CabledFront {
  CopiedFront copied;
  CableParams params;
  SwitchSet gamma;  // the twist-box crossings
  SwitchSet phi;    // gamma plus the diagonal copies of the host ruling
};

/// (p, q)-cable of `front` built from the push-off copies: the two cusps of
/// the host eye born at column 0 are opened into nests of p cusps, and
/// twist_box(p, r) sits on the upper strands just after the left nest.
/// `host_ruling` must be a ruling of `front`. Requires q >= t p + p, and
/// gcd(p, q) = 1 unless links are allowed.
CabledFront cable_front(const FrontDiagram& front, const SwitchSet& host_ruling, int p, int q,
                        CableOptions opts = {});

struct CableReport {
  CableParams params;
  int gamma_size = 0;
  int predicted_tb = 0;
  int measured_tb = 0;
  int components = 0;
  int expected_components = 0;
  RulingVerdict ruling;
  bool agree = false;
};

/// t p^2 + (q - t p)(p - 1).
int predicted_cable_tb(int t, int p, int q);

/// Builds the cable and compares it with the formula. For links, tb is the
/// total writhe minus right cusps.
CableReport verify_cable_formula(const FrontDiagram& front, const SwitchSet& host_ruling, int p, int q,
                                 CableOptions opts = {});

/// `copymap v1`, then `<column> host <host column> <i> <j>`,
/// `<column> cusp <host column> <i> <j>` or `<column> twist`.
std::string serialize_copymap(const std::vector<CopyTag>& tags);
std::string serialize(const CableReport& report);

}  // namespace legfront
