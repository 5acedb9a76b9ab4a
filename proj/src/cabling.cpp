#include "legfront/cabling.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "legfront/error.hpp"

namespace legfront {

namespace {

/// Emits the copied front event by event, every host event becoming a block
/// of events on the p strands of each host strand.
class CopyBuilder {
 public:
  CopyBuilder(int p, const std::vector<bool>* host_switch) : p_(p), host_switch_(host_switch) {}

  void left_cusp(int base) {
    for (int c = 1; c <= p_; ++c) {
      emit(legfront::left_cusp(base + 2 * c - 1));
    }
    // Interleaved lower/upper pairs sort into a lower block and an upper
    // block; U_c passes over L_d for every c < d.
    std::vector<int> key(static_cast<std::size_t>(2 * p_));
    for (int c = 1; c <= p_; ++c) {
      key[static_cast<std::size_t>(2 * c - 2)] = c;
      key[static_cast<std::size_t>(2 * c - 1)] = p_ + c;
    }
    sort(base, key, [&](int lo, int hi) {
      return CopyTag{CopyTag::Kind::Cusp, -1, host_column_, lo - p_, hi};
    });
  }

  void right_cusp(int base) {
    std::vector<int> key(static_cast<std::size_t>(2 * p_));
    for (int s = 1; s <= p_; ++s) {
      key[static_cast<std::size_t>(s - 1)] = 2 * s - 2;
      key[static_cast<std::size_t>(p_ + s - 1)] = 2 * s - 1;
    }
    sort(base, key, [&](int lo, int hi) {
      return CopyTag{CopyTag::Kind::Cusp, -1, host_column_, (hi + 1) / 2, lo / 2 + 1};
    });
    for (int s = p_; s >= 1; --s) {
      emit(legfront::right_cusp(base + 2 * s - 1));
    }
  }

  void nested_left_cusp(int base) {
    for (int j = 1; j <= p_; ++j) {
      emit(legfront::left_cusp(base + j));
    }
  }

  void nested_right_cusp(int base) {
    for (int j = p_; j >= 1; --j) emit(legfront::right_cusp(base + j));
  }

  void twist(int base, int r) {
    for (int shift = 0; shift < r; ++shift)
      for (int pos = base + 2 * p_ - 2; pos >= base + p_; --pos) {
        gamma_.push_back(static_cast<int>(events_.size()));
        cross(pos, CopyTag{CopyTag::Kind::Twist, -1, -1, 0, 0}, true);
      }
  }

  void host_crossing(int base) {
    std::vector<int> key(static_cast<std::size_t>(2 * p_));
    for (int s = 0; s < p_; ++s) {
      key[static_cast<std::size_t>(s)] = p_ + s;
      key[static_cast<std::size_t>(p_ + s)] = s;
    }
    bool in_ruling = host_switch_ && (*host_switch_)[static_cast<std::size_t>(host_column_)];
    sort(
        base, key, [&](int lo, int hi) { return CopyTag{CopyTag::Kind::Host, -1, host_column_, lo - p_ + 1, hi + 1}; },
        in_ruling);
  }

  void set_host_column(int c) { host_column_ = c; }

  CopiedFront finish() { return {FrontDiagram(std::move(events_)), std::move(tags_)}; }
  SwitchSet take_phi() {
    std::sort(phi_.begin(), phi_.end());
    return std::move(phi_);
  }
  SwitchSet take_gamma() { return std::move(gamma_); }

 private:
  void emit(Event e) { events_.push_back(e); }

  void cross(int pos, CopyTag tag, bool switched) {
    tag.column = static_cast<int>(events_.size());
    emit(crossing(pos + 1));
    tags_.push_back(tag);
    if (switched) phi_.push_back(tag.column);
  }

  /// Bubble sort of the 2p strands from `base` by `key`. Each swap is one
  /// crossing; the same pair of strands never meets twice. With `diagonal`,
  /// crossings between equal slots of the two blocks are switches: smoothing
  /// them leaves every strand at its own position.
  template <typename Tag>
  void sort(int base, std::vector<int> key, Tag tag, bool diagonal = false) {
    for (bool changed = true; changed;) {
      changed = false;
      for (int s = 0; s + 1 < 2 * p_; ++s) {
        auto lo = static_cast<std::size_t>(s);
        if (key[lo] <= key[lo + 1]) continue;
        int pos = base + s;
        CopyTag t = tag(key[lo], key[lo + 1]);
        cross(pos, t, diagonal && t.i == t.j);
        std::swap(key[lo], key[lo + 1]);
        changed = true;
      }
    }
  }

  int p_;
  const std::vector<bool>* host_switch_;
  int host_column_ = -1;
  std::vector<Event> events_;
  std::vector<CopyTag> tags_;
  SwitchSet phi_;
  SwitchSet gamma_;
};

void require_knot_front(const FrontDiagram& front) {
  ValidationReport v = validate(front);
  if (!v.ok) throw Error(ErrorKind::InvalidFront, v.message);
  if (v.components == 0) throw Error(ErrorKind::EmptyDiagram, "empty diagram");
  if (v.components != 1) throw Error(ErrorKind::MultiComponent, "copies need a knot front");
}

void require_p(int p) {
  if (p < 2) throw Error(ErrorKind::InvalidArgument, "p must be at least 2, got " + std::to_string(p));
}

struct BuildPlan {
  int p = 2;
  int nested_left = -1;
  int nested_right = -1;
  int r = 0;
  const std::vector<bool>* host_switch = nullptr;
};

CopyBuilder build(const FrontDiagram& front, const BuildPlan& plan) {
  CopyBuilder b(plan.p, plan.host_switch);
  for (int c = 0; c < front.size(); ++c) {
    const Event& e = front[c];
    int base = (e.level - 1) * plan.p;
    b.set_host_column(c);
    switch (e.kind) {
      case EventKind::LeftCusp:
        if (c == plan.nested_left) {
          b.nested_left_cusp(base);
          b.twist(base, plan.r);
        } else {
          b.left_cusp(base);
        }
        break;
      case EventKind::RightCusp:
        if (c == plan.nested_right) b.nested_right_cusp(base);
        else b.right_cusp(base);
        break;
      case EventKind::Crossing:
        b.host_crossing(base);
        break;
    }
  }
  return b;
}

}  // namespace

std::vector<Event> twist_box(int p, int r) {
  require_p(p);
  if (r < 0) throw Error(ErrorKind::FormulaRange, "twist box needs r >= 0, got " + std::to_string(r));
  std::vector<Event> out;
  for (int shift = 0; shift < r; ++shift)
    for (int level = p - 1; level >= 1; --level) out.push_back(crossing(level));
  return out;
}

CopiedFront p_copy(const FrontDiagram& front, int p) {
  require_p(p);
  require_knot_front(front);
  BuildPlan plan;
  plan.p = p;
  return build(front, plan).finish();
}

SwitchSet copy_of(const CopiedFront& copied, const SwitchSet& host_switches, int i) {
  SwitchSet out;
  for (const CopyTag& t : copied.copymap)
    if (t.kind == CopyTag::Kind::Host && t.i == i && t.j == i &&
        std::binary_search(host_switches.begin(), host_switches.end(), t.host_column))
      out.push_back(t.column);
  return out;
}

int predicted_cable_tb(int t, int p, int q) { return t * p * p + (q - t * p) * (p - 1); }

CabledFront cable_front(const FrontDiagram& front, const SwitchSet& host_ruling, int p, int q, CableOptions opts) {
  require_p(p);
  require_knot_front(front);
  SwitchSet lambda = host_ruling;
  std::sort(lambda.begin(), lambda.end());
  lambda.erase(std::unique(lambda.begin(), lambda.end()), lambda.end());
  RulingVerdict v = is_ruling(front, lambda);
  if (!v.ok) throw Error(ErrorKind::InvalidArgument, "host switch set is not a ruling: " + v.message);

  CableParams params;
  params.p = p;
  params.q = q;
  params.t = tb(orient(front));
  params.r = q - params.t * p - p;
  if (params.r < 0) {
    int lowest = params.t * p + p;
    throw Error(ErrorKind::FormulaRange, "formula range violated: q = " + std::to_string(q) +
                                             " but the cable formula needs q >= tb*p + p = " + std::to_string(lowest) +
                                             "; it does not hold for q <= tb*p + p - 1 = " +
                                             std::to_string(lowest - 1));
  }
  int g = std::gcd(p, q);
  if (g != 1 && !opts.allow_link)
    throw Error(ErrorKind::InvalidArgument, "gcd(p, q) = " + std::to_string(g) +
                                                " gives a " + std::to_string(g) +
                                                "-component link; allow links to build it");

  std::vector<bool> in_lambda(static_cast<std::size_t>(front.size()), false);
  for (int c : lambda) in_lambda[static_cast<std::size_t>(c)] = true;
  BuildPlan plan;
  plan.p = p;
  plan.nested_left = 0;
  // The two nests must close up the same eye of the host ruling, so that
  // the smoothed cable is p parallel copies of the smoothed host.
  plan.nested_right = make_ruling(front, lambda).eyes.front().right_column;
  plan.r = params.r;
  plan.host_switch = &in_lambda;
  CopyBuilder b = build(front, plan);
  CabledFront out;
  out.phi = b.take_phi();
  out.gamma = b.take_gamma();
  out.copied = b.finish();
  out.params = params;
  ValidationReport check = validate(out.copied.front);
  if (!check.ok) throw std::logic_error("cable construction produced an invalid front: " + check.message);
  return out;
}

CableReport verify_cable_formula(const FrontDiagram& front, const SwitchSet& host_ruling, int p, int q,
                                 CableOptions opts) {
  CabledFront cable = cable_front(front, host_ruling, p, q, opts);
  CableReport rep;
  rep.params = cable.params;
  rep.gamma_size = static_cast<int>(cable.gamma.size());
  rep.predicted_tb = predicted_cable_tb(cable.params.t, p, q);
  OrientedFront oriented = orient(cable.copied.front);
  rep.measured_tb = link_tb(oriented);
  rep.components = oriented.strands().component_count;
  rep.expected_components = std::gcd(p, q);
  rep.ruling = is_ruling(cable.copied.front, cable.phi);
  rep.agree = rep.ruling.ok && rep.predicted_tb == rep.measured_tb && rep.components == rep.expected_components &&
              rep.gamma_size == (p - 1) * cable.params.r;
  return rep;
}

std::string serialize_copymap(const std::vector<CopyTag>& tags) {
  std::ostringstream out;
  out << "copymap v1\n";
  for (const CopyTag& t : tags) {
    out << t.column << ' ';
    switch (t.kind) {
      case CopyTag::Kind::Host:
        out << "host " << t.host_column << ' ' << t.i << ' ' << t.j;
        break;
      case CopyTag::Kind::Cusp:
        out << "cusp " << t.host_column << ' ' << t.i << ' ' << t.j;
        break;
      case CopyTag::Kind::Twist:
        out << "twist";
        break;
    }
    out << '\n';
  }
  return out.str();
}

std::string serialize(const CableReport& r) {
  std::ostringstream out;
  out << "cable v1\n"
      << "p " << r.params.p << "\n"
      << "q " << r.params.q << "\n"
      << "t " << r.params.t << "\n"
      << "r " << r.params.r << "\n"
      << "gamma " << r.gamma_size << "\n"
      << "predicted_tb " << r.predicted_tb << "\n"
      << "measured_tb " << r.measured_tb << "\n"
      << "components " << r.components << "\n"
      << "expected_components " << r.expected_components << "\n"
      << "ruling " << (r.ruling.ok ? "ok" : "fail");
  if (!r.ruling.ok) out << " (" << r.ruling.message << ")";
  out << "\n"
      << "agree " << (r.agree ? "yes" : "no") << "\n";
  return out.str();
}

}  // namespace legfront
