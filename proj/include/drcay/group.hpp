#pragma once

// Finite abelian groups Z_m (+) Z_q with q | m. The main case is the
// p-power pair Z_{p^s} (+) Z_p; plain cyclic groups (q = 1) and
// Z_n (+) Z_2 appear as quotients and in the bipartite extension.
//
// Elements are addressed by rank(a, b) = a * q + b, a in [0, m), b in [0, q).
// For the pair flavor this is rank(a, b) = a * p + b.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "drcay/bits.hpp"
#include "drcay/error.hpp"

namespace drcay {

enum class Flavor { PrimePowerPair, Cyclic, Product };

struct GroupElement {
  int first = 0;   // residue modulo the first modulus
  int second = 0;  // residue modulo the second modulus
  friend bool operator==(const GroupElement&, const GroupElement&) = default;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

struct Subgroup {
  Bits members;
  int order = 1;
  std::vector<int> generators;  // ranks
  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.members == b.members; }
};

struct GroupAutomorphism {
  GroupElement image_first;   // image of (1,0)
  GroupElement image_second;  // image of (0,1)
  std::vector<std::uint16_t> table;

  [[nodiscard]] int apply(int rank) const { return table[static_cast<std::size_t>(rank)]; }

  template <class B>
  [[nodiscard]] B apply(const B& set) const {
    B out;
    set.for_each([&](int r) { out.set(table[static_cast<std::size_t>(r)]); });
    return out;
  }
};

namespace detail {

inline bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline long long ipow(long long b, int e) {
  long long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

struct GroupTables {
  int m = 1;
  int q = 1;
  int order = 1;
  std::vector<std::uint16_t> add;  // order x order
  std::vector<std::uint16_t> neg;

  mutable std::once_flag subgroups_once;
  mutable std::vector<Subgroup> subgroups;  // sorted by (order, members)
};

}  // namespace detail

class Group {
 public:
  /// Largest order supported by the fixed-width bit vectors.
  static constexpr int kMaxOrder = static_cast<int>(Bits::kCapacity);
  /// Default bound for automorphism enumeration (3^5).
  static constexpr int kAutomorphismBound = 243;

  /// Z_{p^s} (+) Z_p.
  static Group pair(int p, int s) {
    if (!detail::is_prime(p)) throw PreconditionError("pair group needs a prime p");
    if (s < 1) throw PreconditionError("pair group needs s >= 1");
    return Group(static_cast<int>(detail::ipow(p, s)), p);
  }

  static Group cyclic(int n) {
    if (n < 1) throw PreconditionError("cyclic group needs n >= 1");
    return Group(n, 1);
  }

  /// Z_m (+) Z_q with q | m. Normalizes to the pair flavor when m is a power
  /// of the prime q.
  static Group product(int m, int q) {
    if (m < 1 || q < 1 || m % q != 0) throw PreconditionError("product group needs q | m");
    return Group(m, q);
  }

  /// Parses "p^sxp" (e.g. "3^2x3"), "Zn:27" (cyclic) or "Zn:16x2".
  static Group parse(std::string_view text) {
    std::string t;
    for (char c : text)
      if (c != ' ') t.push_back(c);
    auto to_int = [&](std::string_view s) {
      if (s.empty()) throw ParseError("bad group string: " + std::string(text));
      int v = 0;
      for (char c : s) {
        if (c < '0' || c > '9') throw ParseError("bad group string: " + std::string(text));
        v = v * 10 + (c - '0');
        if (v > 1'000'000) throw ParseError("group modulus too large: " + std::string(text));
      }
      return v;
    };
    try {
      if (t.rfind("Zn:", 0) == 0) {
        std::string_view rest(t);
        rest.remove_prefix(3);
        const auto x = rest.find('x');
        if (x == std::string_view::npos) return cyclic(to_int(rest));
        return product(to_int(rest.substr(0, x)), to_int(rest.substr(x + 1)));
      }
      const auto caret = t.find('^');
      const auto x = t.find('x');
      if (caret == std::string::npos || x == std::string::npos || x < caret)
        throw ParseError("bad group string: " + std::string(text));
      const int p = to_int(std::string_view(t).substr(0, caret));
      const int s = to_int(std::string_view(t).substr(caret + 1, x - caret - 1));
      const int p2 = to_int(std::string_view(t).substr(x + 1));
      if (p != p2) throw ParseError("pair group needs matching primes: " + std::string(text));
      return pair(p, s);
    } catch (const PreconditionError& e) {
      throw ParseError(e.what());
    }
  }

  [[nodiscard]] std::string spec_string() const {
    std::ostringstream os;
    switch (flavor_) {
      case Flavor::PrimePowerPair: os << p_ << '^' << s_ << 'x' << p_; break;
      case Flavor::Cyclic: os << "Zn:" << m(); break;
      case Flavor::Product: os << "Zn:" << m() << 'x' << q(); break;
    }
    return os.str();
  }

  [[nodiscard]] Flavor flavor() const { return flavor_; }
  [[nodiscard]] int first_modulus() const { return t_->m; }
  [[nodiscard]] int second_modulus() const { return t_->q; }
  [[nodiscard]] int order() const { return t_->order; }
  /// Prime and exponent for the pair flavor; 0 otherwise.
  [[nodiscard]] int p() const { return p_; }
  [[nodiscard]] int s() const { return s_; }

  [[nodiscard]] int rank(GroupElement g) const { return g.first * q() + g.second; }
  [[nodiscard]] int rank(int a, int b) const {
    return pmod(a, m()) * q() + pmod(b, q());
  }
  [[nodiscard]] GroupElement element(int rank) const { return {rank / q(), rank % q()}; }

  static constexpr int identity() { return 0; }
  [[nodiscard]] int add(int a, int b) const {
    return t_->add[static_cast<std::size_t>(a) * static_cast<std::size_t>(order()) +
                   static_cast<std::size_t>(b)];
  }
  [[nodiscard]] int neg(int a) const { return t_->neg[static_cast<std::size_t>(a)]; }
  [[nodiscard]] int sub(int a, int b) const { return add(a, neg(b)); }
  /// k * g for any integer k.
  [[nodiscard]] int scale(long long k, int g) const {
    const auto e = element(g);
    return rank(static_cast<int>(pmodl(k * e.first, m())), static_cast<int>(pmodl(k * e.second, q())));
  }

  [[nodiscard]] Bits all() const { return Bits::prefix(order()); }
  [[nodiscard]] Bits translate(const Bits& set, int g) const {
    Bits out;
    set.for_each([&](int x) { out.set(add(x, g)); });
    return out;
  }
  [[nodiscard]] Bits negate(const Bits& set) const {
    Bits out;
    set.for_each([&](int x) { out.set(neg(x)); });
    return out;
  }
  [[nodiscard]] Bits scale(long long k, const Bits& set) const {
    Bits out;
    set.for_each([&](int x) { out.set(scale(k, x)); });
    return out;
  }

  /// Smallest t >= 1 with t*g = 0.
  [[nodiscard]] int element_order(int g) const {
    const auto e = element(g);
    const int o1 = m() / std::gcd(e.first, m());
    const int o2 = q() / std::gcd(e.second, q());
    return std::lcm(o1, o2);
  }

  [[nodiscard]] Bits cyclic_subgroup(int g) const {
    Bits out;
    int x = identity();
    do {
      out.set(x);
      x = add(x, g);
    } while (x != identity());
    return out;
  }

  /// Subgroup generated by an arbitrary subset.
  [[nodiscard]] Bits span_members(const Bits& set) const {
    Bits members;
    members.set(identity());
    set.for_each([&](int x) {
      if (members.test(x)) return;
      const Bits c = cyclic_subgroup(x);
      Bits sum;
      members.for_each([&](int a) { c.for_each([&](int b) { sum.set(add(a, b)); }); });
      members = sum;
    });
    return members;
  }

  [[nodiscard]] Subgroup span(const Bits& set) const {
    Subgroup h;
    h.members = span_members(set);
    h.order = h.members.count();
    h.generators = minimal_generators(h.members);
    return h;
  }

  /// Every subgroup, ordered by (order, lexicographic member list).
  [[nodiscard]] const std::vector<Subgroup>& all_subgroups() const {
    std::call_once(t_->subgroups_once, [this] { t_->subgroups = enumerate_subgroups(); });
    return t_->subgroups;
  }

  [[nodiscard]] std::vector<Subgroup> subgroups_of_order(int mo) const {
    std::vector<Subgroup> out;
    if (mo < 1 || order() % mo != 0) return out;
    for (const auto& h : all_subgroups())
      if (h.order == mo) out.push_back(h);
    return out;
  }

  /// Subgroups of prime index. A subset generates the group iff it lies in
  /// none of them.
  [[nodiscard]] std::vector<Subgroup> maximal_subgroups() const {
    std::vector<Subgroup> out;
    for (const auto& h : all_subgroups())
      if (h.order < order() && detail::is_prime(order() / h.order)) out.push_back(h);
    return out;
  }

  [[nodiscard]] bool generates(const Bits& set) const {
    for (const auto& mx : maximal_subgroups())
      if (set.subset_of(mx.members)) return false;
    return true;
  }

  /// Partition of the non-identity elements into {g, -g}, sorted by
  /// smallest rank. Involutions (g = -g) become singleton cells when
  /// allowed and are an error otherwise.
  [[nodiscard]] std::vector<std::vector<int>> inverse_pairs(bool allow_involutions = false) const {
    std::vector<std::vector<int>> out;
    for (int g = 1; g < order(); ++g) {
      const int h = neg(g);
      if (h < g) continue;
      if (h == g) {
        if (!allow_involutions)
          throw PreconditionError("group " + spec_string() + " has involutions");
        out.push_back({g});
      } else {
        out.push_back({g, h});
      }
    }
    return out;
  }

  /// Atoms [g] = {x : <x> = <g>} of the subgroup Boolean algebra.
  [[nodiscard]] std::vector<Bits> atom_partition() const {
    std::map<std::vector<int>, Bits> by_subgroup;
    for (int g = 0; g < order(); ++g) by_subgroup[cyclic_subgroup(g).indices()].set(g);
    std::vector<Bits> cells;
    for (auto& [key, cell] : by_subgroup) cells.push_back(cell);
    std::sort(cells.begin(), cells.end(),
              [](const Bits& a, const Bits& b) { return a.first() < b.first(); });
    return cells;
  }

  /// All automorphisms, by enumerating images of the canonical generators.
  [[nodiscard]] std::vector<GroupAutomorphism> automorphism_group(int bound = kAutomorphismBound) const {
    if (order() > bound)
      throw BudgetExceeded("automorphism enumeration bound exceeded for " + spec_string());
    std::vector<int> first_images, second_images;
    for (int g = 0; g < order(); ++g) {
      const int o = element_order(g);
      if (o == m()) first_images.push_back(g);
      if (o == q()) second_images.push_back(g);
    }
    std::vector<GroupAutomorphism> out;
    std::vector<std::uint16_t> table(static_cast<std::size_t>(order()));
    std::vector<char> seen(static_cast<std::size_t>(order()));
    for (int x : first_images) {
      for (int y : second_images) {
        std::fill(seen.begin(), seen.end(), 0);
        bool bijective = true;
        for (int a = 0; a < m() && bijective; ++a) {
          const int ax = scale(a, x);
          for (int b = 0; b < q(); ++b) {
            const int img = add(ax, scale(b, y));
            if (seen[static_cast<std::size_t>(img)]) {
              bijective = false;
              break;
            }
            seen[static_cast<std::size_t>(img)] = 1;
            table[static_cast<std::size_t>(rank(a, b))] = static_cast<std::uint16_t>(img);
          }
        }
        if (!bijective) continue;
        out.push_back({element(x), element(y), table});
      }
    }
    return out;
  }

  /// True iff A meets every coset g + H in exactly one element.
  [[nodiscard]] bool is_transversal(const Bits& set, const Subgroup& h) const {
    Bits covered;
    for (int g = 0; g < order(); ++g) {
      if (covered.test(g)) continue;
      const Bits coset = translate(h.members, g);
      if (coset.intersection_count(set) != 1) return false;
      covered |= coset;
    }
    return true;
  }

  [[nodiscard]] std::string format_element(int rank) const {
    const auto e = element(rank);
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
  }

  [[nodiscard]] std::vector<std::string> format_set(const Bits& set) const {
    std::vector<std::string> out;
    set.for_each([&](int r) { out.push_back(format_element(r)); });
    return out;
  }

  /// Parses "(a,b),(c,d),..." (a bare integer means (a,0)). Residues are
  /// reduced modulo the moduli.
  [[nodiscard]] Bits parse_set(std::string_view text) const {
    Bits out;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == ';')) ++i;
    };
    auto read_int = [&]() -> long long {
      bool neg_sign = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg_sign = text[i++] == '-';
      if (i >= text.size() || text[i] < '0' || text[i] > '9')
        throw ParseError("bad element list: " + std::string(text));
      long long v = 0;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
        v = v * 10 + (text[i++] - '0');
        if (v > 1'000'000'000) throw ParseError("element residue too large");
      }
      return neg_sign ? -v : v;
    };
    skip();
    while (i < text.size()) {
      long long a = 0, b = 0;
      if (text[i] == '(') {
        ++i;
        a = read_int();
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size() || text[i] != ',') throw ParseError("bad element list: " + std::string(text));
        ++i;
        while (i < text.size() && text[i] == ' ') ++i;
        b = read_int();
        while (i < text.size() && text[i] == ' ') ++i;
        if (i >= text.size() || text[i] != ')') throw ParseError("bad element list: " + std::string(text));
        ++i;
      } else {
        a = read_int();
      }
      out.set(rank(static_cast<int>(pmodl(a, m())), static_cast<int>(pmodl(b, q()))));
      skip();
    }
    return out;
  }

  /// A shortest generating list: empty for the trivial subgroup, one
  /// element when cyclic, otherwise two (every subgroup here is 2-generated).
  [[nodiscard]] std::vector<int> minimal_generators(const Bits& members) const {
    const int n = members.count();
    if (n == 1) return {};
    int best = -1;
    members.for_each([&](int g) {
      if (best < 0 && element_order(g) == n) best = g;
    });
    if (best >= 0) return {best};
    // Largest cyclic subgroup plus the first element outside it.
    int x = -1, xo = 0;
    members.for_each([&](int g) {
      const int o = element_order(g);
      if (o > xo) x = g, xo = o;
    });
    const Bits cx = cyclic_subgroup(x);
    std::vector<int> gens{x};
    members.for_each([&](int g) {
      if (gens.size() == 1 && !cx.test(g)) {
        Bits two;
        two.set(x);
        two.set(g);
        Bits closure = span_members(two);
        if (closure == members) gens.push_back(g);
      }
    });
    if (gens.size() != 2) throw VerificationFailure("subgroup is not 2-generated");
    return gens;
  }

  friend bool operator==(const Group& a, const Group& b) { return a.m() == b.m() && a.q() == b.q(); }

 private:
  Group(int m, int q) {
    if (static_cast<long long>(m) * q > kMaxOrder)
      throw PreconditionError("group order exceeds supported maximum of " + std::to_string(kMaxOrder));
    auto t = std::make_shared<detail::GroupTables>();
    t->m = m;
    t->q = q;
    t->order = m * q;
    const auto n = static_cast<std::size_t>(t->order);
    t->add.resize(n * n);
    t->neg.resize(n);
    for (int x = 0; x < t->order; ++x) {
      const int xa = x / q, xb = x % q;
      t->neg[static_cast<std::size_t>(x)] =
          static_cast<std::uint16_t>(((m - xa) % m) * q + (q - xb) % q);
      for (int y = 0; y < t->order; ++y) {
        const int ya = y / q, yb = y % q;
        t->add[static_cast<std::size_t>(x) * n + static_cast<std::size_t>(y)] =
            static_cast<std::uint16_t>(((xa + ya) % m) * q + (xb + yb) % q);
      }
    }
    t_ = std::move(t);
    if (q == 1) {
      flavor_ = Flavor::Cyclic;
    } else if (detail::is_prime(q)) {
      int e = 0;
      long long v = 1;
      while (v < m) {
        v *= q;
        ++e;
      }
      if (v == m && e >= 1) {
        flavor_ = Flavor::PrimePowerPair;
        p_ = q;
        s_ = e;
      }
    }
  }

  [[nodiscard]] int m() const { return t_->m; }
  [[nodiscard]] int q() const { return t_->q; }

  static int pmod(int a, int n) { return ((a % n) + n) % n; }
  static long long pmodl(long long a, long long n) { return ((a % n) + n) % n; }

  [[nodiscard]] std::vector<Subgroup> enumerate_subgroups() const {
    // All groups here are 2-generated: every subgroup is <x, y> for cyclic
    // subgroups <x>, <y>. Joining distinct cyclic subgroups pairwise covers
    // them all.
    std::vector<std::pair<Bits, int>> cyclic;
    {
      std::set<std::vector<int>> seen;
      for (int g = 0; g < order(); ++g) {
        Bits c = cyclic_subgroup(g);
        if (seen.insert(c.indices()).second) cyclic.emplace_back(c, g);
      }
    }
    std::vector<Subgroup> out;
    std::set<std::vector<int>> seen;
    auto add_subgroup = [&](const Subgroup& h) {
      if (seen.insert(h.members.indices()).second) out.push_back(h);
    };
    for (std::size_t i = 0; i < cyclic.size(); ++i) {
      Subgroup h;
      h.members = cyclic[i].first;
      h.order = h.members.count();
      if (cyclic[i].second != identity()) h.generators = {cyclic[i].second};
      add_subgroup(h);
      for (std::size_t j = i + 1; j < cyclic.size(); ++j) {
        Bits gens;
        gens.set(cyclic[i].second);
        gens.set(cyclic[j].second);
        const Bits members = span_members(gens);
        if (seen.count(members.indices())) continue;
        add_subgroup(Subgroup{members, members.count(), minimal_generators(members)});
      }
    }
    std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
      if (a.order != b.order) return a.order < b.order;
      return lex_less(a.members, b.members);
    });
    return out;
  }

  std::shared_ptr<const detail::GroupTables> t_;
  Flavor flavor_ = Flavor::Product;
  int p_ = 0;
  int s_ = 0;
};

}  // namespace drcay
