#include "ordconv/harness.hpp"

#include <algorithm>
#include <random>

#include "ordconv/extremality.hpp"
#include "ordconv/representation.hpp"

namespace ordconv {

// --- fixtures ---------------------------------------------------------------

Qoset chain(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    if (i + 1 < n) pairs.emplace_back(i, i + 1);
  }
  return Qoset(std::move(labels), pairs);
}

Qoset antichain_qoset(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return Qoset(std::move(labels), {});
}

Qoset p4() {
  return Qoset({"y1", "y2", "x1", "x2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

Qoset diamond() {
  return Qoset({"bot", "a", "b", "top"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

Qoset pentagon() {
  return Qoset({"bot", "a", "b", "c", "top"}, {{0, 1}, {1, 4}, {0, 2}, {2, 3}, {3, 4}});
}

Qoset equiv_pair() { return Qoset({"a", "b"}, {{0, 1}, {1, 0}}); }

Qoset hd_truncation(int k) {
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back("y" + std::to_string(i));
  for (int i = 1; i <= k; ++i) labels.push_back("x" + std::to_string(i));
  std::vector<std::pair<int, int>> pairs;
  for (int j = 0; j < k; ++j) pairs.emplace_back(0, k + j);  // y1 below every x
  for (int i = 1; i < k; ++i)
    for (int j = 0; j <= i; ++j) pairs.emplace_back(i, k + j);
  return Qoset(std::move(labels), pairs);
}

std::vector<PreclosureOp> builtin_catalog(const Qoset& q) {
  std::vector<PreclosureOp> out;
  for (BuiltinKind k : {BuiltinKind::down, BuiltinKind::up, BuiltinKind::dm, BuiltinKind::inf_closed,
                        BuiltinKind::upper_inf_closed, BuiltinKind::filter_generated, BuiltinKind::ranzato_p,
                        BuiltinKind::ranzato_q}) {
    PreclosureOp op = PreclosureOp::builtin_op(k, q);
    out.push_back(q.size() <= kTableCap ? materialize(op) : op);
  }
  return out;
}

// --- enumeration ------------------------------------------------------------

std::vector<Qoset> enum_posets(int n) {
  if (n < 0 || n > 5) throw CapExceeded("poset enumeration supports n <= 5");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<int> reverse(slots.size());
  for (std::size_t b = 0; b < slots.size(); ++b)
    for (std::size_t r = 0; r < slots.size(); ++r)
      if (slots[r].first == slots[b].second && slots[r].second == slots[b].first)
        reverse[b] = static_cast<int>(r);

  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));

  std::vector<Qoset> out;
  std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<Subset> up(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool antisym = true;
    for (std::size_t b = 0; b < slots.size() && antisym; ++b)
      if ((mask >> b & 1) && (mask >> reverse[b] & 1)) antisym = false;
    if (!antisym) continue;
    for (int i = 0; i < n; ++i) up[i] = Subset::single(i);
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1) up[slots[b].first] |= Subset::single(slots[b].second);
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j : up[i].members())
        if (!up[j].subset_of(up[i])) {
          transitive = false;
          break;
        }
    if (!transitive) continue;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t b = 0; b < slots.size(); ++b)
      if (mask >> b & 1) pairs.push_back(slots[b]);
    out.emplace_back(labels, pairs);
    if (n == 0) break;
  }
  return out;
}

std::uint64_t count_posets_brute(int n) {
  if (n < 0 || n > 5) throw CapExceeded("brute poset count supports n <= 5");
  if (n == 0) return 1;
  std::uint64_t count = 0;
  std::uint64_t rowmask = (std::uint64_t{1} << n) - 1;
  std::uint64_t total = std::uint64_t{1} << (n * n);
  for (std::uint64_t rel = 0; rel < total; ++rel) {
    bool ok = true;
    std::uint64_t rows[5];
    for (int i = 0; i < n; ++i) {
      rows[i] = (rel >> (i * n)) & rowmask;
      if (!(rows[i] >> i & 1)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n; ++j)
        if ((rows[i] >> j & 1) && (rows[j] >> i & 1)) {
          ok = false;
          break;
        }
    for (int i = 0; i < n && ok; ++i) {
      std::uint64_t r = rows[i];
      while (r) {
        int j = std::countr_zero(r);
        r &= r - 1;
        if ((rows[j] & ~rows[i]) != 0) {
          ok = false;
          break;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

std::vector<std::vector<Subset>> enum_moore(int n) {
  if (n < 0 || n > 4) throw CapExceeded("Moore family enumeration supports n <= 4");
  int subs = 1 << n;
  int carrier = subs - 1;  // index of E
  std::vector<std::vector<Subset>> out;
  std::uint64_t total = std::uint64_t{1} << carrier;
  for (std::uint64_t fam = 0; fam < total; ++fam) {
    std::uint64_t members = fam | (std::uint64_t{1} << carrier);
    bool closed = true;
    for (std::uint64_t bs = members; bs && closed; bs &= bs - 1) {
      int s = std::countr_zero(bs);
      for (std::uint64_t bt = bs & (bs - 1); bt; bt &= bt - 1) {
        int t = std::countr_zero(bt);
        if (!(members >> (s & t) & 1)) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<Subset> family;
    for (int s = 0; s < subs; ++s)
      if (members >> s & 1) family.push_back(Subset(static_cast<std::uint64_t>(s)));
    out.push_back(std::move(family));
  }
  return out;
}

std::uint64_t count_moore_brute(int n) {
  if (n < 0 || n > 3) throw CapExceeded("brute Moore count supports n <= 3");
  // closure operators are in bijection with Moore families; walk the
  // extensive tables c(A) = A ∪ X_A with a mixed-radix odometer
  int subs = 1 << n;
  Subset full = Subset::full(n);
  std::vector<Subset> img(subs);
  std::vector<std::uint64_t> extra(subs, 0);
  std::uint64_t count = 0;
  while (true) {
    for (int a = 0; a < subs; ++a) {
      Subset sa{static_cast<std::uint64_t>(a)};
      // spread the odometer digit over the complement of a
      std::uint64_t x = 0, digit = extra[a], comp = (full - sa).bits();
      while (digit) {
        int bit = std::countr_zero(comp);
        if (digit & 1) x |= std::uint64_t{1} << bit;
        comp &= comp - 1;
        digit >>= 1;
      }
      img[a] = sa | Subset(x);
    }
    bool monotone = true, idem = true;
    for (int a = 0; a < subs && monotone; ++a) {
      Subset sa{static_cast<std::uint64_t>(a)};
      for (int i = 0; i < n; ++i)
        if (!sa.test(i) && !img[a].subset_of(img[sa.with(i).bits()])) monotone = false;
      if (img[img[a].bits()] != img[a]) idem = false;
    }
    if (monotone && idem) ++count;
    int pos = 0;
    for (; pos < subs; ++pos) {
      int width = n - Subset{static_cast<std::uint64_t>(pos)}.count();
      if (extra[pos] + 1 < (std::uint64_t{1} << width)) {
        ++extra[pos];
        break;
      }
      extra[pos] = 0;
    }
    if (pos == subs) break;
  }
  return count;
}

PreclosureOp random_preclosure(int n, std::uint64_t seed) {
  if (n < 0 || n > 6) throw CapExceeded("random preclosure supports n <= 6");
  std::mt19937_64 rng(seed);
  std::uint64_t size = std::uint64_t{1} << n;
  std::uint64_t full = Subset::full(n).bits();
  std::vector<Subset> img(size);
  for (std::uint64_t a = 0; a < size; ++a) {
    Subset acc{(rng() & full) | a};
    for (int i : Subset{a}.members()) acc |= img[a & ~(std::uint64_t{1} << i)];
    img[a] = acc;
  }
  return PreclosureOp::table(std::move(img));
}

// --- Galois embeddings -------------------------------------------------------

PreclosureOp pullback(const PreclosureOp& op2, int n, const std::vector<int>& emb) {
  PreclosureOp inner = op2;
  std::vector<int> map = emb;
  return PreclosureOp::from_function(n, "pullback", [inner, map, n](Subset a) {
    Subset image;
    for (int i : a.members()) image |= Subset::single(map[i]);
    Subset closed = inner(image);
    Subset out;
    for (int i = 0; i < n; ++i)
      if (closed.test(map[i])) out |= Subset::single(i);
    return out;
  });
}

namespace {

Subset map_image(const std::vector<int>& f, Subset a) {
  Subset out;
  for (int i : a.members()) out |= Subset::single(f[i]);
  return out;
}

Subset map_preimage(const std::vector<int>& f, int n, Subset a) {
  Subset out;
  for (int i = 0; i < n; ++i)
    if (a.test(f[i])) out |= Subset::single(i);
  return out;
}

bool pointwise_equal(const PreclosureOp& a, const PreclosureOp& b) {
  int n = a.carrier_size();
  std::uint64_t size = std::uint64_t{1} << n;
  for (std::uint64_t m = 0; m < size; ++m)
    if (a(Subset{m}) != b(Subset{m})) return false;
  return true;
}

}  // namespace

GaloisReport galois_check(const Qoset& e, const PreclosureOp& c, const Qoset& e2,
                          const PreclosureOp& c2, const std::vector<int>& emb,
                          const std::vector<int>& retr) {
  GaloisReport r;
  int n = e.size(), n2 = e2.size();
  auto fail = [&](const char* what) {
    r.preconditions_ok = false;
    r.failed_precondition = what;
    return r;
  };
  if (static_cast<int>(emb.size()) != n || static_cast<int>(retr.size()) != n2)
    return fail("map arity");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (e.leq(x, y) && !e2.leq(emb[x], emb[y])) return fail("embedding not order-preserving");
  for (int x = 0; x < n2; ++x)
    for (int y = 0; y < n2; ++y)
      if (e2.leq(x, y) && !e.leq(retr[x], retr[y])) return fail("retraction not order-preserving");
  for (int x = 0; x < n; ++x)
    if (retr[emb[x]] != x) return fail("retraction does not invert the embedding");
  for (int x = 0; x < n2; ++x)
    if (!e2.leq(emb[retr[x]], x)) return fail("embedding-retraction not deflationary");
  std::uint64_t size = std::uint64_t{1} << n;
  std::uint64_t size2 = std::uint64_t{1} << n2;
  for (std::uint64_t m = 0; m < size; ++m) {
    Subset a{m};
    if (!map_image(emb, c(a)).subset_of(c2(map_image(emb, a))))
      return fail("embedding not continuous");
  }
  for (std::uint64_t m = 0; m < size2; ++m) {
    Subset a{m};
    if (!map_image(retr, c2(a)).subset_of(c(map_image(retr, a))))
      return fail("retraction not continuous");
  }
  r.preconditions_ok = true;

  EnrichedContext ctx(e, c, ContextOrder::primary);
  EnrichedContext ctx2(e2, c2, ContextOrder::primary);
  EnrichedContext up_ctx(e, conv_order(c, e, Dir::up), ContextOrder::equivalence);
  EnrichedContext up_ctx2(e2, conv_order(c2, e2, Dir::up), ContextOrder::equivalence);

  r.compact_transfer_ok = r.extreme_transfer_ok = true;
  for (std::uint64_t m = 0; m < size; ++m) {
    Subset a{m};
    Subset pre = map_preimage(retr, n2, a);  // retr⁻¹(A)
    Subset cp1 = compact_points(ctx, a);
    Subset cp2 = compact_points(ctx2, pre);
    Subset ex1 = extreme_points(up_ctx, a);
    Subset ex2 = extreme_points(up_ctx2, pre);
    for (int x = 0; x < n; ++x) {
      if (a.test(x) && cp1.test(x) != cp2.test(emb[x])) r.compact_transfer_ok = false;
      if (a.test(x) && ex1.test(x) != ex2.test(emb[x])) r.extreme_transfer_ok = false;
    }
  }

  r.pullback_convolution_ok = true;
  PreclosureOp up2 = PreclosureOp::builtin_op(BuiltinKind::up, e2);
  for (const PreclosureOp& s2 : {c2, up2}) {
    PreclosureOp lhs = convolve(pullback(c2, n, emb), pullback(s2, n, emb));
    PreclosureOp rhs = pullback(convolve(c2, s2), n, emb);
    if (!pointwise_equal(lhs, rhs)) r.pullback_convolution_ok = false;
  }
  return r;
}

// Random kernel-map embeddings: pick a poset, pick a subset on which every
// principal ideal has a greatest member inside it, retract onto it.
std::vector<GaloisSample> galois_samples(int count, std::uint64_t seed) {
  std::vector<GaloisSample> out;
  std::mt19937_64 rng(seed);
  std::vector<std::vector<Qoset>> posets;
  for (int n = 0; n <= 4; ++n) posets.push_back(n >= 2 ? enum_posets(n) : std::vector<Qoset>{});
  int guard = 0;
  while (static_cast<int>(out.size()) < count && ++guard < 100000) {
    int n2 = 2 + static_cast<int>(rng() % 3);
    const Qoset& e2 = posets[n2][rng() % posets[n2].size()];
    std::uint64_t smask = 1 + rng() % (Subset::full(n2).bits());
    Subset s{smask};
    std::vector<int> retr(n2, -1);
    bool good = true;
    for (int x = 0; x < n2 && good; ++x) {
      Subset below = e2.down(x) & s;
      Subset top = e2.maximal_elements(below, Pole::max);
      if (top.count() != 1 || !below.subset_of(e2.down(top.min_element()))) {
        good = false;
        break;
      }
      retr[x] = top.min_element();
    }
    if (!good) continue;
    std::vector<int> emb;
    for (int i : s.members()) emb.push_back(i);
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t a = 0; a < emb.size(); ++a) {
      labels.push_back(e2.label(emb[a]));
      for (std::size_t b = 0; b < emb.size(); ++b)
        if (e2.leq(emb[a], emb[b])) pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    Qoset e(labels, pairs);
    std::vector<int> retr_local(n2);
    for (int x = 0; x < n2; ++x) {
      auto it = std::find(emb.begin(), emb.end(), retr[x]);
      retr_local[x] = static_cast<int>(it - emb.begin());
    }
    PreclosureOp c2 = out.size() % 2 == 0 ? PreclosureOp::builtin_op(BuiltinKind::down, e2)
                                          : PreclosureOp::builtin_op(BuiltinKind::dm, e2);
    PreclosureOp c = pullback(c2, static_cast<int>(emb.size()), emb);
    GaloisSample g{e, c, e2, c2, emb, retr_local};
    // only genuine embeddings of enriched qosets are samples
    GaloisReport pre = galois_check(g.e, g.c, g.e2, g.c2, g.emb, g.retr);
    if (!pre.preconditions_ok) continue;
    out.push_back(std::move(g));
  }
  return out;
}


// --- counterexample hunting --------------------------------------------------

std::vector<std::string> hunt_properties() {
  return {"irr-not-strirr", "irr-with-upper-not-strirr", "strirr-not-rmax", "rmax-vs-irr",
          "riesz-noncollapse"};
}

std::optional<HuntResult> counterexample_search(const std::string& property, int n_max) {
  auto known = hunt_properties();
  if (std::find(known.begin(), known.end(), property) == known.end())
    throw InputError("unknown hunt property: " + property);
  for (int n = 1; n <= n_max; ++n) {
    auto posets = enum_posets(n);
    for (std::uint64_t idx = 0; idx < posets.size(); ++idx) {
      const Qoset& q = posets[idx];
      Subset irr = irreducible(q);
      Subset rmax = relatively_maximal(q);
      Subset strirr = strongly_irreducible(q);
      auto witness = [&](int x, const std::string& why) {
        HuntResult h;
        h.n = n;
        h.poset_index = idx;
        std::string rel;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (i != j && q.leq(i, j)) rel += " " + std::to_string(i) + "<=" + std::to_string(j);
        h.detail = "element " + std::to_string(x) + " " + why + "; relation:" +
                   (rel.empty() ? " (discrete)" : rel);
        return h;
      };
      if (property == "irr-not-strirr") {
        Subset hit = irr - strirr;
        if (!hit.empty()) return witness(hit.min_element(), "irreducible, not strongly irreducible");
      } else if (property == "irr-with-upper-not-strirr") {
        for (int x : (irr - strirr).members())
          if (!q.strictly_up(x).empty())
            return witness(x, "irreducible with nonempty strict up-set, not strongly irreducible");
      } else if (property == "strirr-not-rmax") {
        Subset hit = strirr - rmax;
        if (!hit.empty())
          return witness(hit.min_element(), "strongly irreducible, not relatively-maximal");
      } else if (property == "rmax-vs-irr") {
        Subset diff = (rmax - irr) | (irr - rmax);
        if (!diff.empty()) return witness(diff.min_element(), "rMax and Irr differ");
      } else if (property == "riesz-noncollapse") {
        if (q.is_riesz() && strirr != irr)
          return witness((irr - strirr).min_element(), "Riesz without the collapse");
      }
    }
  }
  return std::nullopt;
}

}  // namespace ordconv
