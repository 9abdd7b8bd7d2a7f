#include "fanqec/chebyshev.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <iterator>
#include <mutex>
#include <nlohmann/json.hpp>
#include <shared_mutex>
#include <utility>

#include "fanqec/error.hpp"
#include "parallel.hpp"

namespace fanqec {

namespace {

// Memoized P_{k+2} = 2x P_{k+1} - P_k starting at a given index. Entries live
// in a deque so references handed out stay valid while the cache grows.
class RecurrenceCache {
 public:
  RecurrenceCache(int first_index, Poly p0, Poly p1) : first_(first_index) {
    items_.push_back(std::move(p0));
    items_.push_back(std::move(p1));
  }

  const Poly& get(int n) {
    if (n < first_) throw InvalidArgument("Chebyshev index below the family's first index");
    const auto slot = static_cast<std::size_t>(n - first_);
    {
      std::shared_lock lock(mu_);
      if (slot < items_.size()) return items_[slot];
    }
    std::unique_lock lock(mu_);
    const Poly two_x = Poly::monomial(2, 1);
    while (items_.size() <= slot) {
      const std::size_t k = items_.size();
      items_.push_back(two_x * items_[k - 1] - items_[k - 2]);
    }
    return items_[slot];
  }

 private:
  int first_;
  std::deque<Poly> items_;
  std::shared_mutex mu_;
};

RecurrenceCache& u_cache() {
  static RecurrenceCache c(-2, Poly{-1}, Poly{});
  return c;
}
RecurrenceCache& t_cache() {
  static RecurrenceCache c(0, Poly{1}, Poly{0, 1});
  return c;
}
RecurrenceCache& v_cache() {
  static RecurrenceCache c(0, Poly{1}, Poly{-1, 2});
  return c;
}
RecurrenceCache& w_cache() {
  static RecurrenceCache c(0, Poly{1}, Poly{1, 2});
  return c;
}

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw InvalidArgument(std::string(what) + ": index must be >= 0");
}

constexpr std::array<std::pair<FamilyTag, std::string_view>, 11> kFamilyNames{{
    {FamilyTag::U, "u"},
    {FamilyTag::T, "t"},
    {FamilyTag::V, "v"},
    {FamilyTag::W, "w"},
    {FamilyTag::Ue, "ue"},
    {FamilyTag::Uo, "uo"},
    {FamilyTag::Ucomp, "ucomp"},
    {FamilyTag::UeComp, "uecomp"},
    {FamilyTag::UoComp, "uocomp"},
    {FamilyTag::S, "s"},
    {FamilyTag::Phi, "phi"},
}};

}  // namespace

std::string_view family_name(FamilyTag tag) {
  for (const auto& [t, name] : kFamilyNames) {
    if (t == tag) return name;
  }
  return "?";
}

std::optional<FamilyTag> parse_family(std::string_view name) {
  for (const auto& [t, n] : kFamilyNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

int family_min_index(FamilyTag tag) { return tag == FamilyTag::U ? -2 : 0; }

const Poly& cheb_u(int n) { return u_cache().get(n); }

const Poly& cheb_t(int n) {
  require_nonnegative(n, "cheb_t");
  return t_cache().get(n);
}

const Poly& cheb_v(int n) {
  require_nonnegative(n, "cheb_v");
  return v_cache().get(n);
}

const Poly& cheb_w(int n) {
  require_nonnegative(n, "cheb_w");
  return w_cache().get(n);
}

Poly partial_e(int n) {
  require_nonnegative(n, "partial_e");
  const int m = n / 2;
  if (n % 2 == 0) return cheb_u(m) + cheb_u(m - 1);
  return cheb_u(m);
}

Poly partial_o(int n) {
  require_nonnegative(n, "partial_o");
  const int m = n / 2;
  if (n % 2 == 0) return cheb_u(m) - cheb_u(m - 1);
  return cheb_u(m + 1) - cheb_u(m - 1);
}

Poly compress(const Poly& p) {
  std::vector<BigInt> out(p.coeffs().begin(), p.coeffs().end());
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!mpz_divisible_2exp_p(out[k].get_mpz_t(), k)) {
      throw NotIntegral("coefficient of x^" + std::to_string(k) + " is not divisible by 2^" +
                        std::to_string(k));
    }
    mpz_tdiv_q_2exp(out[k].get_mpz_t(), out[k].get_mpz_t(), k);
  }
  return Poly(std::move(out));
}

Poly s_poly(int n) {
  require_nonnegative(n, "s_poly");
  const long m = n / 2;
  const Poly tail{2 * m + 1, 2 * m + 3};
  if (n % 2 == 0) {
    return Poly{2 * m - 1, 2 * m + 1} * cheb_u(m) - tail * cheb_u(m - 1);
  }
  return BigInt(2) * (Poly{-1, 2 * m - 1, 2 * m + 2} * cheb_u(m) - tail * cheb_u(m - 1));
}

Poly phi(int n) {
  require_nonnegative(n, "phi");
  const long nl = n;
  return Poly{-nl, -3, nl + 1} * cheb_u(n) + Poly{1, 1} * (cheb_u(n - 1) + Poly{1});
}

Poly family(FamilyTag tag, int n) {
  switch (tag) {
    case FamilyTag::U: return cheb_u(n);
    case FamilyTag::T: return cheb_t(n);
    case FamilyTag::V: return cheb_v(n);
    case FamilyTag::W: return cheb_w(n);
    case FamilyTag::Ue: return partial_e(n);
    case FamilyTag::Uo: return partial_o(n);
    case FamilyTag::Ucomp:
      require_nonnegative(n, "ucomp");
      return compress(cheb_u(n));
    case FamilyTag::UeComp: return compress(partial_e(n));
    case FamilyTag::UoComp: return compress(partial_o(n));
    case FamilyTag::S: return s_poly(n);
    case FamilyTag::Phi: return phi(n);
  }
  throw InvalidArgument("unknown family");
}

// ---------------------------------------------------------------------------
// Identity battery

namespace {

const Poly& two_x_poly() {
  static const Poly p = Poly::monomial(2, 1);
  return p;
}

// Per-n view of the families that records whether a negative U index was read.
class Families {
 public:
  explicit Families(const FamilySource& src) : src_(src) {}

  Poly U(int k) {
    if (k < 0) negative_ = true;
    return src_(FamilyTag::U, k);
  }
  Poly get(FamilyTag tag, int k) { return src_(tag, k); }

  bool take_negative() { return std::exchange(negative_, false); }

 private:
  const FamilySource& src_;
  bool negative_ = false;
};

struct Identity {
  std::string name;
  // Returns (lhs, rhs) at index n.
  std::function<std::pair<Poly, Poly>(Families&, int)> sides;
};

Poly scaled(long c, const Poly& p) { return BigInt(c) * p; }

const std::vector<Identity>& identities() {
  static const std::vector<Identity> ids = [] {
    const Poly one{1};
    const Poly xm1{-1, 1};  // x - 1
    const Poly xp1{1, 1};   // x + 1
    std::vector<Identity> v;

    v.push_back({"U[n] = Ue[n] Uo[n]", [](Families& f, int n) {
                   return std::pair{f.U(n), f.get(FamilyTag::Ue, n) * f.get(FamilyTag::Uo, n)};
                 }});
    v.push_back({"Ue[n] from U", [](Families& f, int n) {
                   const int m = n / 2;
                   Poly rhs = n % 2 == 0 ? f.U(m) + f.U(m - 1) : f.U(m);
                   return std::pair{f.get(FamilyTag::Ue, n), rhs};
                 }});
    v.push_back({"Uo[n] from U", [](Families& f, int n) {
                   const int m = n / 2;
                   Poly rhs = n % 2 == 0 ? f.U(m) - f.U(m - 1) : f.U(m + 1) - f.U(m - 1);
                   return std::pair{f.get(FamilyTag::Uo, n), rhs};
                 }});

    // Products of U.
    v.push_back({"U[n]^2 - U[n+1]U[n-1] = 1", [one](Families& f, int n) {
                   Poly un = f.U(n);
                   return std::pair{un * un - f.U(n + 1) * f.U(n - 1), one};
                 }});
    v.push_back({"U[2n] = (U[n]+U[n-1])(U[n]-U[n-1])", [](Families& f, int n) {
                   Poly a = f.U(n), b = f.U(n - 1);
                   return std::pair{f.U(2 * n), (a + b) * (a - b)};
                 }});
    v.push_back({"U[2n+1] = U[n](U[n+1]-U[n-1])", [](Families& f, int n) {
                   return std::pair{f.U(2 * n + 1), f.U(n) * (f.U(n + 1) - f.U(n - 1))};
                 }});
    v.push_back({"U[2n]-1 = U[n-1](U[n+1]-U[n-1])", [one](Families& f, int n) {
                   Poly b = f.U(n - 1);
                   return std::pair{f.U(2 * n) - one, b * (f.U(n + 1) - b)};
                 }});
    v.push_back({"U[2n+1]-1 = (U[n+1]-U[n])(U[n]+U[n-1])", [one](Families& f, int n) {
                   Poly a = f.U(n);
                   return std::pair{f.U(2 * n + 1) - one, (f.U(n + 1) - a) * (a + f.U(n - 1))};
                 }});
    v.push_back({"U[2n]+1 = U[n](U[n]-U[n-2])", [one](Families& f, int n) {
                   Poly a = f.U(n);
                   return std::pair{f.U(2 * n) + one, a * (a - f.U(n - 2))};
                 }});
    v.push_back({"U[2n+1]+1 = (U[n+1]+U[n])(U[n]-U[n-1])", [one](Families& f, int n) {
                   Poly a = f.U(n);
                   return std::pair{f.U(2 * n + 1) + one, (f.U(n + 1) + a) * (a - f.U(n - 1))};
                 }});

    // Mixed sums of consecutive U.
    v.push_back({"U[2n]-U[2n-1]-1 = 2(x-1)U[n-1](U[n]+U[n-1])", [one, xm1](Families& f, int n) {
                   Poly b = f.U(n - 1);
                   return std::pair{f.U(2 * n) - f.U(2 * n - 1) - one,
                                    scaled(2, xm1) * b * (f.U(n) + b)};
                 }});
    v.push_back({"U[2n]+U[2n-1]-1 = 2(x+1)U[n-1](U[n]-U[n-1])", [one, xp1](Families& f, int n) {
                   Poly b = f.U(n - 1);
                   return std::pair{f.U(2 * n) + f.U(2 * n - 1) - one,
                                    scaled(2, xp1) * b * (f.U(n) - b)};
                 }});
    v.push_back({"U[2n]-U[2n-1]+1 = (U[n]-U[n-1])(U[n]-U[n-2])", [one](Families& f, int n) {
                   Poly a = f.U(n);
                   return std::pair{f.U(2 * n) - f.U(2 * n - 1) + one,
                                    (a - f.U(n - 1)) * (a - f.U(n - 2))};
                 }});
    v.push_back({"U[2n]+U[2n-1]+1 = (U[n]+U[n-1])(U[n]-U[n-2])", [one](Families& f, int n) {
                   Poly a = f.U(n);
                   return std::pair{f.U(2 * n) + f.U(2 * n - 1) + one,
                                    (a + f.U(n - 1)) * (a - f.U(n - 2))};
                 }});
    v.push_back({"U[2n+1]-U[2n]-1 = 2(x-1)U[n](U[n]+U[n-1])", [one, xm1](Families& f, int n) {
                   Poly a = f.U(n);
                   return std::pair{f.U(2 * n + 1) - f.U(2 * n) - one,
                                    scaled(2, xm1) * a * (a + f.U(n - 1))};
                 }});
    v.push_back({"U[2n+1]+U[2n]+1 = 2(x+1)U[n](U[n]-U[n-1])", [one, xp1](Families& f, int n) {
                   Poly a = f.U(n);
                   return std::pair{f.U(2 * n + 1) + f.U(2 * n) + one,
                                    scaled(2, xp1) * a * (a - f.U(n - 1))};
                 }});
    v.push_back({"U[2n+1]-U[2n]+1 = (U[n]-U[n-1])(U[n+1]-U[n-1])", [one](Families& f, int n) {
                   Poly b = f.U(n - 1);
                   return std::pair{f.U(2 * n + 1) - f.U(2 * n) + one,
                                    (f.U(n) - b) * (f.U(n + 1) - b)};
                 }});
    v.push_back({"U[2n+1]+U[2n]-1 = (U[n]+U[n-1])(U[n+1]-U[n-1])", [one](Families& f, int n) {
                   Poly b = f.U(n - 1);
                   return std::pair{f.U(2 * n + 1) + f.U(2 * n) - one,
                                    (f.U(n) + b) * (f.U(n + 1) - b)};
                 }});

    // Compressed families are monic with integer coefficients. On failure the
    // rhs is the expected leading coefficient.
    auto monic = [one](FamilyTag tag) {
      return [one, tag](Families& f, int n) {
        Poly p = f.get(tag, n);
        try {
          Poly q = compress(p);
          if (q.is_zero() || q.leading() != 1) return std::pair{q, one};
          return std::pair{one, one};
        } catch (const NotIntegral&) {
          return std::pair{p, one};
        }
      };
    };
    v.push_back({"U[n](x/2) monic integral", monic(FamilyTag::U)});
    v.push_back({"Ue[n](x/2) monic integral", monic(FamilyTag::Ue)});
    v.push_back({"Uo[n](x/2) monic integral", monic(FamilyTag::Uo)});

    v.push_back({"Ue[2n] = W[n]", [](Families& f, int n) {
                   return std::pair{f.get(FamilyTag::Ue, 2 * n), f.get(FamilyTag::W, n)};
                 }});
    v.push_back({"Uo[2n] = V[n]", [](Families& f, int n) {
                   return std::pair{f.get(FamilyTag::Uo, 2 * n), f.get(FamilyTag::V, n)};
                 }});
    v.push_back({"Ue[2n+1] = U[n]", [](Families& f, int n) {
                   return std::pair{f.get(FamilyTag::Ue, 2 * n + 1), f.U(n)};
                 }});
    v.push_back({"Uo[2n+1] = 2T[n+1]", [](Families& f, int n) {
                   return std::pair{f.get(FamilyTag::Uo, 2 * n + 1),
                                    scaled(2, f.get(FamilyTag::T, n + 1))};
                 }});

    v.push_back({"phi[n] = (x-1) Ue[n] S[n]", [xm1](Families& f, int n) {
                   return std::pair{f.get(FamilyTag::Phi, n),
                                    xm1 * f.get(FamilyTag::Ue, n) * f.get(FamilyTag::S, n)};
                 }});
    // On failure lhs is S[n], rhs the reconstructed product (or empty when the
    // division itself failed).
    v.push_back({"(x-1) divides S[n]", [xm1](Families& f, int n) {
                   Poly s = f.get(FamilyTag::S, n);
                   try {
                     return std::pair{s, xm1 * poly_divexact(s, xm1)};
                   } catch (const NotDivisible&) {
                     return std::pair{s, Poly{}};
                   }
                 }});

    // Each partial subsequence obeys the three-term recurrence in its own index k.
    auto recurrence = [](FamilyTag tag, int parity) {
      return [tag, parity](Families& f, int k) {
        auto at = [&](int j) { return f.get(tag, 2 * j + parity); };
        return std::pair{at(k + 2), two_x_poly() * at(k + 1) - at(k)};
      };
    };
    v.push_back({"Ue[2k] three-term recurrence", recurrence(FamilyTag::Ue, 0)});
    v.push_back({"Uo[2k] three-term recurrence", recurrence(FamilyTag::Uo, 0)});
    v.push_back({"Ue[2k+1] three-term recurrence", recurrence(FamilyTag::Ue, 1)});
    v.push_back({"Uo[2k+1] three-term recurrence", recurrence(FamilyTag::Uo, 1)});

    std::sort(v.begin(), v.end(), [](const Identity& a, const Identity& b) { return a.name < b.name; });
    return v;
  }();
  return ids;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& id : identities()) out.push_back(id.name);
    return out;
  }();
  return names;
}

bool IdentityReport::all_passed() const {
  return std::all_of(checked.begin(), checked.end(), [](const IdentityCheck& c) { return c.pass; });
}

std::vector<IdentityCheck> IdentityReport::failures() const {
  std::vector<IdentityCheck> out;
  std::copy_if(checked.begin(), checked.end(), std::back_inserter(out),
               [](const IdentityCheck& c) { return !c.pass; });
  return out;
}

std::string IdentityReport::to_json() const {
  // Coefficients are emitted as bare JSON integers of arbitrary length.
  std::string s = "{\"max_n\":" + std::to_string(max_n) +
                  ",\"checked\":" + std::to_string(checked.size()) + ",\"failures\":[";
  bool first = true;
  for (const auto& c : checked) {
    if (c.pass) continue;
    if (!first) s += ",";
    first = false;
    s += "{\"identity\":" + nlohmann::json(c.identity).dump() + ",\"n\":" + std::to_string(c.n) +
         ",\"lhs\":" + to_json_array(c.lhs) + ",\"rhs\":" + to_json_array(c.rhs) + "}";
  }
  return s + "]}";
}

IdentityReport identity_suite(int max_n, const FamilySource& source, unsigned threads) {
  if (max_n < 0) throw InvalidArgument("identity_suite: max_n must be >= 0");
  const auto& ids = identities();
  const auto count = static_cast<std::size_t>(max_n) + 1;

  // results[n][i] for identity i
  std::vector<std::vector<IdentityCheck>> results(count);
  detail::parallel_for(
      0, max_n + 1,
      [&](int n) {
        Families fam(source);
        auto& row = results[n];
        row.reserve(ids.size());
        for (const auto& id : ids) {
          IdentityCheck c;
          c.identity = id.name;
          c.n = n;
          try {
            auto [lhs, rhs] = id.sides(fam, n);
            c.pass = lhs == rhs;
            if (!c.pass) {
              c.lhs = std::move(lhs);
              c.rhs = std::move(rhs);
            }
          } catch (const Error&) {
            c.pass = false;
          }
          c.uses_negative_index = fam.take_negative();
          row.push_back(std::move(c));
        }
      },
      threads);

  IdentityReport report;
  report.max_n = max_n;
  report.checked.reserve(count * ids.size());
  // Identities are already sorted by name; emit identity-major.
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t n = 0; n < count; ++n) report.checked.push_back(std::move(results[n][i]));
  }
  return report;
}

}  // namespace fanqec
